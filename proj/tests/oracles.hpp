#pragma once

// Test-only oracles, kept independent of the library's representation
// machinery: literal Dirac-basis gamma matrices with generic complex matrix
// arithmetic, a Levi-Civita symbol evaluated by permutation enumeration, and
// small random helpers.

#include <array>
#include <complex>
#include <random>

#include "stadirac/complex_multivector.hpp"

namespace oracles {

using cd = std::complex<double>;
using M4 = std::array<std::array<cd, 4>, 4>;

inline M4 m4_zero() { return {}; }

inline M4 m4_identity() {
    M4 m{};
    for (int i = 0; i < 4; ++i) m[i][i] = 1.0;
    return m;
}

inline M4 mul(const M4& a, const M4& b) {
    M4 out{};
    for (int r = 0; r < 4; ++r)
        for (int k = 0; k < 4; ++k)
            for (int c = 0; c < 4; ++c) out[r][c] += a[r][k] * b[k][c];
    return out;
}

inline M4 add(const M4& a, const M4& b) {
    M4 out{};
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) out[r][c] = a[r][c] + b[r][c];
    return out;
}

inline M4 scale(const M4& a, cd s) {
    M4 out{};
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) out[r][c] = a[r][c] * s;
    return out;
}

inline double max_abs_diff(const M4& a, const M4& b) {
    double d = 0.0;
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) d = std::max(d, std::abs(a[r][c] - b[r][c]));
    return d;
}

/// Dirac-basis gamma matrices written out entry by entry.
inline M4 gamma(int mu) {
    const cd i{0.0, 1.0};
    M4 m{};
    switch (mu) {
        case 0:
            m[0][0] = 1; m[1][1] = 1; m[2][2] = -1; m[3][3] = -1;
            break;
        case 1:
            m[0][3] = 1; m[1][2] = 1; m[2][1] = -1; m[3][0] = -1;
            break;
        case 2:
            m[0][3] = -i; m[1][2] = i; m[2][1] = i; m[3][0] = -i;
            break;
        case 3:
            m[0][2] = 1; m[1][3] = -1; m[2][0] = -1; m[3][1] = 1;
            break;
    }
    return m;
}

/// Matrix image of a basis blade (ascending factor order), independent of the
/// library's tables.
inline M4 blade_image(unsigned mask) {
    M4 m = m4_identity();
    for (int k = 0; k < 4; ++k)
        if (mask & (1u << k)) m = mul(m, gamma(k));
    return m;
}

inline M4 image(const stadirac::Multivector& x) {
    M4 out{};
    for (unsigned mask = 0; mask < 16; ++mask) {
        if (x[mask] == 0.0) continue;
        out = add(out, scale(blade_image(mask), x[mask]));
    }
    return out;
}

inline M4 image(const stadirac::ComplexMultivector& x) {
    return add(image(x.re), scale(image(x.im), cd{0.0, 1.0}));
}

inline M4 conj_entrywise(const M4& a) {
    M4 out{};
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) out[r][c] = std::conj(a[r][c]);
    return out;
}

/// eps^{abcd} with eps^{0123} = +1, by permutation parity.
inline int levi_civita(int a, int b, int c, int d) {
    int p[4] = {a, b, c, d};
    if (((1 << a) | (1 << b) | (1 << c) | (1 << d)) != 0xF) return 0;
    int sign = 1;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 3 - i; ++j)
            if (p[j] > p[j + 1]) {
                std::swap(p[j], p[j + 1]);
                sign = -sign;
            }
    return sign;
}

inline double uniform_pm1(std::mt19937_64& rng) {
    return 2.0 * ((rng() >> 11) * 0x1.0p-53) - 1.0;
}

inline stadirac::Multivector random_multivector(std::mt19937_64& rng) {
    stadirac::Multivector m;
    for (unsigned mask = 0; mask < 16; ++mask) m.set_coefficient(mask, uniform_pm1(rng));
    return m;
}

inline stadirac::ComplexMultivector random_complex(std::mt19937_64& rng) {
    return {random_multivector(rng), random_multivector(rng)};
}

inline stadirac::DiracFieldValue random_field_value(std::mt19937_64& rng) {
    using stadirac::even_part;
    using stadirac::odd_part;
    const stadirac::Multivector a = random_multivector(rng);
    const stadirac::Multivector b = random_multivector(rng);
    return stadirac::DiracFieldValue::from_constituents(even_part(a), odd_part(a),
                                                        even_part(b), odd_part(b));
}

}  // namespace oracles
