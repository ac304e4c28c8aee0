#pragma once

// Real spacetime algebra Cl(1,3): 16-coefficient multivectors over the
// canonical blade basis, with exact integer structure signs.
//
// Blade encoding: a 4-bit mask, bit k set means the basis vector gamma^k
// (upper index) is present; vectors inside a blade are ordered by ascending
// index. The metric is (+,-,-,-). The unit pseudoscalar follows the
// lower-index convention I = gamma_0 gamma_1 gamma_2 gamma_3, which equals
// MINUS the mask-1111 blade gamma^0 gamma^1 gamma^2 gamma^3.

#include <array>
#include <bit>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace stadirac {

inline constexpr int blade_count = 16;
inline constexpr std::array<double, 4> metric_diag{+1.0, -1.0, -1.0, -1.0};

constexpr int blade_grade(unsigned mask) { return std::popcount(mask & 0xFu); }

namespace detail {

// Number of adjacent transpositions needed to interleave the ascending
// vectors of blade `a` with those of blade `b`.
constexpr int reorder_swaps(unsigned a, unsigned b) {
    int swaps = 0;
    a >>= 1;
    while (a != 0) {
        swaps += std::popcount(a & b);
        a >>= 1;
    }
    return swaps;
}

// Sign of the product of basis blades a and b: transposition parity times a
// metric factor for every repeated vector. Always exactly +1 or -1.
constexpr int basis_product_sign(unsigned a, unsigned b) {
    int sign = (reorder_swaps(a, b) % 2 == 0) ? 1 : -1;
    unsigned common = a & b;
    for (unsigned k = 0; k < 4; ++k) {
        if (common & (1u << k)) sign *= (metric_diag[k] > 0 ? 1 : -1);
    }
    return sign;
}

struct BladeTables {
    std::array<std::array<std::int8_t, 16>, 16> sign{};
    std::array<std::array<std::uint8_t, 16>, 16> mask{};
    std::array<std::int8_t, 16> reverse_sign{};
    std::array<std::int8_t, 16> involution_sign{};
};

constexpr BladeTables make_blade_tables() {
    BladeTables t{};
    for (unsigned a = 0; a < 16; ++a) {
        for (unsigned b = 0; b < 16; ++b) {
            t.sign[a][b] = static_cast<std::int8_t>(basis_product_sign(a, b));
            t.mask[a][b] = static_cast<std::uint8_t>(a ^ b);
        }
        const int g = blade_grade(a);
        t.reverse_sign[a] = static_cast<std::int8_t>((g * (g - 1) / 2) % 2 == 0 ? 1 : -1);
        t.involution_sign[a] = static_cast<std::int8_t>(g % 2 == 0 ? 1 : -1);
    }
    return t;
}

inline constexpr BladeTables blade_tables = make_blade_tables();

}  // namespace detail

class Multivector {
public:
    constexpr Multivector() = default;

    static constexpr Multivector zero() { return Multivector{}; }

    static constexpr Multivector scalar(double value) {
        Multivector m;
        m.c_[0] = value;
        return m;
    }

    /// Unit blade for a 4-bit mask, in canonical ascending order.
    static constexpr Multivector basis_blade(unsigned mask, double coeff = 1.0) {
        if (mask >= 16) throw std::domain_error("basis_blade: mask out of range");
        Multivector m;
        m.c_[mask] = coeff;
        return m;
    }

    /// gamma^mu
    static constexpr Multivector basis_vector(int mu) {
        if (mu < 0 || mu > 3) throw std::domain_error("basis_vector: index out of range");
        return basis_blade(1u << mu);
    }

    /// I = gamma_0 gamma_1 gamma_2 gamma_3 = -(mask-1111 blade); I*I = -1.
    static constexpr Multivector pseudoscalar() { return basis_blade(15, -1.0); }

    /// I gamma^mu, the basis the pseudovector components pair with.
    static constexpr Multivector pseudovector_basis(int mu);

    static constexpr Multivector from_coefficients(const std::array<double, 16>& c) {
        Multivector m;
        m.c_ = c;
        return m;
    }

    constexpr double coefficient(unsigned mask) const {
        if (mask >= 16) throw std::domain_error("coefficient: mask out of range");
        return c_[mask];
    }
    constexpr void set_coefficient(unsigned mask, double value) {
        if (mask >= 16) throw std::domain_error("set_coefficient: mask out of range");
        c_[mask] = value;
    }
    constexpr double operator[](unsigned mask) const { return c_[mask]; }
    constexpr const std::array<double, 16>& coefficients() const { return c_; }

    // --- named component accessors (lower-index conventions) ----------------

    constexpr double scalar_component() const { return c_[0]; }
    constexpr void set_scalar_component(double v) { c_[0] = v; }

    /// v_mu, stored on the gamma^mu blade.
    constexpr double vector_component(int mu) const { return c_[vector_mask(mu)]; }
    constexpr void set_vector_component(int mu, double v) { c_[vector_mask(mu)] = v; }

    /// F_{mu nu}, antisymmetric; stored on the gamma^mu ^ gamma^nu blade for mu < nu.
    constexpr double bivector_component(int mu, int nu) const {
        auto [mask, sign] = bivector_mask(mu, nu);
        return sign * c_[mask];
    }
    constexpr void set_bivector_component(int mu, int nu, double v) {
        auto [mask, sign] = bivector_mask(mu, nu);
        c_[mask] = sign * v;
    }

    /// p_mu, paired with I gamma^mu.
    constexpr double pseudovector_component(int mu) const {
        auto [mask, sign] = pseudovector_mask(mu);
        return sign * c_[mask];
    }
    constexpr void set_pseudovector_component(int mu, double v) {
        auto [mask, sign] = pseudovector_mask(mu);
        c_[mask] = sign * v;
    }

    /// g, paired with I (so the stored mask-1111 coefficient is -g).
    constexpr double pseudoscalar_component() const { return -c_[15]; }
    constexpr void set_pseudoscalar_component(double v) { c_[15] = -v; }

    /// E_i = F^{i0}; equals the stored F_{0i} component. i in {1,2,3}.
    constexpr double electric(int i) const { return bivector_component(0, spatial(i)); }
    constexpr void set_electric(int i, double v) { set_bivector_component(0, spatial(i), v); }

    /// B_i = -(1/2) eps^{ijk} F^{jk}: B_1 = -F_23, B_2 = F_13, B_3 = -F_12.
    constexpr double magnetic(int i) const {
        switch (spatial(i)) {
            case 1: return -bivector_component(2, 3);
            case 2: return bivector_component(1, 3);
            default: return -bivector_component(1, 2);
        }
    }
    constexpr void set_magnetic(int i, double v) {
        switch (spatial(i)) {
            case 1: set_bivector_component(2, 3, -v); break;
            case 2: set_bivector_component(1, 3, v); break;
            default: set_bivector_component(1, 2, -v); break;
        }
    }

    // --- arithmetic ----------------------------------------------------------

    constexpr Multivector& operator+=(const Multivector& o) {
        for (int i = 0; i < 16; ++i) c_[i] += o.c_[i];
        return *this;
    }
    constexpr Multivector& operator-=(const Multivector& o) {
        for (int i = 0; i < 16; ++i) c_[i] -= o.c_[i];
        return *this;
    }
    constexpr Multivector& operator*=(double s) {
        for (double& x : c_) x *= s;
        return *this;
    }
    friend constexpr Multivector operator+(Multivector a, const Multivector& b) { return a += b; }
    friend constexpr Multivector operator-(Multivector a, const Multivector& b) { return a -= b; }
    friend constexpr Multivector operator*(Multivector a, double s) { return a *= s; }
    friend constexpr Multivector operator*(double s, Multivector a) { return a *= s; }
    constexpr Multivector operator-() const {
        Multivector m;
        for (int i = 0; i < 16; ++i) m.c_[i] = -c_[i];
        return m;
    }

    friend constexpr Multivector operator*(const Multivector& a, const Multivector& b) {
        Multivector out;
        for (unsigned i = 0; i < 16; ++i) {
            const double ai = a.c_[i];
            if (ai == 0.0) continue;
            for (unsigned j = 0; j < 16; ++j) {
                const double bj = b.c_[j];
                if (bj == 0.0) continue;
                out.c_[detail::blade_tables.mask[i][j]] +=
                    detail::blade_tables.sign[i][j] * ai * bj;
            }
        }
        return out;
    }

    constexpr bool operator==(const Multivector& o) const { return c_ == o.c_; }

    constexpr double max_abs_coefficient() const {
        double m = 0.0;
        for (double x : c_) {
            const double a = x < 0 ? -x : x;
            if (a > m) m = a;
        }
        return m;
    }

    constexpr bool has_only_grades(unsigned grade_bits) const {
        for (unsigned mask = 0; mask < 16; ++mask) {
            if (c_[mask] != 0.0 && !(grade_bits & (1u << blade_grade(mask)))) return false;
        }
        return true;
    }

private:
    static constexpr int spatial(int i) {
        if (i < 1 || i > 3) throw std::domain_error("spatial index must be 1..3");
        return i;
    }
    static constexpr unsigned vector_mask(int mu) {
        if (mu < 0 || mu > 3) throw std::domain_error("vector index must be 0..3");
        return 1u << mu;
    }
    static constexpr std::pair<unsigned, double> bivector_mask(int mu, int nu) {
        if (mu < 0 || mu > 3 || nu < 0 || nu > 3 || mu == nu)
            throw std::domain_error("bivector indices must be distinct and in 0..3");
        const bool swap = mu > nu;
        if (swap) { const int t = mu; mu = nu; nu = t; }
        return {(1u << mu) | (1u << nu), swap ? -1.0 : 1.0};
    }
    // I gamma^mu written on the canonical blades: I g^0 = +e14, I g^1 = +e13,
    // I g^2 = -e11, I g^3 = +e7.
    static constexpr std::pair<unsigned, double> pseudovector_mask(int mu) {
        switch (mu) {
            case 0: return {14u, 1.0};
            case 1: return {13u, 1.0};
            case 2: return {11u, -1.0};
            case 3: return {7u, 1.0};
            default: throw std::domain_error("pseudovector index must be 0..3");
        }
    }

    std::array<double, 16> c_{};
};

constexpr Multivector Multivector::pseudovector_basis(int mu) {
    auto [mask, sign] = pseudovector_mask(mu);
    return basis_blade(mask, sign);
}

inline constexpr Multivector geometric_product(const Multivector& a, const Multivector& b) {
    return a * b;
}

/// Antisymmetrized product (1/2)(ab - ba); the exterior product on vectors.
inline constexpr Multivector wedge(const Multivector& a, const Multivector& b) {
    return (a * b - b * a) * 0.5;
}

inline constexpr Multivector reverse(const Multivector& a) {
    std::array<double, 16> c{};
    for (unsigned m = 0; m < 16; ++m) c[m] = detail::blade_tables.reverse_sign[m] * a[m];
    return Multivector::from_coefficients(c);
}

/// Negates odd grades; equals -I a I.
inline constexpr Multivector grade_involution(const Multivector& a) {
    std::array<double, 16> c{};
    for (unsigned m = 0; m < 16; ++m) c[m] = detail::blade_tables.involution_sign[m] * a[m];
    return Multivector::from_coefficients(c);
}

inline constexpr Multivector grade_project(const Multivector& a, int k) {
    if (k < 0 || k > 4) throw std::domain_error("grade_project: grade must be 0..4");
    std::array<double, 16> c{};
    for (unsigned m = 0; m < 16; ++m) {
        if (blade_grade(m) == k) c[m] = a[m];
    }
    return Multivector::from_coefficients(c);
}

inline constexpr double scalar_part(const Multivector& a) { return a[0]; }

inline constexpr Multivector even_part(const Multivector& a) {
    return grade_project(a, 0) + grade_project(a, 2) + grade_project(a, 4);
}

inline constexpr Multivector odd_part(const Multivector& a) {
    return grade_project(a, 1) + grade_project(a, 3);
}

/// Hodge dual of the grade-2 part, dual^{ab} = (1/2) eps^{abcd} F_{cd} with
/// eps^{0123} = +1, returned in the stored lower-index convention. Applying
/// twice gives -F. Equals -grade2(I * F).
inline constexpr Multivector dual_tensor(const Multivector& field) {
    return -grade_project(Multivector::pseudoscalar() * grade_project(field, 2), 2);
}

/// Geometric-product exponential of a bivector, by scaling and squaring on
/// the power series (terms capped at 64, next-term threshold 1e-16 of scale).
inline Multivector exp_bivector(const Multivector& generator) {
    if (!generator.has_only_grades(1u << 2))
        throw std::domain_error("exp_bivector: generator must be a pure bivector");
    Multivector b = generator;
    int squarings = 0;
    while (b.max_abs_coefficient() > 0.5) {
        b *= 0.5;
        ++squarings;
    }
    Multivector result = Multivector::scalar(1.0);
    Multivector term = Multivector::scalar(1.0);
    for (int n = 1; n <= 64; ++n) {
        term = term * b * (1.0 / n);
        result += term;
        if (term.max_abs_coefficient() < 1e-16) break;
    }
    for (int s = 0; s < squarings; ++s) result = result * result;
    return result;
}

}  // namespace stadirac
