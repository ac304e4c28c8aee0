#pragma once

// Matrix representations of Cl(1,3) and its complexification, plus the
// projection-bispinor bridge between multivectors and Dirac spinors.
//
// Two concrete representations are built and cross-validated:
//  * the 4x4 complex Dirac basis, gamma^0 = diag(1,1,-1,-1),
//    gamma^i = offdiag(sigma^i, -sigma^i);
//  * a 16x16 real orthogonal representation assembled as the tensor product
//    C (x) M2(R) (x) H with all three factors given by signed permutation
//    matrices, component order ((a-1)*2 + (b-1))*4 + (c-1).

#include <array>
#include <cmath>
#include <complex>
#include <stdexcept>

#include "stadirac/complex_multivector.hpp"

namespace stadirac {

using complex_d = std::complex<double>;

class consistency_error : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

struct Mat4c {
    std::array<complex_d, 16> m{};

    constexpr complex_d& operator()(int r, int c) { return m[r * 4 + c]; }
    constexpr const complex_d& operator()(int r, int c) const { return m[r * 4 + c]; }

    static constexpr Mat4c identity() {
        Mat4c out;
        for (int i = 0; i < 4; ++i) out(i, i) = 1.0;
        return out;
    }

    friend constexpr Mat4c operator*(const Mat4c& a, const Mat4c& b) {
        Mat4c out;
        for (int r = 0; r < 4; ++r)
            for (int k = 0; k < 4; ++k) {
                const complex_d v = a(r, k);
                if (v == complex_d{}) continue;
                for (int c = 0; c < 4; ++c) out(r, c) += v * b(k, c);
            }
        return out;
    }
    friend constexpr Mat4c operator+(Mat4c a, const Mat4c& b) {
        for (int i = 0; i < 16; ++i) a.m[i] += b.m[i];
        return a;
    }
    friend constexpr Mat4c operator*(Mat4c a, complex_d s) {
        for (auto& x : a.m) x *= s;
        return a;
    }
    constexpr bool operator==(const Mat4c&) const = default;

    constexpr Mat4c adjoint() const {
        Mat4c out;
        for (int r = 0; r < 4; ++r)
            for (int c = 0; c < 4; ++c) out(r, c) = std::conj((*this)(c, r));
        return out;
    }

    double max_abs_diff(const Mat4c& o) const {
        double d = 0.0;
        for (int i = 0; i < 16; ++i) d = std::max(d, std::abs(m[i] - o.m[i]));
        return d;
    }
};

struct Mat16 {
    std::array<double, 256> m{};

    constexpr double& operator()(int r, int c) { return m[r * 16 + c]; }
    constexpr const double& operator()(int r, int c) const { return m[r * 16 + c]; }

    static constexpr Mat16 identity() {
        Mat16 out;
        for (int i = 0; i < 16; ++i) out(i, i) = 1.0;
        return out;
    }

    friend Mat16 operator*(const Mat16& a, const Mat16& b) {
        Mat16 out;
        for (int r = 0; r < 16; ++r)
            for (int k = 0; k < 16; ++k) {
                const double v = a(r, k);
                if (v == 0.0) continue;
                for (int c = 0; c < 16; ++c) out(r, c) += v * b(k, c);
            }
        return out;
    }
    friend Mat16 operator+(Mat16 a, const Mat16& b) {
        for (int i = 0; i < 256; ++i) a.m[i] += b.m[i];
        return a;
    }
    friend Mat16 operator*(Mat16 a, double s) {
        for (auto& x : a.m) x *= s;
        return a;
    }
    bool operator==(const Mat16&) const = default;
};

using Bispinor4 = std::array<complex_d, 4>;
using Bispinor16 = std::array<double, 16>;

inline Bispinor4 operator*(const Mat4c& m, const Bispinor4& v) {
    Bispinor4 out{};
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) out[r] += m(r, c) * v[c];
    return out;
}

inline Bispinor16 operator*(const Mat16& m, const Bispinor16& v) {
    Bispinor16 out{};
    for (int r = 0; r < 16; ++r)
        for (int c = 0; c < 16; ++c) out[r] += m(r, c) * v[c];
    return out;
}

// ---------------------------------------------------------------------------
// Representation tables
// ---------------------------------------------------------------------------

struct RepTable {
    std::array<Mat4c, 16> dirac;     // image of each basis blade (by mask)
    std::array<Mat16, 16> real16;    // image of each basis blade (by mask)
    Mat16 j_real16;                  // image of the non-geometric unit j
    Bispinor4 w4;                    // projection bispinor (1,0,0,0)
    Bispinor16 w16;                  // a1 (x) b1 (x) c1 = e0

    Mat4c dirac_image(const Multivector& x) const {
        Mat4c out;
        for (unsigned mask = 0; mask < 16; ++mask) {
            const double c = x[mask];
            if (c == 0.0) continue;
            for (int i = 0; i < 16; ++i) out.m[i] += c * dirac[mask].m[i];
        }
        return out;
    }

    /// j maps to the complex scalar i here; this identifies the non-geometric
    /// unit with the matrix imaginary, which the real representation keeps
    /// distinct.
    Mat4c dirac_image(const ComplexMultivector& x) const {
        return dirac_image(x.re) + dirac_image(x.im) * complex_d{0.0, 1.0};
    }

    Mat16 real16_image(const Multivector& x) const {
        Mat16 out;
        for (unsigned mask = 0; mask < 16; ++mask) {
            const double c = x[mask];
            if (c == 0.0) continue;
            for (int i = 0; i < 256; ++i) out.m[i] += c * real16[mask].m[i];
        }
        return out;
    }

    Mat16 real16_image(const ComplexMultivector& x) const {
        return real16_image(x.re) + j_real16 * real16_image(x.im);
    }

    /// w16^T image(x) w16, the Eq.-structure corner, without forming the
    /// matrix product. Row 0 of the j generator is -e8.
    double real16_corner(const ComplexMultivector& x) const {
        double out = 0.0;
        for (unsigned mask = 0; mask < 16; ++mask) {
            if (x.re[mask] != 0.0) out += x.re[mask] * real16[mask](0, 0);
            if (x.im[mask] != 0.0) out -= x.im[mask] * real16[mask](8, 0);
        }
        return out;
    }
};

namespace detail {

inline RepTable build_and_validate();

}  // namespace detail

/// The representation tables, built and exhaustively validated once.
inline const RepTable& rep_table() {
    static const RepTable table = detail::build_and_validate();
    return table;
}

namespace detail {

inline Mat4c dirac_generator(int mu) {
    Mat4c g;
    const complex_d i{0.0, 1.0};
    switch (mu) {
        case 0:
            g(0, 0) = 1; g(1, 1) = 1; g(2, 2) = -1; g(3, 3) = -1;
            break;
        case 1:
            g(0, 3) = 1; g(1, 2) = 1; g(2, 1) = -1; g(3, 0) = -1;
            break;
        case 2:
            g(0, 3) = -i; g(1, 2) = i; g(2, 1) = i; g(3, 0) = -i;
            break;
        case 3:
            g(0, 2) = 1; g(1, 3) = -1; g(2, 0) = -1; g(3, 1) = 1;
            break;
        default:
            throw std::domain_error("dirac_generator: index out of range");
    }
    return g;
}

// 2x2 and 4x4 signed-permutation factors of the real representation.
struct Mat2r {
    std::array<double, 4> m{};
    double operator()(int r, int c) const { return m[r * 2 + c]; }
};
struct Mat4r {
    std::array<double, 16> m{};
    double operator()(int r, int c) const { return m[r * 4 + c]; }
};

inline Mat2r m2_identity() { return {{1, 0, 0, 1}}; }
inline Mat2r m2_swap() { return {{0, 1, 1, 0}}; }        // M1
inline Mat2r m2_rot() { return {{0, -1, 1, 0}}; }        // M2 and the j generator
inline Mat2r m2_diag() { return {{1, 0, 0, -1}}; }       // M3

inline Mat4r quat_unit(int k) {
    switch (k) {
        case 0:
            return {{1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1}};
        case 1:
            return {{0, 0, 0, 1, 0, 0, -1, 0, 0, 1, 0, 0, -1, 0, 0, 0}};
        case 2:
            return {{0, 0, -1, 0, 0, 0, 0, -1, 1, 0, 0, 0, 0, 1, 0, 0}};
        case 3:
            return {{0, 1, 0, 0, -1, 0, 0, 0, 0, 0, 0, -1, 0, 0, 1, 0}};
        default:
            throw std::domain_error("quat_unit: index out of range");
    }
}

inline Mat16 kron_cmh(const Mat2r& c, const Mat2r& m, const Mat4r& h) {
    Mat16 out;
    for (int a = 0; a < 2; ++a)
        for (int ap = 0; ap < 2; ++ap)
            for (int b = 0; b < 2; ++b)
                for (int bp = 0; bp < 2; ++bp)
                    for (int q = 0; q < 4; ++q)
                        for (int qp = 0; qp < 4; ++qp)
                            out((a * 2 + b) * 4 + q, (ap * 2 + bp) * 4 + qp) =
                                c(a, ap) * m(b, bp) * h(q, qp);
    return out;
}

inline Mat16 real16_generator(int mu) {
    // gamma^0 -> M3 (x) 1, gamma^i -> M1 (x) I_i, identity on the C factor.
    if (mu == 0) return kron_cmh(m2_identity(), m2_diag(), quat_unit(0));
    return kron_cmh(m2_identity(), m2_swap(), quat_unit(mu));
}

inline RepTable build_and_validate() {
    RepTable t;
    t.w4 = {complex_d{1.0}, {}, {}, {}};
    t.w16 = {};
    t.w16[0] = 1.0;
    t.j_real16 = kron_cmh(m2_rot(), m2_identity(), quat_unit(0));

    const std::array<Mat4c, 4> g4{dirac_generator(0), dirac_generator(1),
                                  dirac_generator(2), dirac_generator(3)};
    const std::array<Mat16, 4> g16{real16_generator(0), real16_generator(1),
                                   real16_generator(2), real16_generator(3)};

    for (unsigned mask = 0; mask < 16; ++mask) {
        Mat4c d = Mat4c::identity();
        Mat16 r = Mat16::identity();
        for (int k = 0; k < 4; ++k) {
            if (mask & (1u << k)) {
                d = d * g4[k];
                r = r * g16[k];
            }
        }
        t.dirac[mask] = d;
        t.real16[mask] = r;
    }

    // Homomorphism on all 256 basis pairs, both representations. Every entry
    // is exact (0, +-1, +-i), so compare bitwise.
    for (unsigned a = 0; a < 16; ++a) {
        for (unsigned b = 0; b < 16; ++b) {
            const double sign = detail::blade_tables.sign[a][b];
            const unsigned prod = detail::blade_tables.mask[a][b];
            if (!(t.dirac[a] * t.dirac[b] == t.dirac[prod] * complex_d{sign}))
                throw consistency_error("representation: 4x4 homomorphism failure");
            if (!(t.real16[a] * t.real16[b] == t.real16[prod] * sign))
                throw consistency_error("representation: 16x16 homomorphism failure");
        }
        // orthogonality / signed-permutation structure of the real images
        int nonzero = 0;
        for (int i = 0; i < 256; ++i) {
            const double v = t.real16[a].m[i];
            if (v != 0.0) {
                ++nonzero;
                if (v != 1.0 && v != -1.0)
                    throw consistency_error("representation: 16x16 entry not in {0,+-1}");
            }
        }
        if (nonzero != 16)
            throw consistency_error("representation: 16x16 image not a signed permutation");
    }
    // j commutes with every blade image and squares to -1
    const Mat16 minus_id = Mat16::identity() * -1.0;
    if (!(t.j_real16 * t.j_real16 == minus_id))
        throw consistency_error("representation: j generator does not square to -1");
    for (unsigned a = 0; a < 16; ++a) {
        if (!(t.j_real16 * t.real16[a] == t.real16[a] * t.j_real16))
            throw consistency_error("representation: j generator does not commute");
    }
    return t;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Spinor bridge
// ---------------------------------------------------------------------------

inline Bispinor4 multivector_to_spinor(const ComplexMultivector& v) {
    return rep_table().dirac_image(v) * rep_table().w4;
}

inline Bispinor4 multivector_to_spinor(const Multivector& v) {
    return multivector_to_spinor(ComplexMultivector{v});
}

inline Bispinor16 multivector_to_real_spinor(const ComplexMultivector& v) {
    return rep_table().real16_image(v) * rep_table().w16;
}

/// Inverts multivector_to_spinor on the even-grade section: the unique even
/// multivector (scalar, bivector, pseudoscalar) whose spinor image is s.
/// The lift of a spinor to a multivector is not unique; this is the section
/// the rest of the toolkit uses.
inline ComplexMultivector spinor_to_multivector(const Bispinor4& s) {
    Multivector m;
    m.set_scalar_component(s[0].real());
    m.set_bivector_component(1, 2, -s[0].imag());
    m.set_bivector_component(1, 3, -s[1].real());
    m.set_bivector_component(2, 3, -s[1].imag());
    m.set_bivector_component(0, 3, s[2].real());
    m.set_pseudoscalar_component(s[2].imag());
    m.set_bivector_component(0, 1, s[3].real());
    m.set_bivector_component(0, 2, s[3].imag());
    return ComplexMultivector{m};
}

/// Right-multiplication by gamma^2 gamma^1: the geometric implementation of
/// the unit imaginary, acting through the projection bispinor. Distinct from
/// multiplication by j.
inline constexpr ComplexMultivector geometric_i_action(const ComplexMultivector& v) {
    const Multivector g21 = Multivector::basis_vector(2) * Multivector::basis_vector(1);
    return v * g21;
}

// ---------------------------------------------------------------------------
// Bilinear bridge: psi_bar M psi computed three independent ways.
// ---------------------------------------------------------------------------

/// The Dirac adjoint of `left` times M times `right`, as the complex number
/// each representation assigns to the (w,w) corner. Computed via (i) the 4x4
/// image's (1,1) element, (ii) the scalar-part projector onto
/// {1, gamma^0, gamma^2 gamma^1, gamma^2 gamma^1 gamma^0}, and (iii) the real
/// 16x16 corner with real and imaginary parts extracted through the
/// j generator. The three routes must agree to 1e-10.
inline complex_d bilinear_extract(const ComplexMultivector& M,
                                  const ComplexMultivector& left,
                                  const ComplexMultivector& right) {
    const RepTable& rep = rep_table();
    const Multivector g0 = Multivector::basis_vector(0);
    const ComplexMultivector x = g0 * j_conjugate(reverse(left)) * M * right;

    // (i) 4x4 corner
    const complex_d via_dirac = rep.dirac_image(x)(0, 0);

    // (ii) projector: <x (1 + g0 - j g2g1 - j g2g1 g0)> with complex scalars
    const Multivector g21 = Multivector::basis_vector(2) * Multivector::basis_vector(1);
    const ComplexMultivector jneg{Multivector::zero(), Multivector::scalar(-1.0)};
    ComplexMultivector proj{Multivector::scalar(1.0) + g0, Multivector::zero()};
    proj += jneg * ComplexMultivector{g21 + g21 * g0, Multivector::zero()};
    const ComplexMultivector xp = x * proj;
    const complex_d via_projector{scalar_part(xp.re), scalar_part(xp.im)};

    // (iii) real16 corner of x (1 - j g2g1); imaginary part via the corner of
    // -j y, since Im(z) = Re(-j z).
    const ComplexMultivector completion{Multivector::scalar(1.0), -g21};
    const ComplexMultivector y = x * completion;
    const complex_d via_real16{rep.real16_corner(y),
                               rep.real16_corner(ComplexMultivector{y.im, -y.re})};

    if (std::abs(via_dirac - via_projector) > 1e-10 ||
        std::abs(via_dirac - via_real16) > 1e-10)
        throw consistency_error("bilinear_extract: representation routes disagree");
    return via_dirac;
}

}  // namespace stadirac
