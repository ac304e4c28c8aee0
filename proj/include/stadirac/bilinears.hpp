#pragma once

// Observables quadratic in the field: the current vector and the spin
// pseudovector in its two inequivalent constructions.
//
// All charged-field bilinears sum the two component pairs with equal weight;
// they reduce to the single-pair forms when component 2 vanishes. Reported
// current components are the gamma^mu blade coefficients of the current
// multivector (timelike component first).

#include <array>
#include <cmath>
#include <stdexcept>

#include "stadirac/dynamics.hpp"
#include "stadirac/representation.hpp"

namespace stadirac {

enum class SpinConstruction { geometric, nongeometric };

struct BilinearSet {
    std::array<double, 4> current{};  // gamma^mu blade coefficients
    std::array<double, 3> spin{};     // S^{012}, S^{023}, S^{031}
    SpinConstruction construction = SpinConstruction::geometric;
};

inline constexpr std::array<std::pair<int, int>, 3> spin_planes{{{1, 2}, {2, 3}, {3, 1}}};

/// Current: grade-1 part of the equal-weight sum of c g0 ~c over the four
/// constituents. The timelike blade coefficient is a sum of squares.
inline std::array<double, 4> current(const DiracFieldValue& v) {
    const Multivector g0 = Multivector::basis_vector(0);
    Multivector q;
    for (const Multivector* c : {&v.even1(), &v.odd1(), &v.even2(), &v.odd2()})
        q += (*c) * g0 * reverse(*c);
    return {q.vector_component(0), q.vector_component(1), q.vector_component(2),
            q.vector_component(3)};
}

/// Spin from the fixed reference pseudovector g2 g1 g0 sandwiched between
/// each constituent and its reverse.
inline std::array<double, 3> spin_geometric(const DiracFieldValue& v) {
    const Multivector g210 = Multivector::basis_vector(2) * Multivector::basis_vector(1) *
                             Multivector::basis_vector(0);
    const Multivector g0 = Multivector::basis_vector(0);
    Multivector q;
    for (const Multivector* c : {&v.even1(), &v.odd1(), &v.even2(), &v.odd2()})
        q += (*c) * g210 * reverse(*c);
    std::array<double, 3> out{};
    for (std::size_t k = 0; k < spin_planes.size(); ++k) {
        const auto [i, j] = spin_planes[k];
        out[k] = 0.5 * scalar_part(q * (g0 * wedge(Multivector::basis_vector(i),
                                                   Multivector::basis_vector(j))));
    }
    return out;
}

/// Spin with the unit imaginary implemented by j instead: mixes the even and
/// odd constituents of each component pair and uses no reference pseudovector.
inline std::array<double, 3> spin_nongeometric(const DiracFieldValue& v) {
    const Multivector g0 = Multivector::basis_vector(0);
    Multivector q = v.even1() * reverse(v.odd1()) - v.odd1() * reverse(v.even1()) +
                    v.even2() * reverse(v.odd2()) - v.odd2() * reverse(v.even2());
    std::array<double, 3> out{};
    for (std::size_t k = 0; k < spin_planes.size(); ++k) {
        const auto [i, j] = spin_planes[k];
        out[k] = 0.5 * scalar_part(q * (g0 * wedge(Multivector::basis_vector(i),
                                                   Multivector::basis_vector(j))));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Representation routes, kept permanently for cross-checking
// ---------------------------------------------------------------------------

namespace detail {

inline complex_d sandwich4(const Bispinor4& left, const Mat4c& m, const Bispinor4& right) {
    const Mat4c g0 = rep_table().dirac[1];
    Bispinor4 tmp = m * right;
    tmp = g0 * tmp;
    complex_d out{};
    for (int k = 0; k < 4; ++k) out += std::conj(left[k]) * tmp[k];
    return out;
}

}  // namespace detail

/// Current via per-constituent 4x4 spinor sandwiches, converted to blade
/// coefficients.
inline std::array<double, 4> current_via_dirac(const DiracFieldValue& v) {
    const RepTable& rep = rep_table();
    std::array<double, 4> out{};
    for (const Multivector* c : {&v.even1(), &v.odd1(), &v.even2(), &v.odd2()}) {
        const Bispinor4 psi = rep.dirac_image(*c) * rep.w4;
        for (int mu = 0; mu < 4; ++mu)
            out[mu] += metric_diag[mu] *
                       detail::sandwich4(psi, rep.dirac[1u << mu], psi).real();
    }
    return out;
}

/// Current via per-constituent corners of the real 16x16 representation.
inline std::array<double, 4> current_via_real16(const DiracFieldValue& v) {
    const Multivector g0 = Multivector::basis_vector(0);
    std::array<double, 4> out{};
    for (const Multivector* c : {&v.even1(), &v.odd1(), &v.even2(), &v.odd2()}) {
        for (int mu = 0; mu < 4; ++mu) {
            const Multivector x =
                g0 * reverse(*c) * Multivector::basis_vector(mu) * (*c);
            out[mu] += metric_diag[mu] * rep_table().real16_corner(ComplexMultivector{x});
        }
    }
    return out;
}

/// Geometric spin via (i/2) psi_bar g0 (g^i ^ g^j) psi per constituent.
inline std::array<double, 3> spin_geometric_via_dirac(const DiracFieldValue& v) {
    const RepTable& rep = rep_table();
    std::array<double, 3> out{};
    for (const Multivector* c : {&v.even1(), &v.odd1(), &v.even2(), &v.odd2()}) {
        const Bispinor4 psi = rep.dirac_image(*c) * rep.w4;
        for (std::size_t k = 0; k < spin_planes.size(); ++k) {
            const auto [i, j] = spin_planes[k];
            const Mat4c m = rep.dirac[1] * rep.dirac_image(wedge(
                                Multivector::basis_vector(i), Multivector::basis_vector(j)));
            out[k] += (complex_d{0.0, 0.5} * detail::sandwich4(psi, m, psi)).real();
        }
    }
    return out;
}

/// Geometric spin via the real 16x16 corner, the unit imaginary implemented
/// as right-multiplication by g2 g1.
inline std::array<double, 3> spin_geometric_via_real16(const DiracFieldValue& v) {
    const Multivector g0 = Multivector::basis_vector(0);
    const Multivector g21 = Multivector::basis_vector(2) * Multivector::basis_vector(1);
    std::array<double, 3> out{};
    for (const Multivector* c : {&v.even1(), &v.odd1(), &v.even2(), &v.odd2()}) {
        for (std::size_t k = 0; k < spin_planes.size(); ++k) {
            const auto [i, j] = spin_planes[k];
            const Multivector x = g0 * reverse(*c) * g0 *
                                  wedge(Multivector::basis_vector(i), Multivector::basis_vector(j)) *
                                  (*c) * g21;
            out[k] += 0.5 * rep_table().real16_corner(ComplexMultivector{x});
        }
    }
    return out;
}

/// Nongeometric spin via per-pair 4x4 sandwiches with the j-real projection
/// taken explicitly.
inline std::array<double, 3> spin_nongeometric_via_dirac(const DiracFieldValue& v) {
    const RepTable& rep = rep_table();
    std::array<double, 3> out{};
    const std::array<std::pair<const Multivector*, const Multivector*>, 2> pairs{
        {{&v.even1(), &v.odd1()}, {&v.even2(), &v.odd2()}}};
    for (const auto& [even_c, odd_c] : pairs) {
        const Bispinor4 pe = rep.dirac_image(*even_c) * rep.w4;
        const Bispinor4 po = rep.dirac_image(*odd_c) * rep.w4;
        for (std::size_t k = 0; k < spin_planes.size(); ++k) {
            const auto [i, j] = spin_planes[k];
            const Mat4c m = rep.dirac[1] * rep.dirac_image(wedge(
                                Multivector::basis_vector(i), Multivector::basis_vector(j)));
            out[k] += 0.5 * (detail::sandwich4(po, m, pe) - detail::sandwich4(pe, m, po)).real();
        }
    }
    return out;
}

/// Nongeometric spin via the real 16x16 corner with the unit imaginary
/// implemented by the j generator.
inline std::array<double, 3> spin_nongeometric_via_real16(const DiracFieldValue& v) {
    const Multivector g0 = Multivector::basis_vector(0);
    std::array<double, 3> out{};
    const std::array<std::pair<const Multivector*, const Multivector*>, 2> pairs{
        {{&v.even1(), &v.odd1()}, {&v.even2(), &v.odd2()}}};
    for (const auto& [even_c, odd_c] : pairs) {
        const ComplexMultivector pair{*even_c, *odd_c};
        for (std::size_t k = 0; k < spin_planes.size(); ++k) {
            const auto [i, j] = spin_planes[k];
            const ComplexMultivector m{
                g0 * wedge(Multivector::basis_vector(i), Multivector::basis_vector(j)),
                Multivector::zero()};
            const ComplexMultivector jpair{-pair.im, pair.re};  // j * pair
            const ComplexMultivector x =
                ComplexMultivector{g0} * j_conjugate(reverse(pair)) * m * jpair;
            out[k] += 0.5 * rep_table().real16_corner(x);
        }
    }
    return out;
}

// ---------------------------------------------------------------------------

struct BilinearOptions {
    /// Cross-check the multivector formulas against both representation
    /// routes; disagreement beyond `tolerance` raises consistency_error.
    bool cross_check = false;
    double tolerance = 1e-10;
};

inline BilinearSet compute_bilinears(const DiracFieldValue& v,
                                     SpinConstruction construction = SpinConstruction::geometric,
                                     const BilinearOptions& opt = {}) {
    BilinearSet out;
    out.construction = construction;
    out.current = current(v);
    out.spin = construction == SpinConstruction::geometric ? spin_geometric(v)
                                                           : spin_nongeometric(v);
    if (opt.cross_check) {
        const auto j4 = current_via_dirac(v);
        const auto j16 = current_via_real16(v);
        const auto s4 = construction == SpinConstruction::geometric
                            ? spin_geometric_via_dirac(v)
                            : spin_nongeometric_via_dirac(v);
        const auto s16 = construction == SpinConstruction::geometric
                             ? spin_geometric_via_real16(v)
                             : spin_nongeometric_via_real16(v);
        double worst = 0.0;
        for (int mu = 0; mu < 4; ++mu)
            worst = std::max({worst, std::abs(out.current[mu] - j4[mu]),
                              std::abs(out.current[mu] - j16[mu])});
        for (int k = 0; k < 3; ++k)
            worst = std::max({worst, std::abs(out.spin[k] - s4[k]),
                              std::abs(out.spin[k] - s16[k])});
        if (worst > opt.tolerance)
            throw consistency_error("bilinears: representation routes disagree");
    }
    return out;
}

// ---------------------------------------------------------------------------
// Conserved-current divergence along a trajectory
// ---------------------------------------------------------------------------

/// Max over interior slices and grid points of |d_mu j^mu| by centered
/// differences (4th order in time when five slices are available).
inline double current_conservation_residual(const Trajectory& traj) {
    if (traj.size() < 3)
        throw std::domain_error("current_conservation_residual: need at least 3 slices");
    const double dt = traj.snapshot_dt;
    if (!(dt > 0.0)) throw std::domain_error("current_conservation_residual: bad slice spacing");

    // currents per slice, as blade coefficients
    std::vector<std::vector<std::array<double, 4>>> j(traj.size());
    for (std::size_t k = 0; k < traj.size(); ++k) {
        j[k].resize(traj[k].values.size());
        for (std::size_t i = 0; i < j[k].size(); ++i) j[k][i] = current(traj[k].values[i]);
    }

    const GridShape& shape = traj[0].shape;
    const double dx = traj[0].dx;
    double worst = 0.0;
    const std::size_t n = traj.size();
    // with five or more slices, only scan where the 4th-order time stencil fits
    const std::size_t k_begin = n >= 5 ? 2 : 1;
    const std::size_t k_end = n >= 5 ? n - 2 : n - 1;
    for (std::size_t k = k_begin; k < k_end; ++k) {
        const bool fourth = n >= 5;
        for (std::size_t i = 0; i < j[k].size(); ++i) {
            // d_t j^0: the timelike blade coefficient is already upper-index
            double div = fourth ? (-j[k + 2][i][0] + 8.0 * j[k + 1][i][0] -
                                   8.0 * j[k - 1][i][0] + j[k - 2][i][0]) /
                                      (12.0 * dt)
                                : (j[k + 1][i][0] - j[k - 1][i][0]) / (2.0 * dt);
            // d_i j^i with j^i = -(blade coefficient)
            for (int axis = 0; axis < 3; ++axis) {
                if (!shape.axis_active(axis)) continue;
                const auto at = [&](int offset) {
                    return j[k][detail::shifted_index(shape, i, axis, offset)][axis + 1];
                };
                const double d_blade =
                    (-at(+2) + 8.0 * at(+1) - 8.0 * at(-1) + at(-2)) / (12.0 * dx);
                div -= d_blade;
            }
            worst = std::max(worst, std::abs(div));
        }
    }
    return worst;
}

}  // namespace stadirac
