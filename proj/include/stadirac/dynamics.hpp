#pragma once

// Equations of motion on periodic grids: residual evaluators for the
// massless, massive, and charged multivector systems (each computed two
// independent ways and compared), analytic reference solutions, and a
// classic RK4 time evolver.
//
// Units: c = 1; omega0 = m c^2 / hbar and the coupling e enter directly.
// Fields live on a periodic grid (1D along z by default, optionally 3D)
// with 4th-order central spatial differences.

#include <array>
#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "stadirac/complex_multivector.hpp"
#include "stadirac/representation.hpp"

namespace stadirac {

// ---------------------------------------------------------------------------
// Grid geometry
// ---------------------------------------------------------------------------

struct GridShape {
    int nx = 1;
    int ny = 1;
    int nz = 8;

    std::size_t total() const {
        return static_cast<std::size_t>(nx) * static_cast<std::size_t>(ny) *
               static_cast<std::size_t>(nz);
    }
    std::size_t index(int ix, int iy, int iz) const {
        return (static_cast<std::size_t>(ix) * ny + iy) * nz + iz;
    }
    std::array<int, 3> coords(std::size_t idx) const {
        const int iz = static_cast<int>(idx % nz);
        const int iy = static_cast<int>((idx / nz) % ny);
        const int ix = static_cast<int>(idx / (static_cast<std::size_t>(ny) * nz));
        return {ix, iy, iz};
    }
    int extent(int axis) const { return axis == 0 ? nx : (axis == 1 ? ny : nz); }
    bool axis_active(int axis) const { return extent(axis) > 1; }

    void validate() const {
        for (int axis = 0; axis < 3; ++axis) {
            const int n = extent(axis);
            if (n < 1) throw std::domain_error("grid extent must be positive");
            if (n > 1 && (n < 8 || n % 2 != 0))
                throw std::domain_error("active grid axes must be even and at least 8 points");
        }
        if (total() < 8) throw std::domain_error("grid must have at least 8 points");
    }
};

// ---------------------------------------------------------------------------
// External potential A_mu(x)
// ---------------------------------------------------------------------------

enum class PotentialKind { zero, constant_a0, plane_wave, tabulated };

/// Static vector potential, specified through its upper-index components.
struct Potential {
    PotentialKind kind = PotentialKind::zero;
    double a0 = 0.0;         // constant_a0: A^0
    double amplitude = 0.0;  // plane_wave: A^1(z) = amplitude * cos(2 pi mode z / L)
    int mode = 1;
    std::vector<std::array<double, 4>> table;  // tabulated: A^mu per grid point

    static Potential zero() { return {}; }
    static Potential constant_scalar(double value) {
        Potential p;
        p.kind = PotentialKind::constant_a0;
        p.a0 = value;
        return p;
    }
    static Potential transverse_wave(double amplitude, int mode) {
        Potential p;
        p.kind = PotentialKind::plane_wave;
        p.amplitude = amplitude;
        p.mode = mode;
        return p;
    }
    static Potential tabulated_from(std::vector<std::array<double, 4>> values) {
        Potential p;
        p.kind = PotentialKind::tabulated;
        p.table = std::move(values);
        return p;
    }

    bool is_zero() const { return kind == PotentialKind::zero; }

    /// Upper-index components A^mu at a grid point.
    std::array<double, 4> upper(const GridShape& shape, double dx, std::size_t idx) const {
        switch (kind) {
            case PotentialKind::zero:
                return {0.0, 0.0, 0.0, 0.0};
            case PotentialKind::constant_a0:
                return {a0, 0.0, 0.0, 0.0};
            case PotentialKind::plane_wave: {
                const double length = shape.nz * dx;
                const double z = shape.coords(idx)[2] * dx;
                const double k = 2.0 * M_PI * mode / length;
                return {0.0, amplitude * std::cos(k * z), 0.0, 0.0};
            }
            case PotentialKind::tabulated:
                return table[idx];
        }
        return {0.0, 0.0, 0.0, 0.0};
    }

    /// A = A_mu gamma^mu as a multivector (stored components are lower-index).
    Multivector multivector_at(const GridShape& shape, double dx, std::size_t idx) const {
        const auto up = upper(shape, dx, idx);
        Multivector a;
        for (int mu = 0; mu < 4; ++mu) a.set_vector_component(mu, metric_diag[mu] * up[mu]);
        return a;
    }

    void validate(const GridShape& shape) const {
        if (kind == PotentialKind::tabulated && table.size() != shape.total())
            throw std::domain_error("tabulated potential does not match grid shape");
    }
};

// ---------------------------------------------------------------------------
// Field state
// ---------------------------------------------------------------------------

using FieldGrid = std::vector<DiracFieldValue>;

struct FieldState {
    GridShape shape;
    double dx = 1.0;
    double t = 0.0;
    double omega0 = 0.0;
    double charge = 0.0;
    Potential potential;
    FieldGrid values;

    void validate() const {
        shape.validate();
        if (!(dx > 0.0)) throw std::domain_error("dx must be positive");
        if (values.size() != shape.total())
            throw std::domain_error("field grid does not match grid shape");
        potential.validate(shape);
    }

    /// Spatial position of a grid point, (x, y, z) with x_i = index * dx.
    std::array<double, 3> position(std::size_t idx) const {
        const auto c = shape.coords(idx);
        return {c[0] * dx, c[1] * dx, c[2] * dx};
    }
};

struct Trajectory {
    std::vector<FieldState> slices;
    double snapshot_dt = 0.0;  // uniform time between stored slices

    std::size_t size() const { return slices.size(); }
    const FieldState& operator[](std::size_t i) const { return slices[i]; }
};

// ---------------------------------------------------------------------------
// Spatial derivatives (4th-order central, periodic)
// ---------------------------------------------------------------------------

namespace detail {

inline std::size_t shifted_index(const GridShape& shape, std::size_t idx, int axis, int offset) {
    auto c = shape.coords(idx);
    const int n = shape.extent(axis);
    c[axis] = ((c[axis] + offset) % n + n) % n;
    return shape.index(c[0], c[1], c[2]);
}

/// (-v[+2] + 8 v[+1] - 8 v[-1] + v[-2]) / (12 dx)
inline DiracFieldValue first_derivative(const FieldGrid& grid, const GridShape& shape,
                                        double dx, std::size_t idx, int axis) {
    const DiracFieldValue& p1 = grid[shifted_index(shape, idx, axis, +1)];
    const DiracFieldValue& p2 = grid[shifted_index(shape, idx, axis, +2)];
    const DiracFieldValue& m1 = grid[shifted_index(shape, idx, axis, -1)];
    const DiracFieldValue& m2 = grid[shifted_index(shape, idx, axis, -2)];
    return (p2 * -1.0 + p1 * 8.0 - m1 * 8.0 + m2) * (1.0 / (12.0 * dx));
}

/// (-v[+2] + 16 v[+1] - 30 v[0] + 16 v[-1] - v[-2]) / (12 dx^2)
inline DiracFieldValue second_derivative(const FieldGrid& grid, const GridShape& shape,
                                         double dx, std::size_t idx, int axis) {
    const DiracFieldValue& p1 = grid[shifted_index(shape, idx, axis, +1)];
    const DiracFieldValue& p2 = grid[shifted_index(shape, idx, axis, +2)];
    const DiracFieldValue& c0 = grid[idx];
    const DiracFieldValue& m1 = grid[shifted_index(shape, idx, axis, -1)];
    const DiracFieldValue& m2 = grid[shifted_index(shape, idx, axis, -2)];
    return (p2 * -1.0 + p1 * 16.0 - c0 * 30.0 + m1 * 16.0 + m2 * -1.0) *
           (1.0 / (12.0 * dx * dx));
}

}  // namespace detail

/// All four partial-derivative field values at a point: index 0 is the
/// supplied time derivative, 1..3 the spatial derivatives (zero on inactive
/// axes).
inline std::array<DiracFieldValue, 4> partial_derivatives(const FieldState& state,
                                                          const FieldGrid& time_derivative,
                                                          std::size_t idx) {
    std::array<DiracFieldValue, 4> d;
    d[0] = time_derivative[idx];
    for (int axis = 0; axis < 3; ++axis) {
        if (state.shape.axis_active(axis))
            d[axis + 1] = detail::first_derivative(state.values, state.shape, state.dx, idx, axis);
    }
    return d;
}

/// gamma^mu d_mu psi of the flattened complex field at a point.
inline ComplexMultivector dirac_derivative(const FieldState& state,
                                           const FieldGrid& time_derivative,
                                           std::size_t idx) {
    const auto d = partial_derivatives(state, time_derivative, idx);
    ComplexMultivector out;
    for (int mu = 0; mu < 4; ++mu) {
        const Multivector g = Multivector::basis_vector(mu);
        out += g * d[mu].flattened();
    }
    return out;
}

// ---------------------------------------------------------------------------
// Residual evaluation
// ---------------------------------------------------------------------------

struct ResidualEntry {
    double max_abs = 0.0;
    double l2 = 0.0;
};

struct ResidualReport {
    ResidualEntry scalar;
    ResidualEntry pseudoscalar;
    ResidualEntry vector_divergence;
    ResidualEntry pseudovector_divergence;
    ResidualEntry bivector;
    double route_disagreement = 0.0;  // component form vs multivector form
    double total_max = 0.0;
    double total_l2 = 0.0;

    void finalize(std::size_t n_points) {
        const double inv = n_points > 0 ? 1.0 / static_cast<double>(n_points) : 0.0;
        for (ResidualEntry* e :
             {&scalar, &pseudoscalar, &vector_divergence, &pseudovector_divergence, &bivector}) {
            e->l2 = std::sqrt(e->l2 * inv);
            if (e->max_abs > total_max) total_max = e->max_abs;
            total_l2 += e->l2 * e->l2;
        }
        total_l2 = std::sqrt(total_l2);
    }
};

namespace detail {

constexpr int epsilon4(int a, int b, int c, int d) {
    int p[4] = {a, b, c, d};
    if (((1 << a) | (1 << b) | (1 << c) | (1 << d)) != 0xF) return 0;
    int sign = 1;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 3 - i; ++j)
            if (p[j] > p[j + 1]) {
                const int t = p[j];
                p[j] = p[j + 1];
                p[j + 1] = t;
                sign = -sign;
            }
    return sign;
}

struct SymbolSet {
    double f = 0.0, g = 0.0;
    std::array<double, 4> v{}, p{};
    std::array<std::array<double, 4>, 4> F{};

    static SymbolSet split(const Multivector& m) {
        SymbolSet s;
        s.f = m.scalar_component();
        s.g = m.pseudoscalar_component();
        for (int mu = 0; mu < 4; ++mu) {
            s.v[mu] = m.vector_component(mu);
            s.p[mu] = m.pseudovector_component(mu);
        }
        for (int a = 0; a < 4; ++a)
            for (int b = 0; b < 4; ++b)
                if (a != b) s.F[a][b] = m.bivector_component(a, b);
        return s;
    }
};

/// dual^{ab} = (1/2) eps^{abcd} X_{cd} for antisymmetric lower-index X.
inline std::array<std::array<double, 4>, 4> dual_upper(
    const std::array<std::array<double, 4>, 4>& xlow) {
    std::array<std::array<double, 4>, 4> out{};
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) {
            double acc = 0.0;
            for (int c = 0; c < 4; ++c)
                for (int d = 0; d < 4; ++d) {
                    const int e = epsilon4(a, b, c, d);
                    if (e != 0) acc += 0.5 * e * xlow[c][d];
                }
            out[a][b] = acc;
        }
    return out;
}

// One pair of coupled component systems: the unprimed lines of the charged
// system, with `sense` = +1; the primed lines are the same formulas with
// `sense` = -1 and the two components swapped. All values are the paper-form
// (upper-index) residuals.
struct ComponentLines {
    std::array<double, 4> vector_line{};
    std::array<double, 4> pseudovector_line{};
    double scalar_line = 0.0;
    double pseudoscalar_line = 0.0;
    std::array<double, 6> bivector_line{};
};

inline constexpr std::array<std::pair<int, int>, 6> bivector_index_pairs{
    {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};

inline ComponentLines component_lines(const SymbolSet& even_a,
                                      const std::array<SymbolSet, 4>& d_even_a,
                                      const SymbolSet& odd_a,
                                      const std::array<SymbolSet, 4>& d_odd_a,
                                      const SymbolSet& even_b, const SymbolSet& odd_b,
                                      const std::array<double, 4>& a_upper, double charge,
                                      double omega0, double sense) {
    ComponentLines out;
    const auto eta = metric_diag;
    std::array<double, 4> a_lower{};
    for (int mu = 0; mu < 4; ++mu) a_lower[mu] = eta[mu] * a_upper[mu];
    const double e = charge * sense;

    // d^a f + d_b F^{ba} coupled to the partner even fields, minus omega0 v^a
    for (int a = 0; a < 4; ++a) {
        double div_f = 0.0, div_fp = 0.0;
        for (int b = 0; b < 4; ++b) {
            div_f += eta[b] * d_even_a[b].F[b][a];
            div_fp += a_lower[b] * eta[b] * eta[a] * even_b.F[b][a];
        }
        out.vector_line[a] = eta[a] * d_even_a[a].f - e * a_upper[a] * even_b.f +
                             eta[a] * div_f - e * div_fp - omega0 * eta[a] * odd_a.v[a];
    }

    // d^a g + d_b dual(F)^{ba} coupled to the partner, plus omega0 p^a
    std::array<std::array<double, 4>, 4> dualFb = dual_upper(even_b.F);
    for (int a = 0; a < 4; ++a) {
        double div_dual = 0.0, div_dualp = 0.0;
        for (int b = 0; b < 4; ++b) {
            div_dual += dual_upper(d_even_a[b].F)[b][a];
            div_dualp += a_lower[b] * dualFb[b][a];
        }
        out.pseudovector_line[a] = eta[a] * d_even_a[a].g - e * a_upper[a] * even_b.g +
                                   div_dual - e * div_dualp + omega0 * eta[a] * odd_a.p[a];
    }

    // d_a v^a - e A_a v'^a + omega0 f  and the pseudovector divergence
    double div_v = 0.0, av = 0.0, div_p = 0.0, ap = 0.0;
    for (int a = 0; a < 4; ++a) {
        div_v += eta[a] * d_odd_a[a].v[a];
        av += a_lower[a] * eta[a] * odd_b.v[a];
        div_p += eta[a] * d_odd_a[a].p[a];
        ap += a_lower[a] * eta[a] * odd_b.p[a];
    }
    out.scalar_line = div_v - e * av + omega0 * even_a.f;
    out.pseudoscalar_line = div_p - e * ap - omega0 * even_a.g;

    // (F_v - e F_{Av'})^{ab} + (F_p - e F_{Ap'})^{ab} + omega0 F^{ab}
    for (std::size_t k = 0; k < bivector_index_pairs.size(); ++k) {
        const auto [a, b] = bivector_index_pairs[k];
        const double fv = eta[a] * eta[b] * (d_odd_a[a].v[b] - d_odd_a[b].v[a]);
        double fp = 0.0, fap = 0.0;
        for (int c = 0; c < 4; ++c)
            for (int d = 0; d < 4; ++d) {
                const int ep = epsilon4(a, b, c, d);
                if (ep == 0) continue;
                fp += 0.5 * ep * (d_odd_a[c].p[d] - d_odd_a[d].p[c]);
                fap += 0.5 * ep * (a_lower[c] * odd_b.p[d] - a_lower[d] * odd_b.p[c]);
            }
        const double vb_up_a = eta[a] * odd_b.v[a];
        const double vb_up_b = eta[b] * odd_b.v[b];
        const double fav = a_upper[a] * vb_up_b - a_upper[b] * vb_up_a;
        out.bivector_line[k] =
            (fv - e * fav) + (fp - e * fap) + omega0 * eta[a] * eta[b] * even_a.F[a][b];
    }
    return out;
}

inline void accumulate(ResidualEntry& entry, double value) {
    const double a = std::abs(value);
    if (a > entry.max_abs) entry.max_abs = a;
    entry.l2 += value * value;
}

}  // namespace detail

/// Evaluates the full charged component system and the corresponding
/// multivector equations at every grid point, asserting that the two routes
/// agree. The time derivative of the field must be supplied (from an
/// analytic formula or from finite differences along a trajectory).
inline ResidualReport residual_charged(const FieldState& state,
                                       const FieldGrid& time_derivative) {
    state.validate();
    if (time_derivative.size() != state.values.size())
        throw std::domain_error("time derivative grid does not match state grid");

    ResidualReport report;
    const double w0 = state.omega0;
    const double e = state.charge;
    const auto eta = metric_diag;

    for (std::size_t idx = 0; idx < state.values.size(); ++idx) {
        const DiracFieldValue& psi = state.values[idx];
        const auto d = partial_derivatives(state, time_derivative, idx);
        const auto a_upper = state.potential.upper(state.shape, state.dx, idx);
        const Multivector a_mv = state.potential.multivector_at(state.shape, state.dx, idx);

        // multivector route: the four coupled equations
        Multivector nabla_e1, nabla_o1, nabla_e2, nabla_o2;
        for (int mu = 0; mu < 4; ++mu) {
            const Multivector g = Multivector::basis_vector(mu);
            nabla_e1 += g * d[mu].even1();
            nabla_o1 += g * d[mu].odd1();
            nabla_e2 += g * d[mu].even2();
            nabla_o2 += g * d[mu].odd2();
        }
        const Multivector r1 = nabla_e1 - e * (a_mv * psi.even2()) - w0 * psi.odd1();
        const Multivector r2 = nabla_e2 + e * (a_mv * psi.even1()) - w0 * psi.odd2();
        const Multivector r3 = nabla_o1 - e * (a_mv * psi.odd2()) + w0 * psi.even1();
        const Multivector r4 = nabla_o2 + e * (a_mv * psi.odd1()) + w0 * psi.even2();

        // component route, built from the symbol fields
        std::array<detail::SymbolSet, 4> d_e1, d_o1, d_e2, d_o2;
        for (int mu = 0; mu < 4; ++mu) {
            d_e1[mu] = detail::SymbolSet::split(d[mu].even1());
            d_o1[mu] = detail::SymbolSet::split(d[mu].odd1());
            d_e2[mu] = detail::SymbolSet::split(d[mu].even2());
            d_o2[mu] = detail::SymbolSet::split(d[mu].odd2());
        }
        const auto s_e1 = detail::SymbolSet::split(psi.even1());
        const auto s_o1 = detail::SymbolSet::split(psi.odd1());
        const auto s_e2 = detail::SymbolSet::split(psi.even2());
        const auto s_o2 = detail::SymbolSet::split(psi.odd2());

        const auto lines1 = detail::component_lines(s_e1, d_e1, s_o1, d_o1, s_e2, s_o2,
                                                    a_upper, e, w0, +1.0);
        const auto lines2 = detail::component_lines(s_e2, d_e2, s_o2, d_o2, s_e1, s_o1,
                                                    a_upper, e, w0, -1.0);

        // compare against the multivector route, converted to paper form
        double disagreement = 0.0;
        const auto check = [&disagreement](double component_value, double mv_value) {
            const double diff = std::abs(component_value - mv_value);
            if (diff > disagreement) disagreement = diff;
        };
        for (int a = 0; a < 4; ++a) {
            check(lines1.vector_line[a], eta[a] * r1.vector_component(a));
            check(lines2.vector_line[a], eta[a] * r2.vector_component(a));
            check(lines1.pseudovector_line[a], -eta[a] * r1.pseudovector_component(a));
            check(lines2.pseudovector_line[a], -eta[a] * r2.pseudovector_component(a));
        }
        check(lines1.scalar_line, r3.scalar_component());
        check(lines2.scalar_line, r4.scalar_component());
        check(lines1.pseudoscalar_line, -r3.pseudoscalar_component());
        check(lines2.pseudoscalar_line, -r4.pseudoscalar_component());
        for (std::size_t k = 0; k < detail::bivector_index_pairs.size(); ++k) {
            const auto [a, b] = detail::bivector_index_pairs[k];
            check(lines1.bivector_line[k], eta[a] * eta[b] * r3.bivector_component(a, b));
            check(lines2.bivector_line[k], eta[a] * eta[b] * r4.bivector_component(a, b));
        }
        if (disagreement > report.route_disagreement) report.route_disagreement = disagreement;

        for (const auto& lines : {lines1, lines2}) {
            detail::accumulate(report.scalar, lines.scalar_line);
            detail::accumulate(report.pseudoscalar, lines.pseudoscalar_line);
            for (int a = 0; a < 4; ++a) {
                detail::accumulate(report.vector_divergence, lines.vector_line[a]);
                detail::accumulate(report.pseudovector_divergence, lines.pseudovector_line[a]);
            }
            for (double v : lines.bivector_line) detail::accumulate(report.bivector, v);
        }
    }
    report.finalize(state.values.size());
    if (report.route_disagreement > 1e-12)
        throw consistency_error("residual: component and multivector routes disagree");
    return report;
}

inline ResidualReport residual_massive(const FieldState& state,
                                       const FieldGrid& time_derivative) {
    if (state.charge != 0.0)
        throw std::domain_error("residual_massive: state has nonzero charge");
    return residual_charged(state, time_derivative);
}

inline ResidualReport residual_massless(const FieldState& state,
                                        const FieldGrid& time_derivative) {
    if (state.omega0 != 0.0)
        throw std::domain_error("residual_massless: state has nonzero mass");
    if (state.charge != 0.0)
        throw std::domain_error("residual_massless: state has nonzero charge");
    return residual_charged(state, time_derivative);
}

/// Residual of the fixed-pseudovector (operator-interpretation) equation
/// nabla psi_e = omega0 psi_e g2 g1 g0, evaluated on the even1 constituent.
/// For field-interpretation solutions this is generally nonzero; it exists
/// for cross-comparison only.
inline double residual_operator_form(const FieldState& state,
                                     const FieldGrid& time_derivative) {
    state.validate();
    const Multivector g210 = Multivector::basis_vector(2) * Multivector::basis_vector(1) *
                             Multivector::basis_vector(0);
    double worst = 0.0;
    for (std::size_t idx = 0; idx < state.values.size(); ++idx) {
        const auto d = partial_derivatives(state, time_derivative, idx);
        Multivector nabla_e1;
        for (int mu = 0; mu < 4; ++mu)
            nabla_e1 += Multivector::basis_vector(mu) * d[mu].even1();
        const Multivector r = nabla_e1 - state.omega0 * (state.values[idx].even1() * g210);
        worst = std::max(worst, r.max_abs_coefficient());
    }
    return worst;
}

// ---------------------------------------------------------------------------
// Trajectory helpers: finite-difference time derivatives
// ---------------------------------------------------------------------------

/// Centered time derivative of a stored trajectory at a slice: 4th order when
/// five slices are available around it, 2nd order otherwise.
inline FieldGrid trajectory_time_derivative(const Trajectory& traj, std::size_t slice) {
    const std::size_t n = traj.size();
    if (n < 3) throw std::domain_error("trajectory needs at least 3 slices");
    if (slice == 0 || slice + 1 >= n)
        throw std::domain_error("time derivative needs an interior slice");
    const double dt = traj.snapshot_dt;
    const std::size_t points = traj[slice].values.size();
    FieldGrid out(points);
    const bool fourth = (slice >= 2 && slice + 2 < n);
    for (std::size_t i = 0; i < points; ++i) {
        if (fourth) {
            out[i] = (traj[slice + 2].values[i] * -1.0 + traj[slice + 1].values[i] * 8.0 -
                      traj[slice - 1].values[i] * 8.0 + traj[slice - 2].values[i]) *
                     (1.0 / (12.0 * dt));
        } else {
            out[i] = (traj[slice + 1].values[i] - traj[slice - 1].values[i]) * (0.5 / dt);
        }
    }
    return out;
}

inline ResidualReport residual_charged(const Trajectory& traj, std::size_t slice) {
    return residual_charged(traj[slice], trajectory_time_derivative(traj, slice));
}

// ---------------------------------------------------------------------------
// Time evolution: classic RK4 on d_t psi = -g0 g^i d_i psi - j w0 g0 psi
//                                          - j e g0 A psi
// ---------------------------------------------------------------------------

struct EvolveOptions {
    double dt = 0.01;
    long steps = 100;
    long snapshot_every = 1;  // store every k-th step (plus the initial state)
    int threads = 1;          // 1 = serial deterministic mode
};

namespace detail {

inline void evolve_rhs(const FieldState& state, const FieldGrid& fields,
                       const std::vector<Multivector>& potential_mv, FieldGrid& out,
                       int threads) {
    const std::size_t n = fields.size();
    const Multivector g0 = Multivector::basis_vector(0);
    const double w0 = state.omega0;
    const double e = state.charge;

    const auto worker = [&](std::size_t begin, std::size_t end) {
        for (std::size_t idx = begin; idx < end; ++idx) {
            const DiracFieldValue& psi = fields[idx];
            Multivector sp_e1, sp_o1, sp_e2, sp_o2;
            for (int axis = 0; axis < 3; ++axis) {
                if (!state.shape.axis_active(axis)) continue;
                const DiracFieldValue dv =
                    first_derivative(fields, state.shape, state.dx, idx, axis);
                const Multivector g = Multivector::basis_vector(axis + 1);
                sp_e1 += g * dv.even1();
                sp_o1 += g * dv.odd1();
                sp_e2 += g * dv.even2();
                sp_o2 += g * dv.odd2();
            }
            Multivector rhs_e1 = -1.0 * sp_e1 + w0 * psi.odd1();
            Multivector rhs_o1 = -1.0 * sp_o1 - w0 * psi.even1();
            Multivector rhs_e2 = -1.0 * sp_e2 + w0 * psi.odd2();
            Multivector rhs_o2 = -1.0 * sp_o2 - w0 * psi.even2();
            if (e != 0.0) {
                const Multivector& a = potential_mv[idx];
                rhs_e1 += e * (a * psi.even2());
                rhs_o1 += e * (a * psi.odd2());
                rhs_e2 -= e * (a * psi.even1());
                rhs_o2 -= e * (a * psi.odd1());
            }
            out[idx] = DiracFieldValue::from_constituents(g0 * rhs_e1, g0 * rhs_o1,
                                                          g0 * rhs_e2, g0 * rhs_o2);
        }
    };

    if (threads <= 1 || n < 64) {
        worker(0, n);
        return;
    }
    std::vector<std::thread> pool;
    const std::size_t chunk = (n + threads - 1) / threads;
    for (int th = 0; th < threads; ++th) {
        const std::size_t begin = th * chunk;
        const std::size_t end = std::min(n, begin + chunk);
        if (begin >= end) break;
        pool.emplace_back(worker, begin, end);
    }
    for (auto& th : pool) th.join();
}

inline void check_finite(const FieldGrid& fields, long step) {
    for (const auto& v : fields) {
        for (const Multivector* m : {&v.even1(), &v.odd1(), &v.even2(), &v.odd2()}) {
            for (double c : m->coefficients()) {
                if (!std::isfinite(c))
                    throw std::runtime_error("evolve: non-finite field value at step " +
                                             std::to_string(step));
            }
        }
    }
}

}  // namespace detail

inline Trajectory evolve(const FieldState& initial, const EvolveOptions& opt) {
    initial.validate();
    if (!(opt.dt > 0.0)) throw std::domain_error("evolve: dt must be positive");
    if (opt.steps < 1) throw std::domain_error("evolve: steps must be positive");
    if (opt.snapshot_every < 1) throw std::domain_error("evolve: snapshot cadence must be positive");
    const double cfl = opt.dt / initial.dx;
    bool any_active = false;
    for (int axis = 0; axis < 3; ++axis) any_active |= initial.shape.axis_active(axis);
    if (any_active && cfl > 0.5 + 1e-12)
        throw std::domain_error("evolve: CFL number dt/dx exceeds 0.5");
    const long stored = opt.steps / opt.snapshot_every + 1;
    if (stored > 10000) throw std::domain_error("evolve: trajectory would exceed 10000 slices");

    const std::size_t n = initial.values.size();
    std::vector<Multivector> potential_mv(n);
    for (std::size_t i = 0; i < n; ++i)
        potential_mv[i] = initial.potential.multivector_at(initial.shape, initial.dx, i);

    Trajectory traj;
    traj.snapshot_dt = opt.dt * opt.snapshot_every;
    traj.slices.reserve(stored);
    traj.slices.push_back(initial);

    FieldState current = initial;
    FieldGrid k1(n), k2(n), k3(n), k4(n), stage(n);
    for (long step = 1; step <= opt.steps; ++step) {
        detail::evolve_rhs(current, current.values, potential_mv, k1, opt.threads);
        for (std::size_t i = 0; i < n; ++i) stage[i] = current.values[i] + k1[i] * (0.5 * opt.dt);
        detail::evolve_rhs(current, stage, potential_mv, k2, opt.threads);
        for (std::size_t i = 0; i < n; ++i) stage[i] = current.values[i] + k2[i] * (0.5 * opt.dt);
        detail::evolve_rhs(current, stage, potential_mv, k3, opt.threads);
        for (std::size_t i = 0; i < n; ++i) stage[i] = current.values[i] + k3[i] * opt.dt;
        detail::evolve_rhs(current, stage, potential_mv, k4, opt.threads);
        for (std::size_t i = 0; i < n; ++i) {
            current.values[i] += (k1[i] + k2[i] * 2.0 + k3[i] * 2.0 + k4[i]) * (opt.dt / 6.0);
        }
        current.t += opt.dt;
        detail::check_finite(current.values, step);
        if (step % opt.snapshot_every == 0) traj.slices.push_back(current);
    }
    return traj;
}

// ---------------------------------------------------------------------------
// Klein-Gordon residual along a trajectory
// ---------------------------------------------------------------------------

/// Max-abs of (second time difference) - (4th-order Laplacian) + omega0^2 psi
/// over all components and interior stored times.
inline double kg_residual(const Trajectory& traj) {
    if (traj.size() < 3) throw std::domain_error("kg_residual: need at least 3 slices");
    const double dt = traj.snapshot_dt;
    if (!(dt > 0.0)) throw std::domain_error("kg_residual: slice spacing must be positive");
    for (std::size_t k = 1; k < traj.size(); ++k) {
        if (std::abs(traj[k].t - traj[k - 1].t - dt) > 1e-9 * std::max(1.0, std::abs(dt)))
            throw std::domain_error("kg_residual: slices are not uniformly spaced");
    }
    const double w0 = traj[0].omega0;
    double worst = 0.0;
    for (std::size_t k = 1; k + 1 < traj.size(); ++k) {
        const FieldState& s = traj[k];
        for (std::size_t i = 0; i < s.values.size(); ++i) {
            DiracFieldValue acc = (traj[k + 1].values[i] - s.values[i] * 2.0 +
                                   traj[k - 1].values[i]) * (1.0 / (dt * dt));
            for (int axis = 0; axis < 3; ++axis) {
                if (s.shape.axis_active(axis))
                    acc -= detail::second_derivative(s.values, s.shape, s.dx, i, axis);
            }
            acc += s.values[i] * (w0 * w0);
            worst = std::max(worst, acc.max_abs_coefficient());
        }
    }
    return worst;
}

// ---------------------------------------------------------------------------
// Analytic reference configurations
// ---------------------------------------------------------------------------

namespace presets {

/// Uniform even field oscillating against its odd partner at frequency w0:
/// even1 = cos(w0 t), odd1 = -sin(w0 t) gamma^0.
inline FieldState rest_oscillator(int n, double dx, double omega0, double t = 0.0) {
    FieldState s;
    s.shape = {1, 1, n};
    s.dx = dx;
    s.t = t;
    s.omega0 = omega0;
    const DiracFieldValue v = DiracFieldValue::from_constituents(
        Multivector::scalar(std::cos(omega0 * t)),
        -std::sin(omega0 * t) * Multivector::basis_vector(0));
    s.values.assign(s.shape.total(), v);
    s.validate();
    return s;
}

inline FieldGrid rest_oscillator_derivative(const FieldState& state) {
    const double w0 = state.omega0;
    const DiracFieldValue d = DiracFieldValue::from_constituents(
        Multivector::scalar(-w0 * std::sin(w0 * state.t)),
        -w0 * std::cos(w0 * state.t) * Multivector::basis_vector(0));
    return FieldGrid(state.values.size(), d);
}

/// Vacuum electromagnetic wave E_x = B_y = cos(k (z - t)), k = 2 pi mode / L.
inline FieldState em_plane_wave(int n, double dx, int mode = 1, double t = 0.0) {
    FieldState s;
    s.shape = {1, 1, n};
    s.dx = dx;
    s.t = t;
    s.values.resize(s.shape.total());
    const double k = 2.0 * M_PI * mode / (n * dx);
    for (std::size_t i = 0; i < s.values.size(); ++i) {
        const double z = s.shape.coords(i)[2] * dx;
        const double c = std::cos(k * (z - t));
        Multivector even;
        even.set_electric(1, c);
        even.set_magnetic(2, c);
        s.values[i] = DiracFieldValue::from_constituents(even, Multivector::zero());
    }
    s.validate();
    return s;
}

inline FieldGrid em_plane_wave_derivative(const FieldState& state, int mode = 1) {
    const double k = 2.0 * M_PI * mode / (state.shape.nz * state.dx);
    FieldGrid out(state.values.size());
    for (std::size_t i = 0; i < out.size(); ++i) {
        const double z = state.shape.coords(i)[2] * state.dx;
        const double sd = k * std::sin(k * (z - state.t));
        Multivector even;
        even.set_electric(1, sd);
        even.set_magnetic(2, sd);
        out[i] = DiracFieldValue::from_constituents(even, Multivector::zero());
    }
    return out;
}

/// Uniform charged rest solution (cos Wt - j sin Wt)(1 + gamma^0) in a
/// constant scalar potential, W = omega0 + charge * a0.
inline FieldState charged_rest(int n, double dx, double omega0, double charge, double a0,
                               double t = 0.0) {
    FieldState s;
    s.shape = {1, 1, n};
    s.dx = dx;
    s.t = t;
    s.omega0 = omega0;
    s.charge = charge;
    s.potential = Potential::constant_scalar(a0);
    const double w = omega0 + charge * a0;
    const Multivector one_g0 = Multivector::scalar(1.0) + Multivector::basis_vector(0);
    const ComplexMultivector value{std::cos(w * t) * one_g0, -std::sin(w * t) * one_g0};
    s.values.assign(s.shape.total(), DiracFieldValue::from_flattened(value));
    s.validate();
    return s;
}

inline FieldGrid charged_rest_derivative(const FieldState& state) {
    const double w = state.omega0 + state.charge * state.potential.a0;
    const Multivector one_g0 = Multivector::scalar(1.0) + Multivector::basis_vector(0);
    const ComplexMultivector d{-w * std::sin(w * state.t) * one_g0,
                               -w * std::cos(w * state.t) * one_g0};
    return FieldGrid(state.values.size(), DiracFieldValue::from_flattened(d));
}

/// Portable uniform double in [-1, 1) from a seeded mt19937_64.
inline double symmetric_unit(std::mt19937_64& rng) {
    return 2.0 * ((rng() >> 11) * 0x1.0p-53) - 1.0;
}

/// Band-limited random field: every blade coefficient of every constituent is
/// a short sum of low-wavenumber Fourier modes along z, so that spatial
/// derivatives are resolved on the grid.
inline FieldState random_field(int n, double dx, double omega0, double charge,
                               std::uint64_t seed, int modes = 3) {
    FieldState s;
    s.shape = {1, 1, n};
    s.dx = dx;
    s.omega0 = omega0;
    s.charge = charge;
    s.values.resize(s.shape.total());
    std::mt19937_64 rng(seed);
    const double length = n * dx;

    struct Mode {
        double amp, k, phase;
    };
    std::array<std::array<std::vector<Mode>, 16>, 4> spec;
    for (auto& constituent : spec)
        for (auto& coeff : constituent) {
            coeff.resize(modes);
            for (auto& m : coeff) {
                m.amp = symmetric_unit(rng);
                m.k = 2.0 * M_PI * (1 + static_cast<int>((rng() >> 60) & 3)) / length;
                m.phase = M_PI * symmetric_unit(rng);
            }
        }

    for (std::size_t i = 0; i < s.values.size(); ++i) {
        const double z = s.shape.coords(i)[2] * dx;
        std::array<Multivector, 4> parts;
        for (int c = 0; c < 4; ++c) {
            const bool even_slot = (c == 0 || c == 2);
            for (unsigned mask = 0; mask < 16; ++mask) {
                const bool even_mask = blade_grade(mask) % 2 == 0;
                if (even_mask != even_slot) continue;
                double val = 0.0;
                for (const auto& m : spec[c][mask]) val += m.amp * std::cos(m.k * z + m.phase);
                parts[c].set_coefficient(mask, val);
            }
        }
        s.values[i] =
            DiracFieldValue::from_constituents(parts[0], parts[1], parts[2], parts[3]);
    }
    s.validate();
    return s;
}

/// A second independent random grid, usable as an arbitrary time-derivative
/// input for residual route-agreement checks.
inline FieldGrid random_grid(const FieldState& like, std::uint64_t seed) {
    FieldState s = random_field(like.shape.nz, like.dx, like.omega0, like.charge, seed);
    return s.values;
}

}  // namespace presets

}  // namespace stadirac
