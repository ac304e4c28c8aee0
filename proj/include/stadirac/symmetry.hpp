#pragma once

// Lorentz rotors and the discrete C, P, T, CPT maps.
//
// Rotor conventions: R = exp(-1/4 omega_{mu nu} g^mu ^ g^nu) from an
// antisymmetric parameter matrix; omega_{0i} > 0 boosts with positive
// rapidity along +i, so sandwiching gamma^0 with boost(1, alpha) gives
// cosh(alpha) gamma^0 + sinh(alpha) gamma^1.

#include <array>
#include <cmath>
#include <stdexcept>

#include "stadirac/dynamics.hpp"

namespace stadirac {

class Rotor {
public:
    /// exp of a pure bivector generator.
    static Rotor from_generator(const Multivector& bivector) {
        Rotor r;
        r.rotor_ = exp_bivector(bivector);
        r.reverse_ = reverse(r.rotor_);
        const Multivector unit = r.rotor_ * r.reverse_ - Multivector::scalar(1.0);
        if (unit.max_abs_coefficient() > 1e-12)
            throw consistency_error("Rotor: R * ~R deviates from 1");
        return r;
    }

    /// R = exp(-1/4 omega_{mu nu} g^mu ^ g^nu); omega must be antisymmetric.
    static Rotor from_parameters(const std::array<std::array<double, 4>, 4>& omega) {
        Multivector gen;
        for (int mu = 0; mu < 4; ++mu)
            for (int nu = 0; nu < 4; ++nu) {
                if (omega[mu][nu] == 0.0) continue;
                gen += -0.25 * omega[mu][nu] *
                       wedge(Multivector::basis_vector(mu), Multivector::basis_vector(nu));
            }
        return from_generator(gen);
    }

    /// Rotation by theta in the (i, j) plane, i.e. omega_{ij} = theta.
    static Rotor rotation(int i, int j, double theta) {
        if (i < 1 || i > 3 || j < 1 || j > 3 || i == j)
            throw std::domain_error("Rotor::rotation: plane indices must be distinct spatial axes");
        std::array<std::array<double, 4>, 4> omega{};
        omega[i][j] = theta;
        omega[j][i] = -theta;
        return from_parameters(omega);
    }

    /// Boost with rapidity alpha along spatial axis i (omega_{0i} = alpha).
    static Rotor boost(int i, double alpha) {
        if (i < 1 || i > 3) throw std::domain_error("Rotor::boost: axis must be 1..3");
        std::array<std::array<double, 4>, 4> omega{};
        omega[0][i] = alpha;
        omega[i][0] = -alpha;
        return from_parameters(omega);
    }

    static Rotor identity() { return from_generator(Multivector::zero()); }

    const Multivector& value() const { return rotor_; }
    const Multivector& reversed() const { return reverse_; }

    /// Two-sided conjugation R m ~R; grade-preserving.
    Multivector sandwich(const Multivector& m) const { return rotor_ * m * reverse_; }

    Rotor inverse() const {
        Rotor r;
        r.rotor_ = reverse_;
        r.reverse_ = rotor_;
        return r;
    }

private:
    Rotor() = default;
    Multivector rotor_ = Multivector::scalar(1.0);
    Multivector reverse_ = Multivector::scalar(1.0);
};

inline Multivector transform_multivector(const Rotor& r, const Multivector& m) {
    return r.sandwich(m);
}

/// Two-sided frame transformation of all four constituents. The induced
/// spinor transformation is one-sided (the projection spinor absorbs one
/// factor); for the spinor-picture action with a fixed projection spinor use
/// left_multiply(r.value(), v).
inline DiracFieldValue transform_field(const Rotor& r, const DiracFieldValue& v) {
    return v.map_constituents([&r](const Multivector& m) { return r.sandwich(m); });
}

// ---------------------------------------------------------------------------
// Discrete symmetries, value level
// ---------------------------------------------------------------------------

/// C: flips the sign of component 2 (the charge-coupled partner).
inline constexpr DiracFieldValue apply_C(const DiracFieldValue& v) {
    return charge_conjugate(v);
}

/// The pointwise parity conjugation g0 (.) g0; callers pair it with spatial
/// argument reflection.
inline DiracFieldValue parity_conjugate(const DiracFieldValue& v) {
    const Multivector g0 = Multivector::basis_vector(0);
    return v.map_constituents([&g0](const Multivector& m) { return g0 * m * g0; });
}

/// The pure time-reversal conjugation -g0 I (.) I g0 (no charge conjugation);
/// sends gamma^0 -> -gamma^0 and gamma^i -> gamma^i.
inline DiracFieldValue time_reversal_conjugate(const DiracFieldValue& v) {
    const Multivector g0 = Multivector::basis_vector(0);
    const Multivector ps = Multivector::pseudoscalar();
    return v.map_constituents(
        [&](const Multivector& m) { return -1.0 * (g0 * ps * m * ps * g0); });
}

/// Full T map at a point: charge conjugation followed by the pure
/// time-reversal conjugation. Any sign flip of external potentials is part of
/// the surrounding experiment configuration, not of this map.
inline DiracFieldValue apply_T_value(const DiracFieldValue& v) {
    return time_reversal_conjugate(charge_conjugate(v));
}

/// CPT at a point: -I (.) I on every constituent (charge conjugations cancel
/// in the composition); callers pair it with full spacetime argument reversal.
inline DiracFieldValue cpt_conjugate(const DiracFieldValue& v) {
    const Multivector ps = Multivector::pseudoscalar();
    return v.map_constituents([&ps](const Multivector& m) { return -1.0 * (ps * m * ps); });
}

// ---------------------------------------------------------------------------
// Discrete symmetries, grid level
// ---------------------------------------------------------------------------

namespace detail {

inline std::size_t reflected_index(const GridShape& shape, std::size_t idx) {
    auto c = shape.coords(idx);
    for (int axis = 0; axis < 3; ++axis) {
        const int n = shape.extent(axis);
        c[axis] = (n - c[axis]) % n;
    }
    return shape.index(c[0], c[1], c[2]);
}

}  // namespace detail

/// Parity: pointwise g0 (.) g0 composed with exact spatial reflection about
/// the origin (grids are periodic with even extents, so the reflection is a
/// permutation of grid points).
inline FieldState apply_P(const FieldState& state) {
    state.validate();
    FieldState out = state;
    for (std::size_t i = 0; i < state.values.size(); ++i)
        out.values[i] = parity_conjugate(state.values[detail::reflected_index(state.shape, i)]);
    return out;
}

inline FieldState apply_C(const FieldState& state) {
    FieldState out = state;
    out.charge = -state.charge;
    for (auto& v : out.values) v = charge_conjugate(v);
    return out;
}

/// Time reversal of a stored slice: pointwise C then pure time-reversal
/// conjugation, with the slice relabeled to time -t. Reversing the order of
/// a trajectory's slices is left to the caller.
inline FieldState apply_T(const FieldState& state) {
    FieldState out = state;
    out.t = -state.t;
    out.charge = -state.charge;
    for (std::size_t i = 0; i < state.values.size(); ++i)
        out.values[i] = apply_T_value(state.values[i]);
    return out;
}

/// CPT of a stored slice: -I (.) I with spatial reflection and t -> -t.
inline FieldState apply_CPT(const FieldState& state) {
    state.validate();
    FieldState out = state;
    out.t = -state.t;
    for (std::size_t i = 0; i < state.values.size(); ++i)
        out.values[i] = cpt_conjugate(state.values[detail::reflected_index(state.shape, i)]);
    return out;
}

}  // namespace stadirac
