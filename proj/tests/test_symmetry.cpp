#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "oracles.hpp"
#include "stadirac/bilinears.hpp"
#include "stadirac/representation.hpp"
#include "stadirac/symmetry.hpp"

using namespace stadirac;
using Catch::Approx;

namespace {
const Multivector g0 = Multivector::basis_vector(0);
const Multivector g1 = Multivector::basis_vector(1);
const Multivector g2 = Multivector::basis_vector(2);
const Multivector g3 = Multivector::basis_vector(3);
const Multivector one = Multivector::scalar(1.0);
const Multivector ps = Multivector::pseudoscalar();

Rotor random_rotor(std::mt19937_64& rng, double scale = 0.5) {
    std::array<std::array<double, 4>, 4> omega{};
    for (int mu = 0; mu < 4; ++mu)
        for (int nu = mu + 1; nu < 4; ++nu) {
            omega[mu][nu] = scale * oracles::uniform_pm1(rng);
            omega[nu][mu] = -omega[mu][nu];
        }
    return Rotor::from_parameters(omega);
}
}  // namespace

TEST_CASE("identity rotor") {
    const Rotor r = Rotor::identity();
    std::mt19937_64 rng(41);
    const Multivector m = oracles::random_multivector(rng);
    CHECK((r.sandwich(m) - m).max_abs_coefficient() == 0.0);
}

TEST_CASE("rotation closed form") {
    // omega_{12} = theta rotates g1 -> cos(theta) g1 - sin(theta) g2
    const double theta = M_PI / 2.0;
    const Rotor r = Rotor::rotation(1, 2, theta);
    const Multivector got = transform_multivector(r, g1);
    const Multivector want = std::cos(theta) * g1 - std::sin(theta) * g2;
    CHECK((got - want).max_abs_coefficient() <= 1e-15);

    // same answer from the half-angle sandwich built directly
    const double half = theta / 2.0;
    const Multivector rc = std::cos(half) * one - std::sin(half) * (g1 * g2);
    CHECK((rc * g1 * reverse(rc) - want).max_abs_coefficient() <= 1e-15);
}

TEST_CASE("boost closed form and component extraction rule") {
    const double alpha = 0.3;
    const Rotor b = Rotor::boost(1, alpha);
    const Multivector got = transform_multivector(b, g0);
    CHECK(got.vector_component(0) == Approx(std::cosh(alpha)).margin(1e-15));
    CHECK(got.vector_component(1) == Approx(std::sinh(alpha)).margin(1e-15));
    CHECK(std::abs(got.vector_component(2)) <= 1e-15);
    CHECK(std::abs(got.vector_component(3)) <= 1e-15);

    // <psi (R g^mu ~R)> = <(~R psi R) g^mu> on random input
    std::mt19937_64 rng(42);
    const Multivector psi = oracles::random_multivector(rng);
    double worst = 0.0;
    for (int mu = 0; mu < 4; ++mu) {
        const double lhs = scalar_part(psi * b.sandwich(Multivector::basis_vector(mu)));
        const double rhs =
            scalar_part((b.reversed() * psi * b.value()) * Multivector::basis_vector(mu));
        worst = std::max(worst, std::abs(lhs - rhs));
    }
    CHECK(worst <= 1e-12);
}

TEST_CASE("rotor sandwiches preserve grade and the scalar product") {
    std::mt19937_64 rng(43);
    double grade_worst = 0.0, product_worst = 0.0, unit_worst = 0.0;
    for (int trial = 0; trial < 50; ++trial) {
        const Rotor r = random_rotor(rng);
        unit_worst =
            std::max(unit_worst, (r.value() * r.reversed() - one).max_abs_coefficient());
        const Multivector m = oracles::random_multivector(rng);
        const Multivector n = oracles::random_multivector(rng);
        for (int k = 0; k <= 4; ++k) {
            grade_worst = std::max(grade_worst, (grade_project(r.sandwich(m), k) -
                                                 r.sandwich(grade_project(m, k)))
                                                    .max_abs_coefficient());
        }
        product_worst =
            std::max(product_worst, std::abs(scalar_part(r.sandwich(m) * reverse(r.sandwich(n))) -
                                             scalar_part(m * reverse(n))));
    }
    CHECK(unit_worst <= 1e-12);
    CHECK(grade_worst <= 1e-12);
    CHECK(product_worst <= 1e-12);
}

TEST_CASE("rotor construction rejects non-bivector generators") {
    CHECK_THROWS_AS(Rotor::from_generator(g0), std::domain_error);
    CHECK_THROWS_AS(Rotor::rotation(0, 1, 0.5), std::domain_error);
    CHECK_THROWS_AS(Rotor::boost(4, 0.1), std::domain_error);
}

TEST_CASE("field transformation: scalars invariant, E and B mix as a boost") {
    std::mt19937_64 rng(44);
    const DiracFieldValue v = oracles::random_field_value(rng);

    const Rotor idr = Rotor::identity();
    CHECK((transform_field(idr, v) - v).max_abs_coefficient() == 0.0);

    const double alpha = 0.4;
    const Rotor b = Rotor::boost(1, alpha);
    const Multivector before = v.even1();
    const Multivector after = transform_field(b, v).even1();

    CHECK(after.scalar_component() == Approx(before.scalar_component()).margin(1e-13));
    CHECK(after.pseudoscalar_component() ==
          Approx(before.pseudoscalar_component()).margin(1e-13));

    // independent field-transformation formulas for a boost along x with
    // gamma = cosh(alpha), gamma*v = sinh(alpha):
    //   Ex' = Ex, Ey' = ch Ey - sh Bz, Ez' = ch Ez + sh By
    //   Bx' = Bx, By' = ch By + sh Ez, Bz' = ch Bz - sh Ey
    const double ch = std::cosh(alpha), sh = std::sinh(alpha);
    const double E1 = before.electric(1), E2 = before.electric(2), E3 = before.electric(3);
    const double B1 = before.magnetic(1), B2 = before.magnetic(2), B3 = before.magnetic(3);
    CHECK(after.electric(1) == Approx(E1).margin(1e-13));
    CHECK(after.electric(2) == Approx(ch * E2 - sh * B3).margin(1e-13));
    CHECK(after.electric(3) == Approx(ch * E3 + sh * B2).margin(1e-13));
    CHECK(after.magnetic(1) == Approx(B1).margin(1e-13));
    CHECK(after.magnetic(2) == Approx(ch * B2 + sh * E3).margin(1e-13));
    CHECK(after.magnetic(3) == Approx(ch * B3 - sh * E2).margin(1e-13));
}

TEST_CASE("one-sided and two-sided pictures agree through the spinor map") {
    std::mt19937_64 rng(45);
    for (int trial = 0; trial < 10; ++trial) {
        const Rotor s = random_rotor(rng);
        const ComplexMultivector psi = oracles::random_complex(rng);
        // (S psi ~S) S = S psi, so the spinor picks up image(S) on the left
        const ComplexMultivector two_sided{s.sandwich(psi.re), s.sandwich(psi.im)};
        const ComplexMultivector recombined = two_sided * s.value();
        const Bispinor4 lhs = multivector_to_spinor(recombined);
        const Bispinor4 base = multivector_to_spinor(psi);
        const Mat4c simg = rep_table().dirac_image(s.value());
        const Bispinor4 rhs = simg * base;
        for (int k = 0; k < 4; ++k) REQUIRE(std::abs(lhs[k] - rhs[k]) <= 1e-12);
    }
}

TEST_CASE("charge conjugation at the spinor level") {
    std::mt19937_64 rng(46);
    const DiracFieldValue v = oracles::random_field_value(rng);

    // i g2 psi* equals (up to a unit phase) the conjugate field applied to g2 w
    const ComplexMultivector flat = v.flattened();
    const auto psi = multivector_to_spinor(flat);
    Bispinor4 lhs;
    {
        const Mat4c g2m = rep_table().dirac[4];
        Bispinor4 conj;
        for (int k = 0; k < 4; ++k) conj[k] = std::conj(psi[k]);
        lhs = g2m * conj;
        for (auto& c : lhs) c *= complex_d{0.0, 1.0};
    }
    const Bispinor4 g2w = rep_table().dirac[4] * rep_table().w4;
    const Mat4c conj_img = rep_table().dirac_image(charge_conjugate(v).flattened());
    Bispinor4 rhs{};
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) rhs[r] += conj_img(r, c) * g2w[c];

    // find the global phase from the largest component
    int kmax = 0;
    for (int k = 1; k < 4; ++k)
        if (std::abs(rhs[k]) > std::abs(rhs[kmax])) kmax = k;
    const complex_d phase = lhs[kmax] / rhs[kmax];
    CHECK(std::abs(std::abs(phase) - 1.0) <= 1e-12);
    for (int k = 0; k < 4; ++k) CHECK(std::abs(lhs[k] - phase * rhs[k]) <= 1e-12);

    // C twice returns the field (and the spinor up to a unit phase)
    CHECK((charge_conjugate(charge_conjugate(v)) - v).max_abs_coefficient() == 0.0);
}

TEST_CASE("parity conjugation on basis directions") {
    const DiracFieldValue vg0 = DiracFieldValue::from_constituents(Multivector::zero(), g0);
    CHECK((parity_conjugate(vg0).odd1() - g0).max_abs_coefficient() == 0.0);
    const DiracFieldValue vg1 = DiracFieldValue::from_constituents(Multivector::zero(), g1);
    CHECK((parity_conjugate(vg1).odd1() + g1).max_abs_coefficient() == 0.0);
    // the pseudoscalar is parity-odd
    const DiracFieldValue vps = DiracFieldValue::from_constituents(ps, Multivector::zero());
    CHECK((parity_conjugate(vps).even1() + ps).max_abs_coefficient() == 0.0);
}

TEST_CASE("parity on the grid reflects and squares to the identity") {
    FieldState s = presets::random_field(16, 0.25, 0.0, 0.0, 77);
    const FieldState p = apply_P(s);
    const FieldState pp = apply_P(p);
    double worst = 0.0;
    for (std::size_t i = 0; i < s.values.size(); ++i)
        worst = std::max(worst, (pp.values[i] - s.values[i]).max_abs_coefficient());
    CHECK(worst == 0.0);

    // reflection moved the data: point 1 now holds the conjugate of point n-1
    const std::size_t n = s.values.size();
    CHECK((p.values[1] - parity_conjugate(s.values[n - 1])).max_abs_coefficient() == 0.0);

    FieldState bad = s;
    bad.shape.nz = 15;
    bad.values.resize(bad.shape.total());
    CHECK_THROWS_AS(apply_P(bad), std::domain_error);
}

TEST_CASE("time reversal basis action and potential bookkeeping") {
    // pure piece: gamma^0 -> -gamma^0, gamma^i -> +gamma^i
    const DiracFieldValue vg0 = DiracFieldValue::from_constituents(Multivector::zero(), g0);
    CHECK((time_reversal_conjugate(vg0).odd1() + g0).max_abs_coefficient() == 0.0);
    const DiracFieldValue vg1 = DiracFieldValue::from_constituents(Multivector::zero(), g1);
    CHECK((time_reversal_conjugate(vg1).odd1() - g1).max_abs_coefficient() == 0.0);
    CHECK((time_reversal_conjugate(time_reversal_conjugate(vg1)) - vg1).max_abs_coefficient() ==
          0.0);

    // potential term: q(g0 phi + g^i A_i) -> pure T -> q(-g0 phi + g^i A_i);
    // the harness then flips the sign of q under the accompanying C
    const double phi = 0.7;
    const std::array<double, 3> a{0.3, -0.2, 0.9};
    const Multivector pot = phi * g0 + a[0] * g1 + a[1] * g2 + a[2] * g3;
    const Multivector pure_t = -1.0 * (g0 * ps * pot * ps * g0);
    const Multivector want_t = -phi * g0 + a[0] * g1 + a[1] * g2 + a[2] * g3;
    CHECK((pure_t - want_t).max_abs_coefficient() == 0.0);
    const Multivector after_c = -1.0 * pure_t;  // q -> -q
    const Multivector want = phi * g0 - (a[0] * g1 + a[1] * g2 + a[2] * g3);
    CHECK((after_c - want).max_abs_coefficient() == 0.0);
}

TEST_CASE("CPT composition collapses to -I (.) I") {
    // exact on basis blades: even blades invariant, vectors negate
    for (unsigned mask = 0; mask < 16; ++mask) {
        const Multivector b = Multivector::basis_blade(mask);
        const Multivector mapped = -1.0 * (ps * b * ps);
        if (blade_grade(mask) % 2 == 0) {
            CHECK((mapped - b).max_abs_coefficient() == 0.0);
        } else {
            CHECK((mapped + b).max_abs_coefficient() == 0.0);
        }
    }

    std::mt19937_64 rng(47);
    double worst = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
        const DiracFieldValue v = oracles::random_field_value(rng);
        const DiracFieldValue composed = apply_T_value(parity_conjugate(apply_C(v)));
        worst = std::max(worst, (composed - cpt_conjugate(v)).max_abs_coefficient());
    }
    CHECK(worst <= 1e-12);

    // grid level: the composed map equals apply_CPT (time reflection aside,
    // both land on the same stored slice values)
    FieldState s = presets::random_field(16, 0.25, 0.3, 0.2, 78);
    const FieldState spt = apply_T(apply_P(apply_C(s)));
    const FieldState direct = apply_CPT(s);
    double grid_worst = 0.0;
    for (std::size_t i = 0; i < s.values.size(); ++i)
        grid_worst = std::max(grid_worst,
                              (spt.values[i] - direct.values[i]).max_abs_coefficient());
    CHECK(grid_worst <= 1e-12);
    CHECK(direct.t == -s.t);
}

TEST_CASE("current transforms as a vector in the spinor picture") {
    std::mt19937_64 rng(48);
    double worst = 0.0;
    for (int trial = 0; trial < 20; ++trial) {
        const Rotor s = random_rotor(rng);
        const DiracFieldValue v = oracles::random_field_value(rng);
        const auto j = current(v);
        Multivector jmv;
        for (int mu = 0; mu < 4; ++mu) jmv.set_vector_component(mu, j[mu]);
        const Multivector want = s.sandwich(jmv);
        const auto jt = current(left_multiply(s.value(), v));
        for (int mu = 0; mu < 4; ++mu)
            worst = std::max(worst, std::abs(jt[mu] - want.vector_component(mu)));
    }
    CHECK(worst <= 1e-10);
}
