#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "oracles.hpp"
#include "stadirac/bilinears.hpp"

using namespace stadirac;
using Catch::Approx;

namespace {
DiracFieldValue even_only(const Multivector& even) {
    return DiracFieldValue::from_constituents(even, Multivector::zero());
}
}  // namespace

TEST_CASE("current of simple configurations") {
    Multivector f1;
    f1.set_scalar_component(1.0);
    CHECK(current(even_only(f1)) == std::array<double, 4>{1.0, 0.0, 0.0, 0.0});

    // E_1 = B_2 = 1: timelike component 2, z blade component -2
    Multivector eb;
    eb.set_electric(1, 1.0);
    eb.set_magnetic(2, 1.0);
    const auto j = current(even_only(eb));
    CHECK(j[0] == Approx(2.0).margin(1e-15));
    CHECK(j[1] == Approx(0.0).margin(1e-15));
    CHECK(j[2] == Approx(0.0).margin(1e-15));
    CHECK(j[3] == Approx(-2.0).margin(1e-15));
}

TEST_CASE("closed-form current for the even sector") {
    std::mt19937_64 rng(51);
    for (int trial = 0; trial < 50; ++trial) {
        const Multivector even = even_part(oracles::random_multivector(rng));
        const double f = even.scalar_component(), g = even.pseudoscalar_component();
        std::array<double, 3> E{}, B{};
        for (int i = 1; i <= 3; ++i) {
            E[i - 1] = even.electric(i);
            B[i - 1] = even.magnetic(i);
        }
        const std::array<double, 3> cross{E[1] * B[2] - E[2] * B[1], E[2] * B[0] - E[0] * B[2],
                                          E[0] * B[1] - E[1] * B[0]};
        const auto j = current(even_only(even));
        const double e2 = E[0] * E[0] + E[1] * E[1] + E[2] * E[2];
        const double b2 = B[0] * B[0] + B[1] * B[1] + B[2] * B[2];
        REQUIRE(j[0] == Approx(f * f + g * g + e2 + b2).margin(1e-12));
        for (int i = 0; i < 3; ++i)
            REQUIRE(j[i + 1] ==
                    Approx(-2.0 * (f * E[i] + g * B[i] + cross[i])).margin(1e-12));
    }
}

TEST_CASE("current matches the spinor sandwich on random charged fields") {
    std::mt19937_64 rng(52);
    double worst = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
        const DiracFieldValue v = oracles::random_field_value(rng);
        const auto j = current(v);
        const auto j4 = current_via_dirac(v);
        const auto j16 = current_via_real16(v);
        for (int mu = 0; mu < 4; ++mu)
            worst = std::max({worst, std::abs(j[mu] - j4[mu]), std::abs(j[mu] - j16[mu])});
    }
    CHECK(worst <= 1e-12);
}

TEST_CASE("spin closed forms and named values") {
    Multivector f1;
    f1.set_scalar_component(1.0);
    CHECK(spin_geometric(even_only(f1))[0] == Approx(0.5).margin(1e-15));

    Multivector e3;
    e3.set_electric(3, 1.0);
    CHECK(spin_geometric(even_only(e3))[0] == Approx(0.5).margin(1e-15));

    Multivector e1;
    e1.set_electric(1, 1.0);
    CHECK(spin_geometric(even_only(e1))[0] == Approx(-0.5).margin(1e-15));

    std::mt19937_64 rng(53);
    for (int trial = 0; trial < 50; ++trial) {
        const Multivector even = even_part(oracles::random_multivector(rng));
        const double f = even.scalar_component(), g = even.pseudoscalar_component();
        double e2 = 0.0, b2 = 0.0;
        for (int i = 1; i <= 3; ++i) {
            e2 += even.electric(i) * even.electric(i);
            b2 += even.magnetic(i) * even.magnetic(i);
        }
        const double want = 0.5 * (f * f + g * g - e2 - b2 + 2.0 * even.electric(3) * even.electric(3) +
                                   2.0 * even.magnetic(3) * even.magnetic(3));
        REQUIRE(spin_geometric(even_only(even))[0] == Approx(want).margin(1e-12));
    }
}

TEST_CASE("both spin constructions agree with their representation routes") {
    std::mt19937_64 rng(54);
    double worst = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
        const DiracFieldValue v = oracles::random_field_value(rng);
        const auto sg = spin_geometric(v);
        const auto sg4 = spin_geometric_via_dirac(v);
        const auto sg16 = spin_geometric_via_real16(v);
        const auto sn = spin_nongeometric(v);
        const auto sn4 = spin_nongeometric_via_dirac(v);
        const auto sn16 = spin_nongeometric_via_real16(v);
        for (int k = 0; k < 3; ++k)
            worst = std::max({worst, std::abs(sg[k] - sg4[k]), std::abs(sg[k] - sg16[k]),
                              std::abs(sn[k] - sn4[k]), std::abs(sn[k] - sn16[k])});
    }
    CHECK(worst <= 1e-12);
}

TEST_CASE("nongeometric spin vanishes without odd fields") {
    std::mt19937_64 rng(55);
    const Multivector even = even_part(oracles::random_multivector(rng));
    const auto s = spin_nongeometric(even_only(even));
    CHECK(std::abs(s[0]) == 0.0);
    CHECK(std::abs(s[1]) == 0.0);
    CHECK(std::abs(s[2]) == 0.0);
}

TEST_CASE("the two constructions coincide up to sign under the fixed relation") {
    // odd = even * g2 g1 g0 is the operator-interpretation constraint
    std::mt19937_64 rng(56);
    const Multivector g210 = Multivector::basis_vector(2) * Multivector::basis_vector(1) *
                             Multivector::basis_vector(0);
    for (int trial = 0; trial < 20; ++trial) {
        const Multivector even = even_part(oracles::random_multivector(rng));
        const Multivector odd = even * g210;
        const DiracFieldValue v = DiracFieldValue::from_constituents(even, odd);
        const auto sg = spin_geometric(v);
        const auto sn = spin_nongeometric(v);
        for (int k = 0; k < 3; ++k) REQUIRE(sn[k] == Approx(-sg[k]).margin(1e-12));
    }
}

TEST_CASE("rest oscillator separates the two spin constructions") {
    const double t = 0.53;
    const DiracFieldValue v = DiracFieldValue::from_constituents(
        Multivector::scalar(std::cos(t)), -std::sin(t) * Multivector::basis_vector(0));
    const auto sg = spin_geometric(v);
    const auto sn = spin_nongeometric(v);
    CHECK(sg[0] == Approx(0.5).margin(1e-14));
    CHECK(std::abs(sg[1]) <= 1e-14);
    CHECK(std::abs(sg[2]) <= 1e-14);
    // off the operator-interpretation constraint the j construction differs
    for (int k = 0; k < 3; ++k) CHECK(std::abs(sn[k]) <= 1e-14);
}

TEST_CASE("compute_bilinears cross-check plumbing") {
    std::mt19937_64 rng(57);
    const DiracFieldValue v = oracles::random_field_value(rng);
    BilinearOptions opt;
    opt.cross_check = true;
    const BilinearSet geo = compute_bilinears(v, SpinConstruction::geometric, opt);
    const BilinearSet non = compute_bilinears(v, SpinConstruction::nongeometric, opt);
    CHECK(geo.current == non.current);
    CHECK(geo.construction == SpinConstruction::geometric);
    CHECK(non.construction == SpinConstruction::nongeometric);
}

TEST_CASE("timelike component is nonnegative and j-phase invariant") {
    std::mt19937_64 rng(58);
    for (int trial = 0; trial < 100; ++trial) {
        const DiracFieldValue v = oracles::random_field_value(rng);
        const auto j = current(v);
        REQUIRE(j[0] >= -1e-15);
        const double th = M_PI * oracles::uniform_pm1(rng);
        const double c = std::cos(th), s = std::sin(th);
        const DiracFieldValue rotated = DiracFieldValue::from_constituents(
            c * v.even1() - s * v.even2(), c * v.odd1() - s * v.odd2(),
            s * v.even1() + c * v.even2(), s * v.odd1() + c * v.odd2());
        const auto jr = current(rotated);
        for (int mu = 0; mu < 4; ++mu) REQUIRE(jr[mu] == Approx(j[mu]).margin(1e-12));
    }
}

TEST_CASE("conservation residual on analytic configurations") {
    // static uniform scalar field: currents constant, divergence zero
    {
        FieldState s = presets::rest_oscillator(8, 1.0, 0.0);  // omega0 = 0 freezes it
        Trajectory traj;
        traj.snapshot_dt = 0.1;
        for (int k = 0; k < 6; ++k) {
            s.t = 0.1 * k;
            traj.slices.push_back(s);
        }
        CHECK(current_conservation_residual(traj) == 0.0);
    }
    // rest oscillator: j = (cos^2 + sin^2) g0 is time independent
    {
        Trajectory traj;
        traj.snapshot_dt = 0.05;
        for (int k = 0; k < 8; ++k)
            traj.slices.push_back(presets::rest_oscillator(8, 1.0, 1.0, 0.05 * k));
        CHECK(current_conservation_residual(traj) <= 1e-10);
    }
    // too few slices
    {
        Trajectory traj;
        traj.snapshot_dt = 0.1;
        traj.slices.push_back(presets::rest_oscillator(8, 1.0, 1.0, 0.0));
        traj.slices.push_back(presets::rest_oscillator(8, 1.0, 1.0, 0.1));
        CHECK_THROWS_AS(current_conservation_residual(traj), std::domain_error);
    }
}

TEST_CASE("conservation residual converges at scheme order on the plane wave") {
    const auto residual_at = [](int n) {
        const double dx = 2.0 * M_PI / n;
        const double dt = 0.4 * dx;
        Trajectory traj;
        traj.snapshot_dt = dt;
        for (int k = 0; k < 7; ++k)
            traj.slices.push_back(presets::em_plane_wave(n, dx, 1, dt * k));
        return current_conservation_residual(traj);
    };
    const double coarse = residual_at(64);
    const double fine = residual_at(128);
    // 4th-order stencils in both time and space: halving the grid (and with
    // it dt) should shrink the residual about 16x
    CHECK(coarse / fine == Approx(16.0).margin(6.0));
}
