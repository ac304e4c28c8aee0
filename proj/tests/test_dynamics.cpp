#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "oracles.hpp"
#include "stadirac/bilinears.hpp"
#include "stadirac/dynamics.hpp"
#include "stadirac/symmetry.hpp"

using namespace stadirac;
using Catch::Approx;

TEST_CASE("grid validation") {
    FieldState s;
    s.shape = {1, 1, 7};
    s.values.resize(7);
    CHECK_THROWS_AS(s.validate(), std::domain_error);
    s.shape = {1, 1, 8};
    s.values.resize(8);
    s.dx = 0.0;
    CHECK_THROWS_AS(s.validate(), std::domain_error);
    s.dx = 0.5;
    CHECK_NOTHROW(s.validate());

    // tabulated potentials must match the grid
    s.potential = Potential::tabulated_from(std::vector<std::array<double, 4>>(4));
    CHECK_THROWS_AS(s.validate(), std::domain_error);
}

TEST_CASE("spatial derivative accuracy") {
    // uniform field: spatial part of the derivative vanishes exactly
    {
        FieldState s = presets::rest_oscillator(16, 0.3, 1.0);
        FieldGrid zero_dt(s.values.size());
        for (std::size_t i = 0; i < s.values.size(); ++i) {
            auto d = partial_derivatives(s, zero_dt, i);
            CHECK(d[3].max_abs_coefficient() == 0.0);
        }
    }

    // sin(kz) scalar field: the z derivative is k cos(kz) + O(dx^4)
    const auto derivative_error = [](int n) {
        FieldState s;
        s.shape = {1, 1, n};
        s.dx = 2.0 * M_PI / n;
        s.values.resize(n);
        const double k = 3.0;
        for (int i = 0; i < n; ++i) {
            const double z = i * s.dx;
            s.values[static_cast<std::size_t>(i)] = DiracFieldValue::from_constituents(
                Multivector::scalar(std::sin(k * z)), Multivector::zero());
        }
        FieldGrid zero_dt(s.values.size());
        double worst = 0.0;
        for (int i = 0; i < n; ++i) {
            const double z = i * s.dx;
            const auto d = partial_derivatives(s, zero_dt, static_cast<std::size_t>(i));
            worst = std::max(worst, std::abs(d[3].even1().scalar_component() -
                                             k * std::cos(k * z)));
        }
        return worst;
    };
    const double coarse = derivative_error(64);
    const double fine = derivative_error(128);
    CHECK(coarse / fine == Approx(16.0).margin(4.0));

    // and the full Dirac derivative of that field points along gamma^3
    FieldState s;
    s.shape = {1, 1, 64};
    s.dx = 2.0 * M_PI / 64;
    s.values.resize(64);
    const double k = 2.0;
    for (int i = 0; i < 64; ++i)
        s.values[static_cast<std::size_t>(i)] = DiracFieldValue::from_constituents(
            Multivector::scalar(std::sin(k * i * s.dx)), Multivector::zero());
    FieldGrid zero_dt(s.values.size());
    const ComplexMultivector nabla = dirac_derivative(s, zero_dt, 5);
    CHECK(nabla.re.vector_component(3) ==
          Approx(k * std::cos(k * 5 * s.dx)).margin(1e-4));
    CHECK(std::abs(nabla.re.vector_component(1)) == 0.0);
}

TEST_CASE("massless residual on analytic configurations") {
    // zero field is an exact solution
    {
        FieldState s;
        s.shape = {1, 1, 16};
        s.dx = 0.5;
        s.values.resize(16);
        FieldGrid zero_dt(16);
        const ResidualReport r = residual_massless(s, zero_dt);
        CHECK(r.total_max == 0.0);
    }
    // the vacuum plane wave solves the full system to rounding
    {
        FieldState s = presets::em_plane_wave(128, 2.0 * M_PI / 128, 1, 0.37);
        const ResidualReport r = residual_massless(s, presets::em_plane_wave_derivative(s));
        CHECK(r.total_max <= 1e-6);  // spatial stencil error only
        CHECK(r.route_disagreement <= 1e-12);
    }
    // a random static field does not satisfy the equations
    {
        FieldState s = presets::random_field(16, 0.4, 0.0, 0.0, 91);
        FieldGrid zero_dt(s.values.size());
        const ResidualReport r = residual_massless(s, zero_dt);
        CHECK(r.total_max > 0.1);
    }
    // preconditions
    {
        FieldState s = presets::rest_oscillator(8, 1.0, 1.0);
        FieldGrid zero_dt(s.values.size());
        CHECK_THROWS_AS(residual_massless(s, zero_dt), std::domain_error);
    }
}

TEST_CASE("massive residual: rest oscillator and the operator-form contrast") {
    FieldState s = presets::rest_oscillator(8, 1.0, 1.0, 0.47);
    const FieldGrid dt_grid = presets::rest_oscillator_derivative(s);
    const ResidualReport r = residual_massive(s, dt_grid);
    CHECK(r.total_max <= 1e-14);
    CHECK(r.route_disagreement <= 1e-14);

    // the fixed-pseudovector equation is a different dynamical statement; on
    // this solution its residual stays finite
    CHECK(residual_operator_form(s, dt_grid) > 0.1);

    FieldState charged = s;
    charged.charge = 0.5;
    CHECK_THROWS_AS(residual_massive(charged, dt_grid), std::domain_error);
}

TEST_CASE("charged residual: analytic solution, charge flip, decoupling") {
    FieldState s = presets::charged_rest(8, 1.0, 1.0, 1.0, 0.25, 0.81);
    const FieldGrid dt_grid = presets::charged_rest_derivative(s);
    CHECK(residual_charged(s, dt_grid).total_max <= 1e-13);

    // charge conjugation solves the flipped-charge system
    FieldState conj = apply_C(s);
    FieldGrid conj_dt(dt_grid.size());
    for (std::size_t i = 0; i < dt_grid.size(); ++i) conj_dt[i] = charge_conjugate(dt_grid[i]);
    CHECK(conj.charge == -1.0);
    CHECK(residual_charged(conj, conj_dt).total_max <= 1e-13);

    // e = 0 reduces to the massive system evaluated independently per pair
    FieldState mixed = presets::random_field(16, 0.4, 0.9, 0.0, 92);
    const FieldGrid any_dt = presets::random_grid(mixed, 17);
    const ResidualReport full = residual_charged(mixed, any_dt);
    const ResidualReport massive = residual_massive(mixed, any_dt);
    CHECK(full.total_max == Approx(massive.total_max).margin(1e-14));
}

TEST_CASE("component and multivector routes agree on random fields") {
    std::mt19937_64 seed_gen(93);
    double worst = 0.0;
    for (int trial = 0; trial < 5; ++trial) {
        FieldState s = presets::random_field(32, 0.2, 0.7, 0.3, seed_gen());
        s.potential = Potential::transverse_wave(0.4, 1);
        const FieldGrid any_dt = presets::random_grid(s, seed_gen());
        worst = std::max(worst, residual_charged(s, any_dt).route_disagreement);
    }
    CHECK(worst <= 1e-12);
}

TEST_CASE("evolution tracks the rest oscillator at 4th order") {
    FieldState s0 = presets::rest_oscillator(8, 1.0, 1.0);
    EvolveOptions opt;
    opt.dt = 0.01;
    opt.steps = 1000;
    opt.snapshot_every = 10;
    const Trajectory traj = evolve(s0, opt);
    double worst = 0.0;
    for (const auto& s : traj.slices) {
        const double f = s.values[0].even1().scalar_component();
        worst = std::max(worst, std::abs(f - std::cos(s.t)));
    }
    CHECK(worst < 1e-6);

    EvolveOptions half = opt;
    half.dt = 0.005;
    half.steps = 2000;
    half.snapshot_every = 20;
    const Trajectory traj2 = evolve(s0, half);
    double worst2 = 0.0;
    for (const auto& s : traj2.slices) {
        const double f = s.values[0].even1().scalar_component();
        worst2 = std::max(worst2, std::abs(f - std::cos(s.t)));
    }
    CHECK(worst / worst2 == Approx(16.0).margin(3.0));
}

TEST_CASE("massless evolution translates the plane wave") {
    const int n = 128;
    const double dx = 2.0 * M_PI / n;
    FieldState s0 = presets::em_plane_wave(n, dx);
    EvolveOptions opt;
    opt.dt = 0.4 * dx;
    opt.steps = 320;  // one full period: t = 2 pi
    opt.snapshot_every = 320;
    const Trajectory traj = evolve(s0, opt);
    const FieldState& last = traj.slices.back();
    const FieldState ref = presets::em_plane_wave(n, dx, 1, last.t);
    double l2 = 0.0;
    for (std::size_t i = 0; i < ref.values.size(); ++i) {
        const double d = (last.values[i] - ref.values[i]).max_abs_coefficient();
        l2 += d * d;
    }
    CHECK(std::sqrt(l2 / ref.values.size()) < 1e-5);

    // even/odd sectors stay decoupled
    double odd = 0.0;
    for (const auto& v : last.values)
        odd = std::max({odd, v.odd1().max_abs_coefficient(), v.odd2().max_abs_coefficient()});
    CHECK(odd <= 1e-12);
}

TEST_CASE("evolution rejects bad configurations and detects blowups") {
    FieldState s0 = presets::em_plane_wave(64, 2.0 * M_PI / 64);
    EvolveOptions opt;
    opt.dt = s0.dx;  // CFL = 1
    opt.steps = 10;
    CHECK_THROWS_AS(evolve(s0, opt), std::domain_error);

    opt.dt = 0.4 * s0.dx;
    opt.steps = 0;
    CHECK_THROWS_AS(evolve(s0, opt), std::domain_error);

    opt.steps = 30000;
    opt.snapshot_every = 1;
    CHECK_THROWS_AS(evolve(s0, opt), std::domain_error);

    // a NaN in the initial data is reported with the step index
    FieldState bad = s0;
    Multivector poisoned = bad.values[3].even1();
    poisoned.set_scalar_component(std::nan(""));
    bad.values[3] = DiracFieldValue::from_constituents(poisoned, bad.values[3].odd1());
    opt.steps = 5;
    opt.snapshot_every = 1;
    try {
        evolve(bad, opt);
        FAIL("expected runtime_error");
    } catch (const std::runtime_error& e) {
        CHECK(std::string(e.what()).find("step 1") != std::string::npos);
    }
}

TEST_CASE("serial and threaded evolution agree bitwise") {
    FieldState s0 = presets::em_plane_wave(128, 2.0 * M_PI / 128);
    EvolveOptions serial;
    serial.dt = 0.4 * s0.dx;
    serial.steps = 40;
    serial.snapshot_every = 40;
    EvolveOptions threaded = serial;
    threaded.threads = 4;
    const Trajectory a = evolve(s0, serial);
    const Trajectory b = evolve(s0, threaded);
    double diff = 0.0;
    for (std::size_t i = 0; i < a.slices.back().values.size(); ++i)
        diff = std::max(diff, (a.slices.back().values[i] - b.slices.back().values[i])
                                  .max_abs_coefficient());
    CHECK(diff == 0.0);
}

TEST_CASE("klein-gordon residual and its convergence") {
    FieldState s0 = presets::rest_oscillator(8, 1.0, 1.0);
    EvolveOptions opt;
    opt.dt = 0.01;
    opt.steps = 400;
    opt.snapshot_every = 10;
    const Trajectory traj = evolve(s0, opt);
    const double kg1 = kg_residual(traj);
    CHECK(kg1 > 0.0);

    EvolveOptions half = opt;
    half.dt = 0.005;
    half.steps = 800;
    half.snapshot_every = 10;
    const double kg2 = kg_residual(evolve(s0, half));
    CHECK(kg1 / kg2 == Approx(4.0).margin(1.0));

    // zero field: identically zero
    FieldState z;
    z.shape = {1, 1, 8};
    z.dx = 1.0;
    z.values.resize(8);
    Trajectory zt;
    zt.snapshot_dt = 0.1;
    for (int k = 0; k < 4; ++k) {
        z.t = 0.1 * k;
        zt.slices.push_back(z);
    }
    CHECK(kg_residual(zt) == 0.0);

    // nonuniform spacing is rejected
    Trajectory badt = zt;
    badt.slices[2].t = 0.35;
    CHECK_THROWS_AS(kg_residual(badt), std::domain_error);
}

TEST_CASE("parity maps massless solutions to solutions") {
    // analytic check at high resolution: the reflected, conjugated plane wave
    // still satisfies the massless system
    const int n = 1024;
    const double dx = 2.0 * M_PI / n;
    FieldState s = presets::em_plane_wave(n, dx, 1, 0.31);
    FieldGrid dt_grid = presets::em_plane_wave_derivative(s);
    FieldState p = apply_P(s);
    FieldGrid p_dt(dt_grid.size());
    for (std::size_t i = 0; i < dt_grid.size(); ++i)
        p_dt[i] = parity_conjugate(dt_grid[detail::reflected_index(s.shape, i)]);
    const ResidualReport r = residual_massless(p, p_dt);
    CHECK(r.total_max < 1e-10);
}

TEST_CASE("time reversal of the charged rest solution") {
    // T sends the solution at time t to a configuration solving the system
    // with flipped charge and potential convention handled by the harness:
    // check that the pure conjulation of an uncharged oscillator still solves
    // the massive pair under t -> -t.
    const double t = 0.63;
    FieldState s = presets::rest_oscillator(8, 1.0, 1.0, t);
    FieldState ts = apply_T(s);
    ts.charge = 0.0;  // uncharged field; apply_T flips the bookkeeping sign
    // build the analytic derivative of the reversed trajectory at time -t
    FieldState ref = presets::rest_oscillator(8, 1.0, 1.0, -t);
    FieldGrid ref_dt = presets::rest_oscillator_derivative(ref);
    double value_diff = 0.0;
    for (std::size_t i = 0; i < s.values.size(); ++i)
        value_diff = std::max(value_diff,
                              (ts.values[i] - ref.values[i]).max_abs_coefficient());
    CHECK(value_diff <= 1e-14);
    CHECK(residual_massive(ref, ref_dt).total_max <= 1e-13);
}
