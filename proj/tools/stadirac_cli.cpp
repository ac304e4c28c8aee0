// Command-line front end: verification suites, field evolution, bilinear
// emission, and representation-table dumps.
//
// Exit codes: 0 success, 2 validation error, 3 numerical failure,
// 4 internal consistency failure.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "stadirac/io.hpp"
#include "stadirac/symmetry.hpp"
#include "stadirac/verify.hpp"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_validation = 2;
constexpr int exit_numerical = 3;
constexpr int exit_consistency = 4;

struct RunConfig {
    int grid_n = 256;
    double dx = 0.1;
    double dt = 0.01;
    long steps = 100;
    long snapshot_every = 10;
    double omega0 = 0.0;
    double charge = 0.0;
    std::string potential = "zero";
    double potential_a0 = 0.0;
    double potential_amplitude = 0.0;
    int potential_mode = 1;
    std::string init = "rest-oscillator";
    std::uint64_t seed = 1;
    bool serial = true;
    std::string out;
    std::string input;
    bool json = false;
    bool binary_snapshots = false;
    bool cross_check = false;
    std::string spin_construction = "geometric";
    std::string inject_fault;
};

stadirac::Potential make_potential(const RunConfig& cfg) {
    if (cfg.potential == "zero") return stadirac::Potential::zero();
    if (cfg.potential == "constant-a0")
        return stadirac::Potential::constant_scalar(cfg.potential_a0);
    if (cfg.potential == "plane-wave-a")
        return stadirac::Potential::transverse_wave(cfg.potential_amplitude, cfg.potential_mode);
    throw std::domain_error("unknown potential preset: " + cfg.potential +
                            " (use zero, constant-a0, plane-wave-a)");
}

stadirac::FieldState make_initial_state(const RunConfig& cfg) {
    using namespace stadirac;
    FieldState state;
    if (cfg.init == "rest-oscillator") {
        state = presets::rest_oscillator(cfg.grid_n, cfg.dx, cfg.omega0);
    } else if (cfg.init == "em-plane-wave") {
        state = presets::em_plane_wave(cfg.grid_n, cfg.dx, cfg.potential_mode);
    } else if (cfg.init == "charged-rest") {
        state = presets::charged_rest(cfg.grid_n, cfg.dx, cfg.omega0, cfg.charge,
                                      cfg.potential_a0);
    } else if (cfg.init == "random-seeded") {
        state = presets::random_field(cfg.grid_n, cfg.dx, cfg.omega0, cfg.charge, cfg.seed);
    } else {
        throw std::domain_error("unknown init preset: " + cfg.init +
                                " (use rest-oscillator, em-plane-wave, charged-rest, "
                                "random-seeded)");
    }
    // presets fix their own physics parameters; the potential flag can still
    // override for experiments
    if (cfg.potential != "zero" && cfg.init != "charged-rest")
        state.potential = make_potential(cfg);
    state.omega0 = cfg.omega0;
    state.charge = cfg.charge;
    if (cfg.init == "charged-rest") {
        state.potential = stadirac::Potential::constant_scalar(cfg.potential_a0);
    }
    state.validate();
    return state;
}

int cmd_verify(const RunConfig& cfg) {
    using namespace stadirac;
    FaultInjection fault = FaultInjection::none;
    if (cfg.inject_fault == "blade-sign") {
        fault = FaultInjection::blade_sign;
    } else if (!cfg.inject_fault.empty()) {
        std::cerr << "error: unknown fault name " << cfg.inject_fault << "\n";
        return exit_validation;
    }
    const auto results = run_verification(fault, cfg.seed);

    nlohmann::json checks = nlohmann::json::array();
    for (const auto& r : results) {
        checks.push_back({{"name", r.name},
                          {"measured", r.measured},
                          {"tolerance", r.tolerance},
                          {"passed", r.passed}});
    }
    const bool ok = all_passed(results);
    nlohmann::json report{{"schema", 1}, {"passed", ok}, {"checks", checks}};

    std::ostream* os = &std::cout;
    std::ofstream file;
    if (!cfg.out.empty()) {
        file.open(cfg.out);
        if (!file) {
            std::cerr << "error: cannot open " << cfg.out << "\n";
            return exit_validation;
        }
        os = &file;
    }
    if (cfg.json) {
        *os << report.dump(2) << "\n";
    } else {
        for (const auto& r : results) {
            char line[160];
            std::snprintf(line, sizeof(line), "%-34s %s  measured %.3e  tolerance %.3e",
                          r.name.c_str(), r.passed ? "pass" : "FAIL", r.measured, r.tolerance);
            *os << line << "\n";
        }
        *os << (ok ? "all checks passed" : "VERIFICATION FAILED") << "\n";
    }
    if (!ok) {
        for (const auto& r : results)
            if (!r.passed) {
                std::cerr << "error: check failed: " << r.name << "\n";
                break;
            }
        return exit_consistency;
    }
    return exit_ok;
}

int cmd_evolve(const RunConfig& cfg) {
    using namespace stadirac;
    const FieldState initial = make_initial_state(cfg);
    EvolveOptions opt;
    opt.dt = cfg.dt;
    opt.steps = cfg.steps;
    opt.snapshot_every = cfg.snapshot_every;
    opt.threads = cfg.serial ? 1 : static_cast<int>(std::thread::hardware_concurrency());
    const Trajectory traj = evolve(initial, opt);

    const std::string prefix = cfg.out.empty() ? std::string("stadirac_run") : cfg.out;
    const SnapshotFormat fmt = cfg.binary_snapshots ? SnapshotFormat::binary : SnapshotFormat::csv;
    for (std::size_t k = 0; k < traj.size(); ++k) {
        char name[64];
        std::snprintf(name, sizeof(name), "_%05zu.snap", k);
        write_snapshot(prefix + name, traj[k], fmt);
    }
    {
        std::ofstream series(prefix + "_series.csv");
        if (!series) throw std::runtime_error("cannot open series CSV for writing");
        write_series_csv(series, traj);
    }

    double final_residual = std::nan("");
    if (traj.size() >= 3) {
        const ResidualReport r = residual_charged(traj, traj.size() - 2);
        final_residual = r.total_max;
    }
    std::cout << "slices " << traj.size() << " final t "
              << stadirac::detail::format_double(traj.slices.back().t) << " max residual "
              << stadirac::detail::format_double(final_residual) << "\n";
    return exit_ok;
}

int cmd_bilinears(const RunConfig& cfg) {
    using namespace stadirac;
    FieldState state;
    if (!cfg.input.empty()) {
        state = read_snapshot(cfg.input);
    } else {
        state = make_initial_state(cfg);
    }
    const SpinConstruction construction = cfg.spin_construction == "nongeometric"
                                              ? SpinConstruction::nongeometric
                                              : SpinConstruction::geometric;
    if (cfg.spin_construction != "geometric" && cfg.spin_construction != "nongeometric")
        throw std::domain_error("unknown spin construction: " + cfg.spin_construction);
    BilinearOptions opt;
    opt.cross_check = cfg.cross_check;

    std::ostream* os = &std::cout;
    std::ofstream file;
    if (!cfg.out.empty()) {
        file.open(cfg.out);
        if (!file) throw std::runtime_error("cannot open output CSV: " + cfg.out);
        os = &file;
    }
    write_bilinears_csv(*os, state, construction, opt);
    return exit_ok;
}

int cmd_dump_rep(const RunConfig& cfg) {
    const nlohmann::json dump = stadirac::dump_representation();
    if (!cfg.out.empty()) {
        std::ofstream file(cfg.out);
        if (!file) throw std::runtime_error("cannot open output file: " + cfg.out);
        file << dump.dump(2) << "\n";
    } else {
        std::cout << dump.dump(2) << "\n";
    }
    return exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"spacetime-algebra Dirac field toolkit"};
    app.require_subcommand(1);
    RunConfig cfg;

    const auto add_common = [&cfg](CLI::App* sub) {
        sub->add_option("--grid-n", cfg.grid_n, "grid points along z");
        sub->add_option("--dx", cfg.dx, "grid spacing");
        sub->add_option("--dt", cfg.dt, "time step");
        sub->add_option("--steps", cfg.steps, "number of time steps");
        sub->add_option("--snapshot-every", cfg.snapshot_every, "store every k-th step");
        sub->add_option("--omega0", cfg.omega0, "mass frequency omega0 = m c^2 / hbar");
        sub->add_option("--charge", cfg.charge, "coupling e");
        sub->add_option("--potential", cfg.potential,
                        "potential preset: zero, constant-a0, plane-wave-a");
        sub->add_option("--potential-a0", cfg.potential_a0, "constant A^0 value");
        sub->add_option("--potential-amplitude", cfg.potential_amplitude,
                        "plane-wave potential amplitude");
        sub->add_option("--mode", cfg.potential_mode, "wavenumber mode index");
        sub->add_option("--init", cfg.init,
                        "initial condition: rest-oscillator, em-plane-wave, charged-rest, "
                        "random-seeded");
        sub->add_option("--seed", cfg.seed, "random seed");
        sub->add_flag("--serial,!--parallel", cfg.serial,
                      "serial deterministic mode (default) or threaded");
        sub->add_option("--out", cfg.out, "output path or prefix");
        sub->add_flag("--json", cfg.json, "emit a JSON report");
        sub->add_flag("--binary", cfg.binary_snapshots, "binary snapshot bodies");
        sub->add_flag("--cross-check", cfg.cross_check,
                      "cross-check bilinears against both matrix representations");
    };

    CLI::App* verify = app.add_subcommand("verify", "run every identity suite");
    add_common(verify);
    verify->add_option("--inject-fault", cfg.inject_fault,
                       "test harness hook; 'blade-sign' corrupts one product sign")
        ->group("");  // hidden

    CLI::App* evolve = app.add_subcommand("evolve", "integrate the field in time");
    add_common(evolve);

    CLI::App* bilinears =
        app.add_subcommand("bilinears", "emit per-point current and spin as CSV");
    add_common(bilinears);
    bilinears->add_option("--in", cfg.input, "snapshot file to analyze");
    bilinears->add_option("--spin-construction", cfg.spin_construction,
                          "geometric or nongeometric");

    CLI::App* dump = app.add_subcommand("dump-rep", "dump both representation tables as JSON");
    add_common(dump);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_validation;
    }

    try {
        if (app.got_subcommand(verify)) return cmd_verify(cfg);
        if (app.got_subcommand(evolve)) return cmd_evolve(cfg);
        if (app.got_subcommand(bilinears)) return cmd_bilinears(cfg);
        if (app.got_subcommand(dump)) return cmd_dump_rep(cfg);
    } catch (const stadirac::consistency_error& e) {
        std::cerr << "error: internal consistency: " << e.what() << "\n";
        return exit_consistency;
    } catch (const std::domain_error& e) {
        std::cerr << "error: invalid configuration: " << e.what() << "\n";
        return exit_validation;
    } catch (const std::runtime_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_numerical;
    }
    return exit_validation;
}
