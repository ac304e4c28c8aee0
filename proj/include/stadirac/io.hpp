#pragma once

// Snapshot files and CSV emission.
//
// Snapshot format (versioned, "schema": 1): a single JSON header line, then
// a body of 64 real coefficients per grid point (constituent order even1,
// odd1, even2, odd2, each as 16 blade coefficients in mask order). The body
// is either CSV rows ("index,c0,...,c63") or flat little-endian doubles,
// selected by the header's "format" field.

#include <bit>
#include <cstdint>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "stadirac/bilinears.hpp"
#include "stadirac/dynamics.hpp"

namespace stadirac {

enum class SnapshotFormat { csv, binary };

namespace detail {

inline std::string format_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

inline std::uint64_t to_little_endian(std::uint64_t x) {
    if constexpr (std::endian::native == std::endian::little) {
        return x;
    } else {
        std::uint64_t out = 0;
        for (int i = 0; i < 8; ++i) out |= ((x >> (8 * i)) & 0xFFu) << (8 * (7 - i));
        return out;
    }
}

inline void write_le_double(std::ostream& os, double v) {
    std::uint64_t bits;
    std::memcpy(&bits, &v, 8);
    bits = to_little_endian(bits);
    os.write(reinterpret_cast<const char*>(&bits), 8);
}

inline double read_le_double(std::istream& is) {
    std::uint64_t bits = 0;
    is.read(reinterpret_cast<char*>(&bits), 8);
    bits = to_little_endian(bits);
    double v;
    std::memcpy(&v, &bits, 8);
    return v;
}

inline std::array<double, 64> pack_point(const DiracFieldValue& v) {
    std::array<double, 64> out;
    const std::array<const Multivector*, 4> parts{&v.even1(), &v.odd1(), &v.even2(),
                                                  &v.odd2()};
    for (int c = 0; c < 4; ++c)
        for (unsigned m = 0; m < 16; ++m) out[c * 16 + m] = (*parts[c])[m];
    return out;
}

inline DiracFieldValue unpack_point(const std::array<double, 64>& c) {
    std::array<Multivector, 4> parts;
    for (int p = 0; p < 4; ++p)
        for (unsigned m = 0; m < 16; ++m) parts[p].set_coefficient(m, c[p * 16 + m]);
    return DiracFieldValue::from_constituents(parts[0], parts[1], parts[2], parts[3]);
}

inline const char* potential_kind_name(PotentialKind k) {
    switch (k) {
        case PotentialKind::zero: return "zero";
        case PotentialKind::constant_a0: return "constant-a0";
        case PotentialKind::plane_wave: return "plane-wave-a";
        case PotentialKind::tabulated: return "user-tabulated";
    }
    return "zero";
}

inline PotentialKind potential_kind_from_name(const std::string& s) {
    if (s == "zero") return PotentialKind::zero;
    if (s == "constant-a0") return PotentialKind::constant_a0;
    if (s == "plane-wave-a") return PotentialKind::plane_wave;
    if (s == "user-tabulated") return PotentialKind::tabulated;
    throw std::domain_error("unknown potential preset: " + s);
}

}  // namespace detail

inline nlohmann::json snapshot_header(const FieldState& state, SnapshotFormat format) {
    nlohmann::json pot{{"kind", detail::potential_kind_name(state.potential.kind)},
                       {"a0", state.potential.a0},
                       {"amplitude", state.potential.amplitude},
                       {"mode", state.potential.mode}};
    if (state.potential.kind == PotentialKind::tabulated) pot["table"] = state.potential.table;
    return nlohmann::json{
        {"schema", 1},
        {"format", format == SnapshotFormat::csv ? "csv" : "binary"},
        {"grid", {state.shape.nx, state.shape.ny, state.shape.nz}},
        {"dx", state.dx},
        {"t", state.t},
        {"omega0", state.omega0},
        {"charge", state.charge},
        {"potential", pot},
        {"scheme", {{"space", "central4"}, {"time", "rk4"}}},
    };
}

inline void write_snapshot(std::ostream& os, const FieldState& state, SnapshotFormat format) {
    state.validate();
    os << snapshot_header(state, format).dump() << '\n';
    if (format == SnapshotFormat::csv) {
        for (std::size_t i = 0; i < state.values.size(); ++i) {
            const auto row = detail::pack_point(state.values[i]);
            os << i;
            for (double v : row) os << ',' << detail::format_double(v);
            os << '\n';
        }
    } else {
        for (const auto& value : state.values) {
            const auto row = detail::pack_point(value);
            for (double v : row) detail::write_le_double(os, v);
        }
    }
}

inline void write_snapshot(const std::string& path, const FieldState& state,
                           SnapshotFormat format) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("cannot open snapshot file for writing: " + path);
    write_snapshot(os, state, format);
}

inline FieldState read_snapshot(std::istream& is) {
    std::string header_line;
    if (!std::getline(is, header_line))
        throw std::runtime_error("snapshot: missing header line");
    const nlohmann::json header = nlohmann::json::parse(header_line);
    if (header.at("schema").get<int>() != 1)
        throw std::runtime_error("snapshot: unsupported schema version");

    FieldState state;
    const auto grid = header.at("grid");
    state.shape = {grid.at(0).get<int>(), grid.at(1).get<int>(), grid.at(2).get<int>()};
    state.dx = header.at("dx").get<double>();
    state.t = header.at("t").get<double>();
    state.omega0 = header.at("omega0").get<double>();
    state.charge = header.at("charge").get<double>();
    const auto pot = header.at("potential");
    state.potential.kind = detail::potential_kind_from_name(pot.at("kind").get<std::string>());
    state.potential.a0 = pot.at("a0").get<double>();
    state.potential.amplitude = pot.at("amplitude").get<double>();
    state.potential.mode = pot.at("mode").get<int>();
    if (state.potential.kind == PotentialKind::tabulated)
        state.potential.table = pot.at("table").get<std::vector<std::array<double, 4>>>();

    const std::size_t n = state.shape.total();
    state.values.resize(n);
    const std::string format = header.at("format").get<std::string>();
    if (format == "csv") {
        std::string line;
        for (std::size_t i = 0; i < n; ++i) {
            if (!std::getline(is, line)) throw std::runtime_error("snapshot: truncated CSV body");
            std::istringstream row(line);
            std::string cell;
            std::getline(row, cell, ',');  // index column
            std::array<double, 64> c{};
            for (int k = 0; k < 64; ++k) {
                if (!std::getline(row, cell, ','))
                    throw std::runtime_error("snapshot: short CSV row");
                c[k] = std::stod(cell);
            }
            state.values[i] = detail::unpack_point(c);
        }
    } else if (format == "binary") {
        for (std::size_t i = 0; i < n; ++i) {
            std::array<double, 64> c{};
            for (int k = 0; k < 64; ++k) c[k] = detail::read_le_double(is);
            if (!is) throw std::runtime_error("snapshot: truncated binary body");
            state.values[i] = detail::unpack_point(c);
        }
    } else {
        throw std::runtime_error("snapshot: unknown body format " + format);
    }
    state.validate();
    return state;
}

inline FieldState read_snapshot(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw std::runtime_error("cannot open snapshot file: " + path);
    return read_snapshot(is);
}

// ---------------------------------------------------------------------------
// CSV emission
// ---------------------------------------------------------------------------

/// Per-point bilinears: t, position, current blade components, spin
/// components of the requested construction.
inline void write_bilinears_csv(std::ostream& os, const FieldState& state,
                                SpinConstruction construction,
                                const BilinearOptions& opt = {}) {
    os << "t,x,y,z,j0,j1,j2,j3,s012,s023,s031\n";
    for (std::size_t i = 0; i < state.values.size(); ++i) {
        const auto pos = state.position(i);
        const BilinearSet b = compute_bilinears(state.values[i], construction, opt);
        os << detail::format_double(state.t) << ',' << detail::format_double(pos[0]) << ','
           << detail::format_double(pos[1]) << ',' << detail::format_double(pos[2]);
        for (double v : b.current) os << ',' << detail::format_double(v);
        for (double v : b.spin) os << ',' << detail::format_double(v);
        os << '\n';
    }
}

/// Per-snapshot series along a trajectory: residual summary plus grid sums of
/// the current's timelike component and both spin constructions. Residuals
/// need interior slices; boundary slices report nan.
inline void write_series_csv(std::ostream& os, const Trajectory& traj) {
    os << "slice,t,res_total_max,res_scalar,res_pseudoscalar,res_vector,res_pseudovector,"
          "res_bivector,route_disagreement,sum_j0,s012_geo,s023_geo,s031_geo,"
          "s012_nongeo,s023_nongeo,s031_nongeo\n";
    for (std::size_t k = 0; k < traj.size(); ++k) {
        const FieldState& s = traj[k];
        double sum_j0 = 0.0;
        std::array<double, 3> sg{}, sn{};
        for (const auto& v : s.values) {
            sum_j0 += current(v)[0];
            const auto a = spin_geometric(v);
            const auto b = spin_nongeometric(v);
            for (int i = 0; i < 3; ++i) {
                sg[i] += a[i];
                sn[i] += b[i];
            }
        }
        double res_total = std::nan(""), res_s = std::nan(""), res_ps = std::nan("");
        double res_v = std::nan(""), res_pv = std::nan(""), res_b = std::nan("");
        double route = std::nan("");
        if (k > 0 && k + 1 < traj.size() && traj.size() >= 3) {
            const ResidualReport r = residual_charged(traj, k);
            res_total = r.total_max;
            res_s = r.scalar.max_abs;
            res_ps = r.pseudoscalar.max_abs;
            res_v = r.vector_divergence.max_abs;
            res_pv = r.pseudovector_divergence.max_abs;
            res_b = r.bivector.max_abs;
            route = r.route_disagreement;
        }
        os << k << ',' << detail::format_double(s.t);
        for (double v : {res_total, res_s, res_ps, res_v, res_pv, res_b, route})
            os << ',' << detail::format_double(v);
        os << ',' << detail::format_double(sum_j0);
        for (double v : sg) os << ',' << detail::format_double(v);
        for (double v : sn) os << ',' << detail::format_double(v);
        os << '\n';
    }
}

// ---------------------------------------------------------------------------
// Representation dump
// ---------------------------------------------------------------------------

inline nlohmann::json dump_representation() {
    const RepTable& rep = rep_table();
    nlohmann::json blades = nlohmann::json::array();
    for (unsigned mask = 0; mask < 16; ++mask) {
        std::string name = mask == 0 ? "1" : "";
        for (int k = 0; k < 4; ++k)
            if (mask & (1u << k)) name += "g" + std::to_string(k);
        nlohmann::json dre = nlohmann::json::array(), dim = nlohmann::json::array();
        for (int r = 0; r < 4; ++r) {
            nlohmann::json rre = nlohmann::json::array(), rim = nlohmann::json::array();
            for (int c = 0; c < 4; ++c) {
                rre.push_back(rep.dirac[mask](r, c).real());
                rim.push_back(rep.dirac[mask](r, c).imag());
            }
            dre.push_back(rre);
            dim.push_back(rim);
        }
        nlohmann::json r16 = nlohmann::json::array();
        for (int r = 0; r < 16; ++r) {
            nlohmann::json row = nlohmann::json::array();
            for (int c = 0; c < 16; ++c) row.push_back(rep.real16[mask](r, c));
            r16.push_back(row);
        }
        blades.push_back({{"mask", mask},
                          {"name", name},
                          {"grade", blade_grade(mask)},
                          {"dirac_re", dre},
                          {"dirac_im", dim},
                          {"real16", r16}});
    }
    nlohmann::json j16 = nlohmann::json::array();
    for (int r = 0; r < 16; ++r) {
        nlohmann::json row = nlohmann::json::array();
        for (int c = 0; c < 16; ++c) row.push_back(rep.j_real16(r, c));
        j16.push_back(row);
    }
    nlohmann::json w4 = nlohmann::json::array();
    for (const auto& c : rep.w4) w4.push_back({c.real(), c.imag()});
    return nlohmann::json{{"schema", 1},
                          {"blades", blades},
                          {"j_generator", j16},
                          {"w4", w4},
                          {"w16", rep.w16}};
}

}  // namespace stadirac
