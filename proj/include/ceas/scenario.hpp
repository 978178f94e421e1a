#pragma once

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "ceas/apertures.hpp"
#include "ceas/evaluation.hpp"
#include "ceas/io.hpp"
#include "ceas/oracles.hpp"
#include "ceas/propagate.hpp"

namespace ceas {

/// One experiment description: geometry, aperture, the (z, method, eta)
/// cross product to run, and where results go.
struct Scenario {
    double wavelength = 532e-9;
    double pitch = 1e-6;
    int n_samples = 1024;
    int dims = 2; ///< 1 = line source (n x 1 grid), 2 = square grid
    std::string aperture = "rect:758";
    std::vector<std::string> distances; ///< meters, "zc*k", or "logspace:a:b:n"
    std::vector<std::string> methods;   ///< as|bl|adaptive|be|ce
    std::vector<double> etas;           ///< used by ce rows
    CeReference ce_reference_mode = CeReference::band_extended;
    std::string reference = "conv"; ///< conv | rs
    std::string out_csv;
    std::string out_fields; ///< directory for CEAF/PGM dumps; empty = none
    double epsilon = 1e-9;
    int repeats = 1;
    std::uint64_t oracle_budget = OracleBudget{}.max_work;
};

namespace detail {

inline double parse_double(const std::string& s, const std::string& field) {
    std::size_t pos = 0;
    double v = 0.0;
    try {
        v = std::stod(s, &pos);
    } catch (const std::exception&) {
        throw std::invalid_argument(field + ": cannot parse number '" + s + "'");
    }
    if (pos != s.size()) throw std::invalid_argument(field + ": trailing characters in '" + s + "'");
    return v;
}

inline long parse_int(const std::string& s, const std::string& field) {
    const double v = parse_double(s, field);
    const long n = static_cast<long>(v);
    if (static_cast<double>(n) != v) throw std::invalid_argument(field + ": expected an integer, got '" + s + "'");
    return n;
}

inline std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream in(s);
    while (std::getline(in, item, sep)) {
        const auto b = item.find_first_not_of(" \t");
        const auto e = item.find_last_not_of(" \t");
        if (b != std::string::npos) out.push_back(item.substr(b, e - b + 1));
    }
    return out;
}

inline double resolve_distance_token(const std::string& tok, double z_c) {
    if (tok.rfind("zc*", 0) == 0) return z_c * parse_double(tok.substr(3), "distance");
    return parse_double(tok, "distance");
}

} // namespace detail

/// Expand the distance tokens against the scenario's critical distance.
inline std::vector<double> resolve_distances(const std::vector<std::string>& tokens, double z_c) {
    std::vector<double> out;
    for (const std::string& tok : tokens) {
        if (tok.rfind("logspace:", 0) == 0) {
            const auto parts = detail::split(tok.substr(9), ':');
            if (parts.size() != 3) throw std::invalid_argument("distance: logspace needs start:stop:count");
            const double a = detail::resolve_distance_token(parts[0], z_c);
            const double b = detail::resolve_distance_token(parts[1], z_c);
            const long n = detail::parse_int(parts[2], "distance");
            if (!(a > 0.0) || !(b > 0.0) || n < 2)
                throw std::invalid_argument("distance: logspace endpoints must be positive, count >= 2");
            for (long i = 0; i < n; ++i)
                out.push_back(a * std::pow(b / a, static_cast<double>(i) / static_cast<double>(n - 1)));
        } else {
            out.push_back(detail::resolve_distance_token(tok, z_c));
        }
    }
    for (double z : out)
        if (!(z > 0.0)) throw std::invalid_argument("distance: distances must be positive");
    return out;
}

/// Build the source field from an aperture description:
/// rect:w[,h] | tri:x1,y1,x2,y2,x3,y3 (meters) | file:path (CEAF).
inline ComplexField make_aperture(const std::string& spec, const GridSpec& grid) {
    if (spec.rfind("rect:", 0) == 0) {
        const auto parts = detail::split(spec.substr(5), ',');
        if (parts.empty() || parts.size() > 2) throw std::invalid_argument("aperture: rect needs w or w,h");
        const int w = static_cast<int>(detail::parse_int(parts[0], "aperture"));
        const int h = parts.size() == 2 ? static_cast<int>(detail::parse_int(parts[1], "aperture"))
                                        : (grid.n_y == 1 ? 1 : w);
        return rect_aperture(grid, w, h);
    }
    if (spec.rfind("tri:", 0) == 0) {
        const auto parts = detail::split(spec.substr(4), ',');
        if (parts.size() != 6) throw std::invalid_argument("aperture: tri needs x1,y1,x2,y2,x3,y3");
        double v[6];
        for (int i = 0; i < 6; ++i) v[i] = detail::parse_double(parts[i], "aperture");
        return triangle_aperture(grid, {v[0], v[1]}, {v[2], v[3]}, {v[4], v[5]});
    }
    if (spec.rfind("file:", 0) == 0) {
        ComplexField f = read_ceaf(spec.substr(5));
        if (!(f.grid == grid))
            throw std::invalid_argument("aperture: field file grid does not match the scenario grid");
        return f;
    }
    throw std::invalid_argument("aperture: unknown spec '" + spec + "' (rect:|tri:|file:)");
}

/// Plain-text scenario config: one `key = value` per line, `#` comments.
inline void apply_scenario_key(Scenario& s, const std::string& key, const std::string& value) {
    if (key == "wavelength") s.wavelength = detail::parse_double(value, key);
    else if (key == "pitch") s.pitch = detail::parse_double(value, key);
    else if (key == "samples") s.n_samples = static_cast<int>(detail::parse_int(value, key));
    else if (key == "dims") s.dims = static_cast<int>(detail::parse_int(value, key));
    else if (key == "aperture") s.aperture = value;
    else if (key == "distance") s.distances = detail::split(value, ',');
    else if (key == "method") s.methods = detail::split(value, ',');
    else if (key == "eta") {
        s.etas.clear();
        for (const std::string& tok : detail::split(value, ',')) s.etas.push_back(detail::parse_double(tok, key));
    } else if (key == "ce-reference-mode") {
        if (value == "be") s.ce_reference_mode = CeReference::band_extended;
        else if (value == "bl") s.ce_reference_mode = CeReference::band_limited;
        else throw std::invalid_argument("ce-reference-mode: expected be or bl");
    } else if (key == "reference") {
        if (value != "conv" && value != "rs") throw std::invalid_argument("reference: expected conv or rs");
        s.reference = value;
    } else if (key == "out-csv") s.out_csv = value;
    else if (key == "out-fields") s.out_fields = value;
    else if (key == "epsilon") s.epsilon = detail::parse_double(value, key);
    else if (key == "repeats") s.repeats = static_cast<int>(detail::parse_int(value, key));
    else if (key == "budget") s.oracle_budget = static_cast<std::uint64_t>(detail::parse_int(value, key));
    else throw std::invalid_argument("config: unknown key '" + key + "'");
}

inline void load_scenario_config(Scenario& s, const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw io_error("config: cannot open " + path.string());
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            if (line.find_first_not_of(" \t\r") != std::string::npos)
                throw std::invalid_argument("config: line " + std::to_string(line_no) + " is not key = value");
            continue;
        }
        auto trim = [](std::string t) {
            const auto b = t.find_first_not_of(" \t\r");
            if (b == std::string::npos) return std::string();
            const auto e = t.find_last_not_of(" \t\r");
            return t.substr(b, e - b + 1);
        };
        apply_scenario_key(s, trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
    }
}

/// Run every (z, method, eta) combination against the chosen reference.
/// Row order is deterministic: distances outer, methods inner, eta
/// innermost for the ce method. When out_fields is set, every propagated
/// field and each per-distance reference is dumped there.
inline std::vector<EvaluationReport> run_scenario(const Scenario& s) {
    if (s.n_samples < 1) throw std::invalid_argument("samples: must be >= 1");
    if (s.dims != 1 && s.dims != 2) throw std::invalid_argument("dims: must be 1 or 2");
    if (s.distances.empty()) throw std::invalid_argument("distance: list is empty");
    if (s.methods.empty()) throw std::invalid_argument("method: list is empty");
    if (!(s.epsilon > 0.0) || !(s.epsilon < 1e-1)) throw std::invalid_argument("epsilon: must be in (0, 0.1)");
    if (s.repeats < 1) throw std::invalid_argument("repeats: must be >= 1");

    std::vector<Method> methods;
    for (const std::string& name : s.methods) methods.push_back(method_from_name(name));
    const bool wants_ce =
        std::find(methods.begin(), methods.end(), Method::ce) != methods.end();
    if (wants_ce && s.etas.empty()) throw std::invalid_argument("eta: list is empty but method ce requested");
    for (double eta : s.etas)
        if (!(eta >= 0.0 && eta <= 1.0)) throw std::invalid_argument("eta: values must be in [0, 1]");

    const GridSpec grid = make_grid(s.n_samples, s.dims == 1 ? 1 : s.n_samples, s.pitch);
    const ComplexField source = make_aperture(s.aperture, grid);
    const double z_c = critical_distance(grid, s.wavelength);
    const std::vector<double> distances = resolve_distances(s.distances, z_c);
    const TransformAccuracy acc{s.epsilon};
    const OracleBudget budget{s.oracle_budget};

    const bool dump = !s.out_fields.empty();
    if (dump) std::filesystem::create_directories(s.out_fields);
    auto dump_path = [&](const std::string& name) {
        return std::filesystem::path(s.out_fields) / (name + ".ceaf");
    };

    std::vector<EvaluationReport> rows;
    for (std::size_t zi = 0; zi < distances.size(); ++zi) {
        const OpticalConfig cfg{s.wavelength, distances[zi], grid};
        const ComplexField reference =
            s.reference == "rs" ? rs_direct(source, cfg, budget) : propagate_conv(source, cfg);
        if (dump) dump_field(reference, dump_path("reference_z" + std::to_string(zi)));

        auto run_one = [&](const PropagationPlan& plan, std::optional<double> eta_tag) {
            ComplexField out;
            EvaluationReport rep = benchmark(source, cfg, plan, s.repeats, acc, &out);
            rep.snr_db = snr(reference, out);
            rows.push_back(rep);
            if (dump) {
                std::string name = "field_z" + std::to_string(zi) + "_" + method_name(plan.method);
                if (eta_tag) {
                    char tag[32];
                    std::snprintf(tag, sizeof tag, "_eta%g", *eta_tag);
                    name += tag;
                }
                dump_field(out, dump_path(name));
            }
        };

        for (Method m : methods) {
            if (m == Method::ce) {
                for (double eta : s.etas)
                    run_one(make_plan_ce(cfg, source, eta, s.ce_reference_mode), eta);
            } else {
                run_one(make_plan(m, cfg), std::nullopt);
            }
        }
    }
    return rows;
}

/// CSV rows in the documented column order; '\n' endings, '.' decimals.
inline std::string scenario_csv(const std::vector<EvaluationReport>& rows, double z_c) {
    std::string out = "z_m,z_over_zc,method,eta,f_boundary_cyc_per_m,n_freq_axis,snr_db,elapsed_s\n";
    char line[256];
    for (const EvaluationReport& r : rows) {
        std::string eta = r.eta ? [&] {
            char buf[32];
            std::snprintf(buf, sizeof buf, "%g", *r.eta);
            return std::string(buf);
        }() : std::string();
        std::snprintf(line, sizeof line, "%.9e,%.6g,%s,%s,%.9e,%d,%.4f,%.6e\n", r.z, r.z / z_c,
                      method_name(r.method), eta.c_str(), r.f_boundary, r.n_freq_axis,
                      r.snr_db.value_or(std::nan("")), r.elapsed_s);
        out += line;
    }
    return out;
}

inline void write_scenario_csv(const std::vector<EvaluationReport>& rows, double z_c,
                               const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::trunc);
    if (!out) throw io_error("out-csv: cannot write " + path.string());
    out << scenario_csv(rows, z_c);
    if (!out) throw io_error("out-csv: write failed for " + path.string());
}

} // namespace ceas
