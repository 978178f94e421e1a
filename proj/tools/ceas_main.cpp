// Scenario runner: sweeps (distance, method, eta) combinations over an
// aperture, scores each propagated field against a reference oracle and
// writes a CSV report plus optional field dumps.

#include <cstdio>
#include <exception>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ceas/ceas.hpp"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_invalid = 2;
constexpr int exit_budget = 3;
constexpr int exit_io = 4;

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Angular-spectrum diffraction scenario runner"};
    app.get_formatter()->column_width(34);

    std::string config_path;
    std::string method_list, distance_list, eta_list, ce_mode, reference, aperture;
    std::string out_csv, out_fields;
    double epsilon = -1.0, wavelength = -1.0, pitch = -1.0;
    int samples = -1, dims = -1, repeats = -1;
    long long budget = -1;
    bool bench = false, quiet = false;

    app.add_option("--config", config_path, "Scenario config file (key = value lines, # comments)");
    app.add_option("--method", method_list, "Comma list of methods: as|bl|adaptive|be|ce");
    app.add_option("--distance", distance_list,
                   "Comma list of distances: meters, zc*K, or logspace:a:b:n");
    app.add_option("--eta", eta_list, "Comma list of energy fractions for the ce method");
    app.add_option("--ce-reference-mode", ce_mode, "Energy reference band for ce: be|bl");
    app.add_option("--reference", reference, "Reference oracle: conv|rs");
    app.add_option("--aperture", aperture, "Aperture: rect:w[,h] | tri:x1,y1,... | file:path.ceaf");
    app.add_option("--out-csv", out_csv, "CSV report path");
    app.add_option("--out-fields", out_fields, "Directory for CEAF/PGM field dumps");
    app.add_option("--epsilon", epsilon, "NUFFT relative tolerance (default 1e-9)");
    app.add_option("--wavelength", wavelength, "Wavelength in meters");
    app.add_option("--pitch", pitch, "Pixel pitch in meters");
    app.add_option("--samples", samples, "Samples per axis of the source window");
    app.add_option("--dims", dims, "1 = line source, 2 = square window");
    app.add_option("--repeats", repeats, "Timed propagation repeats per row (median reported)");
    app.add_option("--budget", budget, "Kernel-evaluation budget for the rs oracle");
    app.add_flag("--bench", bench, "Alias for --repeats 3");
    app.add_flag("--quiet", quiet, "Suppress the CSV echo on stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_invalid;
    }

    try {
        ceas::Scenario scenario;
        if (!config_path.empty()) ceas::load_scenario_config(scenario, config_path);
        if (!method_list.empty()) ceas::apply_scenario_key(scenario, "method", method_list);
        if (!distance_list.empty()) ceas::apply_scenario_key(scenario, "distance", distance_list);
        if (!eta_list.empty()) ceas::apply_scenario_key(scenario, "eta", eta_list);
        if (!ce_mode.empty()) ceas::apply_scenario_key(scenario, "ce-reference-mode", ce_mode);
        if (!reference.empty()) ceas::apply_scenario_key(scenario, "reference", reference);
        if (!aperture.empty()) scenario.aperture = aperture;
        if (!out_csv.empty()) scenario.out_csv = out_csv;
        if (!out_fields.empty()) scenario.out_fields = out_fields;
        if (epsilon > 0.0) scenario.epsilon = epsilon;
        if (wavelength > 0.0) scenario.wavelength = wavelength;
        if (pitch > 0.0) scenario.pitch = pitch;
        if (samples > 0) scenario.n_samples = samples;
        if (dims > 0) scenario.dims = dims;
        if (repeats > 0) scenario.repeats = repeats;
        if (bench && scenario.repeats < 3) scenario.repeats = 3;
        if (budget > 0) scenario.oracle_budget = static_cast<std::uint64_t>(budget);

        const std::vector<ceas::EvaluationReport> rows = ceas::run_scenario(scenario);
        const ceas::GridSpec grid = ceas::make_grid(
            scenario.n_samples, scenario.dims == 1 ? 1 : scenario.n_samples, scenario.pitch);
        const double z_c = ceas::critical_distance(grid, scenario.wavelength);
        const std::string csv = ceas::scenario_csv(rows, z_c);
        if (!scenario.out_csv.empty()) ceas::write_scenario_csv(rows, z_c, scenario.out_csv);
        if (!quiet) std::fputs(csv.c_str(), stdout);
        return exit_ok;
    } catch (const ceas::resource_limit_error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return exit_budget;
    } catch (const ceas::io_error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return exit_io;
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return exit_invalid;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return exit_invalid;
    }
}
