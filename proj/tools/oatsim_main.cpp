// oatsim_main.cpp — CLI entry point: run scenarios, sweep parameters, list presets.

#include <CLI11.hpp>

#include <iostream>

#include "oatsim/scenario.hpp"

namespace {

// 0 success, 1 config error, 2 numerical-invariant violation
int classify_exception(const std::exception& e) {
    if (dynamic_cast<const oatsim::PositivityViolationError*>(&e)) return 2;
    if (dynamic_cast<const oatsim::NotHermitianError*>(&e)) return 2;
    if (dynamic_cast<const oatsim::TruncationInsufficientError*>(&e)) return 2;
    if (dynamic_cast<const std::invalid_argument*>(&e)) return 1;
    return 2;
}

std::vector<double> parse_values(const std::string& csv) {
    std::vector<double> out;
    size_t pos = 0;
    while (pos < csv.size()) {
        const size_t comma = csv.find(',', pos);
        const std::string tok = csv.substr(pos, comma == std::string::npos ? comma : comma - pos);
        try {
            out.push_back(std::stod(tok));
        } catch (const std::exception&) {
            throw oatsim::ConfigError("bad value in --values: '" + tok + "'");
        }
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    if (out.empty()) throw oatsim::ConfigError("--values is empty");
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"oatsim — driven Tavis-Cummings / one-axis-twisting simulator"};
    app.require_subcommand(1);

    std::string scenario_name, config_path, out_path, axis, values_csv;
    int workers = 0, nmax = -1;
    bool no_timestamp = false;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--scenario", scenario_name, "named preset (see list-presets)");
        cmd->add_option("--config", config_path, "config file path");
        cmd->add_option("--out", out_path, "output CSV path");
        cmd->add_option("--workers", workers, "parallel sweep workers");
        cmd->add_option("--nmax", nmax, "Fock truncation override");
        cmd->add_flag("--no-timestamp", no_timestamp, "suppress timestamp in metadata");
    };

    CLI::App* run_cmd = app.add_subcommand("run", "run one scenario");
    add_common(run_cmd);
    CLI::App* sweep_cmd = app.add_subcommand("sweep", "sweep one numeric config field");
    add_common(sweep_cmd);
    sweep_cmd->add_option("--axis", axis, "config field to sweep")->required();
    sweep_cmd->add_option("--values", values_csv, "comma-separated values")->required();
    CLI::App* list_cmd = app.add_subcommand("list-presets", "list named scenarios");

    CLI11_PARSE(app, argc, argv);

    try {
        if (list_cmd->parsed()) {
            for (const auto& name : oatsim::preset_names()) std::cout << name << "\n";
            return 0;
        }

        oatsim::ScenarioConfig cfg;
        if (!scenario_name.empty()) {
            cfg = oatsim::preset(scenario_name);
        } else if (!config_path.empty()) {
            cfg = oatsim::load_config_file(config_path);
        } else {
            throw oatsim::ConfigError("need --scenario or --config");
        }
        if (workers > 0) cfg.workers = workers;
        if (nmax >= 0) cfg.n_max_override = nmax;
        if (no_timestamp) cfg.emit_timestamp = false;
        if (!out_path.empty()) cfg.out_path = out_path;
        if (cfg.out_path.empty()) cfg.out_path = cfg.id + ".csv";

        if (run_cmd->parsed()) {
            const oatsim::ResultSeries series = oatsim::run_scenario(cfg);
            oatsim::write_series_csv(series, cfg.out_path);
            std::cout << cfg.out_path << ": " << series.rows.size()
                      << " samples, min xi2 = " << series.min_xi2()
                      << ", max fidelity = " << series.max_fidelity() << "\n";
            return 0;
        }

        // sweep
        const oatsim::SweepResult sweep =
            oatsim::run_sweep(cfg, axis, parse_values(values_csv));
        bool any_failed = false;
        int idx = 0;
        for (const auto& point : sweep.points) {
            if (point.series) {
                const std::string path =
                    cfg.out_path + "." + std::to_string(idx) + ".csv";
                oatsim::write_series_csv(*point.series, path);
                std::cout << sweep.axis << "=" << point.value << ": min xi2 = " << point.min_xi2
                          << ", max fidelity = " << point.max_fidelity << " -> " << path << "\n";
            } else {
                any_failed = true;
                std::cerr << sweep.axis << "=" << point.value << ": FAILED: " << point.error
                          << "\n";
            }
            ++idx;
        }
        oatsim::write_sweep_summary(sweep, cfg.out_path);
        std::cout << "summary -> " << cfg.out_path << "\n";
        if (any_failed) return 2;
        return 0;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return classify_exception(e);
    }
}
