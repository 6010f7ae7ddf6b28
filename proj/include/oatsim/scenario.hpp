// scenario.hpp — Declarative experiment runner: named presets for the
// figure-style scenarios, config-file parsing, deterministic tabular output,
// and parameter sweeps.

#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "oatsim/analytics.hpp"
#include "oatsim/observables.hpp"
#include "oatsim/propagation.hpp"

namespace oatsim {

enum class ModelKind { Eq2, Eq16, Eq15, IdealOat, AppendixB, Lindblad };

enum class GridAlign {
    Uniform,       // evenly spaced samples
    EchoReadout,   // pulse-train echo times t = 2kT - tau0/2 (plus t = 0)
    DrivePeriods,  // constant-drive periods t = k 2 pi / Omega0
};

struct ScenarioConfig {
    std::string id = "custom";
    int n_atoms = 10;
    double chi = 1.0;
    BosonInput input = BosonInput::coherent(1.0);
    ModelKind model = ModelKind::Eq2;
    DriveWaveform drive = DriveWaveform::constant(0.0);

    SpinAxis ideal_axis = SpinAxis::Z;  // ideal_oat parameters
    double ideal_strength = 1.0;
    double ideal_omega_x = 0.0;

    AppendixBVariant appendix_variant = AppendixBVariant::ConstantDrive;
    double appendix_omega_drive = 0.0;
    double appendix_omega0 = 1.0e6;

    LindbladKind lindblad_kind = LindbladKind::Eq26;
    double gamma = 0.0;
    double delta_prime_over_g = 20.0;  // eq15 only

    CssSpec initial_css{M_PI / 2, 0.0};
    double t_end = 1.0;
    int n_samples = 101;
    GridAlign align = GridAlign::Uniform;

    std::vector<std::string> observables;  // empty = all columns
    std::string out_path;
    int n_max_override = -1;
    int workers = 1;
    bool emit_timestamp = true;

    std::map<std::string, std::string> echo() const;  // flat key-value dump
};

struct ResultRow {
    double t = 0.0;
    double xi2 = 0.0;
    double fidelity_ghz = 0.0;
    double purity = 0.0;
    double sx_mean = 0.0;
    double min_variance = 0.0;
    double trace_error = 0.0;
};

struct ResultSeries {
    ScenarioConfig config;
    std::vector<ResultRow> rows;
    int n_max_used = -1;
    double truncation_deficit = 0.0;
    std::string version;

    double min_xi2() const;
    double max_fidelity() const;
};

// Deterministic dispatch to model/propagation/observables.
ResultSeries run_scenario(const ScenarioConfig& config);

// The pure spin-state target used for the fidelity column of a scenario
// (the cat state its ideal limit prepares) and the time it forms.
std::pair<QuantumState, double> ghz_target(const ScenarioConfig& config);

struct SweepPoint {
    double value = 0.0;
    std::optional<ResultSeries> series;  // empty on failure
    std::string error;
    double min_xi2 = 0.0;
    double max_fidelity = 0.0;
};

struct SweepResult {
    std::string axis;
    std::vector<SweepPoint> points;  // ordered as the input values
};

// Runs one scenario per value of a numeric config field ("gamma",
// "drive.omega0", "drive.duty", "alpha", "nbar", "t_end", "n_atoms"),
// up to config.workers points in parallel. Failures are recorded per point.
SweepResult run_sweep(const ScenarioConfig& base, const std::string& axis,
                      const std::vector<double>& values);

// ------------------------------- presets --------------------------------------

std::vector<std::string> preset_names();
ScenarioConfig preset(const std::string& name);

// ------------------------------- file I/O -------------------------------------

// Flat key-value config text with optional [section] headers; "# " comments.
ScenarioConfig parse_config_text(const std::string& text);
ScenarioConfig load_config_file(const std::string& path);

// One CSV table per scenario plus a JSON metadata sidecar (<path>.meta.json).
void write_series_csv(const ResultSeries& series, const std::string& path);
void write_sweep_summary(const SweepResult& sweep, const std::string& path);

std::string library_version();

}  // namespace oatsim
