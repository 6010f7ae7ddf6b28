#include <json.hpp>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "oatsim/scenario.hpp"

namespace oatsim {

namespace {

std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    const auto b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

double to_double(const std::string& key, const std::string& v) {
    try {
        size_t pos = 0;
        const double d = std::stod(v, &pos);
        if (pos != v.size()) throw std::invalid_argument(v);
        return d;
    } catch (const std::exception&) {
        throw ConfigError("config: bad numeric value for " + key + ": '" + v + "'");
    }
}

int to_int(const std::string& key, const std::string& v) {
    try {
        size_t pos = 0;
        const int i = std::stoi(v, &pos);
        if (pos != v.size()) throw std::invalid_argument(v);
        return i;
    } catch (const std::exception&) {
        throw ConfigError("config: bad integer value for " + key + ": '" + v + "'");
    }
}

std::string csv_num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

}  // namespace

ScenarioConfig parse_config_text(const std::string& text) {
    std::map<std::string, std::string> kv;
    std::istringstream in(text);
    std::string line, section;
    while (std::getline(in, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        if (line.front() == '[' && line.back() == ']') {
            section = trim(line.substr(1, line.size() - 2));
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos) throw ConfigError("config: expected key = value: " + line);
        std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (!section.empty()) key = section + "." + key;
        kv[key] = value;
    }

    ScenarioConfig cfg;
    // start from a preset when requested, then apply overrides
    if (auto it = kv.find("preset"); it != kv.end()) {
        cfg = preset(it->second);
        kv.erase(it);
    }

    auto take = [&](const char* key) -> std::optional<std::string> {
        auto it = kv.find(key);
        if (it == kv.end()) return std::nullopt;
        std::string v = it->second;
        kv.erase(it);
        return v;
    };

    if (auto v = take("id")) cfg.id = *v;
    if (auto v = take("n_atoms")) cfg.n_atoms = to_int("n_atoms", *v);
    if (auto v = take("chi")) cfg.chi = to_double("chi", *v);

    if (auto v = take("model")) {
        if (*v == "eq2") cfg.model = ModelKind::Eq2;
        else if (*v == "eq16") cfg.model = ModelKind::Eq16;
        else if (*v == "eq15") cfg.model = ModelKind::Eq15;
        else if (*v == "ideal_oat") cfg.model = ModelKind::IdealOat;
        else if (*v == "appendix_b") cfg.model = ModelKind::AppendixB;
        else if (*v == "lindblad") cfg.model = ModelKind::Lindblad;
        else throw ConfigError("config: unknown model: " + *v);
    }

    if (auto v = take("boson.kind")) {
        double are = 1.0, aim = 0.0;
        if (auto w = take("boson.alpha_re")) are = to_double("boson.alpha_re", *w);
        if (auto w = take("boson.alpha_im")) aim = to_double("boson.alpha_im", *w);
        if (*v == "fock") {
            int n0 = 0;
            if (auto w = take("boson.n0")) n0 = to_int("boson.n0", *w);
            cfg.input = BosonInput::fock(n0);
        } else if (*v == "coherent") {
            cfg.input = BosonInput::coherent(Complex(are, aim));
        } else if (*v == "thermal") {
            double nbar = 0.0;
            if (auto w = take("boson.nbar")) nbar = to_double("boson.nbar", *w);
            cfg.input = BosonInput::thermal(nbar);
        } else if (*v == "squeezed") {
            double r = 0.0;
            if (auto w = take("boson.r")) r = to_double("boson.r", *w);
            cfg.input = BosonInput::squeezed(r);
        } else {
            throw ConfigError("config: unknown boson.kind: " + *v);
        }
    }

    {
        std::optional<std::string> kind = take("drive.kind");
        std::optional<std::string> om = take("drive.omega0");
        std::optional<std::string> amp = take("drive.amplitude");
        std::optional<std::string> duty = take("drive.duty");
        std::optional<std::string> period = take("drive.period");
        std::optional<std::string> canonical = take("drive.canonical");
        if (kind) {
            if (*kind == "constant") {
                cfg.drive = DriveWaveform::constant(om ? to_double("drive.omega0", *om) : 0.0);
            } else if (*kind == "pulse_train") {
                const double d = duty ? to_double("drive.duty", *duty) : 0.01;
                const double t = period ? to_double("drive.period", *period) : 0.1;
                const double off = om ? to_double("drive.omega0", *om) : 0.0;
                if (canonical && (*canonical == "false" || *canonical == "0")) {
                    if (!amp) throw ConfigError("config: non-canonical pulse train needs drive.amplitude");
                    cfg.drive = DriveWaveform::pulse_train(off, to_double("drive.amplitude", *amp), d, t);
                } else if (amp) {
                    cfg.drive = DriveWaveform::pulse_train(off, to_double("drive.amplitude", *amp), d, t);
                } else {
                    cfg.drive = DriveWaveform::canonical_pulse_train(d, t, off);
                }
            } else {
                throw ConfigError("config: unknown drive.kind: " + *kind);
            }
        } else if (om) {
            cfg.drive.omega0 = to_double("drive.omega0", *om);
        }
    }

    if (auto v = take("ideal.axis")) {
        if (*v == "x") cfg.ideal_axis = SpinAxis::X;
        else if (*v == "y") cfg.ideal_axis = SpinAxis::Y;
        else if (*v == "z") cfg.ideal_axis = SpinAxis::Z;
        else throw ConfigError("config: unknown ideal.axis: " + *v);
    }
    if (auto v = take("ideal.strength")) cfg.ideal_strength = to_double("ideal.strength", *v);
    if (auto v = take("ideal.omega_x")) cfg.ideal_omega_x = to_double("ideal.omega_x", *v);

    if (auto v = take("appendix.variant")) {
        if (*v == "constant") cfg.appendix_variant = AppendixBVariant::ConstantDrive;
        else if (*v == "oscillating") cfg.appendix_variant = AppendixBVariant::OscillatingDrive;
        else throw ConfigError("config: unknown appendix.variant: " + *v);
    }
    if (auto v = take("appendix.omega_drive")) {
        cfg.appendix_omega_drive = to_double("appendix.omega_drive", *v);
    }
    if (auto v = take("appendix.omega0")) cfg.appendix_omega0 = to_double("appendix.omega0", *v);

    if (auto v = take("lindblad.kind")) {
        if (*v == "eq25") cfg.lindblad_kind = LindbladKind::Eq25;
        else if (*v == "eq26") cfg.lindblad_kind = LindbladKind::Eq26;
        else if (*v == "eq26_doubled") cfg.lindblad_kind = LindbladKind::Eq26Doubled;
        else if (*v == "eq27") cfg.lindblad_kind = LindbladKind::Eq27;
        else throw ConfigError("config: unknown lindblad.kind: " + *v);
    }
    if (auto v = take("gamma")) cfg.gamma = to_double("gamma", *v);
    if (auto v = take("delta_prime_over_g")) {
        cfg.delta_prime_over_g = to_double("delta_prime_over_g", *v);
    }

    if (auto v = take("init.theta")) cfg.initial_css.theta = to_double("init.theta", *v);
    if (auto v = take("init.phi")) cfg.initial_css.phi = to_double("init.phi", *v);

    if (auto v = take("grid.t_end")) cfg.t_end = to_double("grid.t_end", *v);
    if (auto v = take("grid.samples")) cfg.n_samples = to_int("grid.samples", *v);
    if (auto v = take("grid.align")) {
        if (*v == "uniform") cfg.align = GridAlign::Uniform;
        else if (*v == "echo") cfg.align = GridAlign::EchoReadout;
        else if (*v == "drive_periods") cfg.align = GridAlign::DrivePeriods;
        else throw ConfigError("config: unknown grid.align: " + *v);
    }

    if (auto v = take("out")) cfg.out_path = *v;
    if (auto v = take("nmax")) cfg.n_max_override = to_int("nmax", *v);
    if (auto v = take("workers")) cfg.workers = to_int("workers", *v);

    if (!kv.empty()) throw ConfigError("config: unknown key: " + kv.begin()->first);
    if (cfg.workers < 1) throw ConfigError("config: workers must be >= 1");
    return cfg;
}

ScenarioConfig load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config_text(buf.str());
}

namespace {

void write_metadata(const ResultSeries& series, const std::string& csv_path) {
    nlohmann::json meta;
    meta["config"] = series.config.echo();
    meta["n_max_used"] = series.n_max_used;
    meta["truncation_deficit"] = series.truncation_deficit;
    meta["version"] = series.version;
    meta["tolerances"] = {{"trace", kTol.trace},
                          {"state_norm", kTol.state_norm},
                          {"eigenvalue_floor", kTol.eigenvalue_floor},
                          {"hermiticity", kTol.hermiticity}};
    if (series.config.emit_timestamp) {
        const auto now = std::chrono::system_clock::now();
        meta["timestamp_unix"] =
            std::chrono::duration_cast<std::chrono::seconds>(now.time_since_epoch()).count();
    }
    std::ofstream out(csv_path + ".meta.json");
    if (!out) throw ConfigError("cannot write metadata: " + csv_path + ".meta.json");
    out << meta.dump(2) << "\n";
}

bool column_selected(const ScenarioConfig& cfg, const std::string& name) {
    if (cfg.observables.empty()) return true;
    for (const auto& o : cfg.observables) {
        if (o == name) return true;
    }
    return false;
}

}  // namespace

void write_series_csv(const ResultSeries& series, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw ConfigError("cannot write output file: " + path);
    const char* names[] = {"t",      "xi2",          "fidelity_ghz", "purity",
                           "Sx_mean", "min_variance", "trace_error"};
    bool first = true;
    for (const char* n : names) {
        if (n != std::string("t") && !column_selected(series.config, n)) continue;
        out << (first ? "" : ",") << n;
        first = false;
    }
    out << "\n";
    for (const auto& r : series.rows) {
        std::vector<std::pair<std::string, double>> cols = {
            {"t", r.t},           {"xi2", r.xi2},
            {"fidelity_ghz", r.fidelity_ghz}, {"purity", r.purity},
            {"Sx_mean", r.sx_mean}, {"min_variance", r.min_variance},
            {"trace_error", r.trace_error}};
        first = true;
        for (const auto& [name, value] : cols) {
            if (name != "t" && !column_selected(series.config, name)) continue;
            out << (first ? "" : ",") << csv_num(value);
            first = false;
        }
        out << "\n";
    }
    out.close();
    write_metadata(series, path);
}

void write_sweep_summary(const SweepResult& sweep, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw ConfigError("cannot write output file: " + path);
    out << sweep.axis << ",min_xi2,max_fidelity,error\n";
    for (const auto& p : sweep.points) {
        out << csv_num(p.value) << ",";
        if (p.series) {
            out << csv_num(p.min_xi2) << "," << csv_num(p.max_fidelity) << ",";
        } else {
            out << ",,\"" << p.error << "\"";
        }
        out << "\n";
    }
}

}  // namespace oatsim
