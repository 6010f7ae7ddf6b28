#include "oatsim/scenario.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <thread>

namespace oatsim {

std::string library_version() { return "0.1.0"; }

namespace {

std::string model_name(ModelKind m) {
    switch (m) {
        case ModelKind::Eq2: return "eq2";
        case ModelKind::Eq16: return "eq16";
        case ModelKind::Eq15: return "eq15";
        case ModelKind::IdealOat: return "ideal_oat";
        case ModelKind::AppendixB: return "appendix_b";
        case ModelKind::Lindblad: return "lindblad";
    }
    return "?";
}

std::string axis_name(SpinAxis a) {
    switch (a) {
        case SpinAxis::X: return "x";
        case SpinAxis::Y: return "y";
        case SpinAxis::Z: return "z";
    }
    return "?";
}

std::string lindblad_name(LindbladKind k) {
    switch (k) {
        case LindbladKind::Eq25: return "eq25";
        case LindbladKind::Eq26: return "eq26";
        case LindbladKind::Eq26Doubled: return "eq26_doubled";
        case LindbladKind::Eq27: return "eq27";
    }
    return "?";
}

std::string align_name(GridAlign a) {
    switch (a) {
        case GridAlign::Uniform: return "uniform";
        case GridAlign::EchoReadout: return "echo";
        case GridAlign::DrivePeriods: return "drive_periods";
    }
    return "?";
}

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

}  // namespace

std::map<std::string, std::string> ScenarioConfig::echo() const {
    std::map<std::string, std::string> kv;
    kv["id"] = id;
    kv["n_atoms"] = std::to_string(n_atoms);
    kv["chi"] = fmt(chi);
    kv["model"] = model_name(model);
    switch (input.kind) {
        case BosonInput::Kind::Fock:
            kv["boson.kind"] = "fock";
            kv["boson.n0"] = std::to_string(input.n0);
            break;
        case BosonInput::Kind::Coherent:
            kv["boson.kind"] = "coherent";
            kv["boson.alpha_re"] = fmt(input.alpha.real());
            kv["boson.alpha_im"] = fmt(input.alpha.imag());
            break;
        case BosonInput::Kind::Thermal:
            kv["boson.kind"] = "thermal";
            kv["boson.nbar"] = fmt(input.nbar);
            break;
        case BosonInput::Kind::Squeezed:
            kv["boson.kind"] = "squeezed";
            kv["boson.r"] = fmt(input.r);
            break;
    }
    kv["drive.kind"] = drive.kind == DriveWaveform::Kind::Constant ? "constant" : "pulse_train";
    kv["drive.omega0"] = fmt(drive.omega0);
    if (drive.kind == DriveWaveform::Kind::PulseTrain) {
        kv["drive.amplitude"] = fmt(drive.amplitude);
        kv["drive.duty"] = fmt(drive.duty);
        kv["drive.period"] = fmt(drive.period);
    }
    if (model == ModelKind::IdealOat) {
        kv["ideal.axis"] = axis_name(ideal_axis);
        kv["ideal.strength"] = fmt(ideal_strength);
        kv["ideal.omega_x"] = fmt(ideal_omega_x);
    }
    if (model == ModelKind::AppendixB) {
        kv["appendix.variant"] =
            appendix_variant == AppendixBVariant::ConstantDrive ? "constant" : "oscillating";
        kv["appendix.omega_drive"] = fmt(appendix_omega_drive);
        kv["appendix.omega0"] = fmt(appendix_omega0);
    }
    if (model == ModelKind::Lindblad) {
        kv["lindblad.kind"] = lindblad_name(lindblad_kind);
        kv["gamma"] = fmt(gamma);
    }
    if (model == ModelKind::Eq15) kv["delta_prime_over_g"] = fmt(delta_prime_over_g);
    kv["init.theta"] = fmt(initial_css.theta);
    kv["init.phi"] = fmt(initial_css.phi);
    kv["grid.t_end"] = fmt(t_end);
    kv["grid.samples"] = std::to_string(n_samples);
    kv["grid.align"] = align_name(align);
    if (n_max_override >= 0) kv["nmax"] = std::to_string(n_max_override);
    kv["workers"] = std::to_string(workers);
    return kv;
}

double ResultSeries::min_xi2() const {
    double v = rows.empty() ? 0.0 : rows.front().xi2;
    for (const auto& r : rows) v = std::min(v, r.xi2);
    return v;
}

double ResultSeries::max_fidelity() const {
    double v = rows.empty() ? 0.0 : rows.front().fidelity_ghz;
    for (const auto& r : rows) v = std::max(v, r.fidelity_ghz);
    return v;
}

// ------------------------------ grid building ---------------------------------

namespace {

TimeGrid build_grid(const ScenarioConfig& cfg) {
    if (cfg.n_samples < 1) throw ConfigError("grid.samples must be >= 1");
    if (cfg.t_end < 0) throw ConfigError("grid.t_end must be >= 0");
    switch (cfg.align) {
        case GridAlign::Uniform:
            return TimeGrid::uniform(0.0, cfg.t_end, cfg.n_samples);
        case GridAlign::EchoReadout: {
            if (cfg.drive.kind != DriveWaveform::Kind::PulseTrain) {
                throw ConfigError("grid.align=echo requires a pulse-train drive");
            }
            // Echo-complete readout: the Stark phase accumulated in one gap is
            // undone over the next, so observables are referenced at
            // t = 2kT - tau0/2 (end of every second gap).
            std::vector<double> ts{0.0};
            const double step = 2.0 * cfg.drive.period;
            for (double t = step; t <= cfg.t_end + 1e-12; t += step) {
                ts.push_back(t - cfg.drive.pulse_width() / 2);
            }
            return TimeGrid::from_samples(std::move(ts));
        }
        case GridAlign::DrivePeriods: {
            if (cfg.drive.kind != DriveWaveform::Kind::Constant || cfg.drive.omega0 == 0.0) {
                throw ConfigError("grid.align=drive_periods requires a constant nonzero drive");
            }
            // Full drive turns: the collective rotation exp(-i Omega0 t S_x)
            // is the identity at these times (integer S).
            std::vector<double> ts{0.0};
            const double step = 2.0 * M_PI / std::abs(cfg.drive.omega0);
            for (double t = step; t <= cfg.t_end + 1e-12; t += step) ts.push_back(t);
            return TimeGrid::from_samples(std::move(ts));
        }
    }
    throw ConfigError("unknown grid alignment");
}

bool model_is_spin_only(const ScenarioConfig& cfg) {
    return cfg.model == ModelKind::IdealOat || cfg.model == ModelKind::Lindblad;
}

}  // namespace

std::pair<QuantumState, double> ghz_target(const ScenarioConfig& cfg) {
    const SpinEnsemble ens(cfg.n_atoms);
    const auto ops = collective_operators(ens);
    SpinAxis axis = SpinAxis::Z;
    double strength = cfg.chi;
    CssSpec start = cfg.initial_css;
    switch (cfg.model) {
        case ModelKind::Eq2:
        case ModelKind::Eq15:
        case ModelKind::AppendixB:
            axis = SpinAxis::Z;
            strength = cfg.chi;
            break;
        case ModelKind::Eq16:
            if (cfg.drive.kind == DriveWaveform::Kind::Constant && cfg.drive.omega0 != 0.0) {
                axis = SpinAxis::X;      // constant drive averages to -(chi/2) S_x^2
                strength = -cfg.chi / 2;
            } else if (cfg.drive.kind == DriveWaveform::Kind::PulseTrain) {
                axis = SpinAxis::Y;      // canonical pulse train averages to chi S_y^2
                strength = cfg.chi;
            }
            break;
        case ModelKind::IdealOat:
            axis = cfg.ideal_axis;
            strength = cfg.ideal_strength;
            break;
        case ModelKind::Lindblad:
            switch (cfg.lindblad_kind) {
                case LindbladKind::Eq25: axis = SpinAxis::Z; strength = cfg.chi; break;
                case LindbladKind::Eq26: axis = SpinAxis::X; strength = -cfg.chi / 2; break;
                case LindbladKind::Eq26Doubled: axis = SpinAxis::X; strength = -cfg.chi; break;
                case LindbladKind::Eq27: axis = SpinAxis::Y; strength = cfg.chi; break;
            }
            break;
    }
    if (strength == 0.0) {
        return {ghz_state(ens), 0.0};
    }
    const double t_cat = M_PI / (2.0 * std::abs(strength));
    const OperatorMatrix h = h_ideal_oat(axis, strength, ops);
    QuantumState psi0 = css_state(ens, start);
    auto states = evolve_unitary_static(h, psi0, TimeGrid::uniform(0.0, t_cat, 2));
    return {states.back(), t_cat};
}

// ------------------------------ scenario runner -------------------------------

ResultSeries run_scenario(const ScenarioConfig& cfg) {
    if (cfg.n_atoms < 1) throw ConfigError("n_atoms must be >= 1");
    const SpinEnsemble ens(cfg.n_atoms);
    const auto spin_ops = collective_operators(ens);
    const TimeGrid grid = build_grid(cfg);

    ResultSeries series;
    series.config = cfg;
    series.version = library_version();

    QuantumState spin0 = css_state(ens, cfg.initial_css);
    const auto [target, t_cat] = ghz_target(cfg);

    std::vector<QuantumState> spin_states;  // reduced (or native) spin states
    std::vector<double> trace_errors;

    if (model_is_spin_only(cfg)) {
        series.n_max_used = 0;
        if (cfg.model == ModelKind::IdealOat) {
            const OperatorMatrix h =
                h_ideal_oat(cfg.ideal_axis, cfg.ideal_strength, spin_ops, cfg.ideal_omega_x);
            spin_states = evolve_unitary_static(h, spin0, grid);
        } else {
            ModelParams params;
            params.n_atoms = cfg.n_atoms;
            params.chi = cfg.chi;
            params.gamma = cfg.gamma;
            const LindbladSpec spec =
                lindblad_builders(cfg.lindblad_kind, params, spin_ops, cfg.drive.omega0);
            spin_states = evolve_lindblad(spec, QuantumState::density(spin0.density(), spin0.basis),
                                          grid);
        }
        for (const auto& s : spin_states) trace_errors.push_back(s.norm_defect());
    } else {
        const int n_max =
            cfg.n_max_override >= 0 ? cfg.n_max_override : truncation_recommendation(cfg.input);
        series.n_max_used = n_max;
        const BosonSpace space(n_max);
        series.truncation_deficit = truncation_deficit(space, cfg.input);
        const auto boson_ops = ladder_operators(space);
        const QuantumState boson0 = input_state(space, cfg.input);
        const BasisTag ctag = BasisTag::composite(cfg.n_atoms, n_max);

        QuantumState psi0 = [&] {
            if (boson0.is_vector()) {
                const Vector vs = spin0.vec();
                const Vector vb = boson0.vec();
                Vector v(ctag.dim());
                for (int i = 0; i < ens.dim(); ++i) {
                    v.segment(i * space.dim(), space.dim()) = vs(i) * vb;
                }
                return QuantumState::vector(std::move(v), ctag);
            }
            OperatorMatrix rs(spin0.density(), ens.basis());
            OperatorMatrix rb(boson0.density(), space.basis());
            return QuantumState::density(kron(rs, rb).data, ctag);
        }();

        ModelParams params;
        params.n_atoms = cfg.n_atoms;
        params.chi = cfg.chi;
        params.omega0 = cfg.appendix_omega0;

        std::vector<QuantumState> composite;
        switch (cfg.model) {
            case ModelKind::Eq2:
                composite = evolve_unitary_static(h_eff_tc(params, spin_ops, boson_ops), psi0, grid);
                break;
            case ModelKind::Eq16:
                composite = evolve_unitary_pulsed(params, cfg.drive, psi0, grid);
                break;
            case ModelKind::Eq15: {
                ModelParams disp =
                    ModelParams::dispersive(cfg.n_atoms, cfg.delta_prime_over_g, cfg.chi);
                composite = evolve_unitary_static(
                    h_full_driven_tc(disp, cfg.drive.omega0, spin_ops, boson_ops), psi0, grid);
                break;
            }
            case ModelKind::AppendixB:
                composite = evolve_unitary_static(
                    h_appendix_b(params, cfg.appendix_variant, cfg.appendix_omega_drive, spin_ops,
                                 boson_ops),
                    psi0, grid);
                break;
            default:
                throw ConfigError("run_scenario: unhandled model");
        }
        for (const auto& s : composite) {
            trace_errors.push_back(s.norm_defect());
            spin_states.push_back(partial_trace_boson(s));
        }
    }

    series.rows.reserve(grid.samples.size());
    for (size_t i = 0; i < grid.samples.size(); ++i) {
        const QuantumState& s = spin_states[i];
        const SqueezingReport sq = squeezing_parameter(s);
        ResultRow row;
        row.t = grid.samples[i];
        row.xi2 = sq.xi2;
        row.min_variance = sq.min_variance;
        row.fidelity_ghz = fidelity(s, target);
        row.purity = purity(s);
        row.sx_mean = expectation(s, spin_ops.s_x);
        row.trace_error = trace_errors[i];
        series.rows.push_back(row);
    }
    return series;
}

// --------------------------------- sweeps -------------------------------------

namespace {

void apply_axis(ScenarioConfig& cfg, const std::string& axis, double value) {
    if (axis == "gamma") {
        cfg.gamma = value;
    } else if (axis == "drive.omega0") {
        cfg.drive.omega0 = value;
    } else if (axis == "drive.duty") {
        if (cfg.drive.kind != DriveWaveform::Kind::PulseTrain) {
            throw ConfigError("sweep axis drive.duty requires a pulse-train drive");
        }
        cfg.drive = DriveWaveform::canonical_pulse_train(value, cfg.drive.period, cfg.drive.omega0);
    } else if (axis == "alpha") {
        cfg.input = BosonInput::coherent(value);
    } else if (axis == "nbar") {
        cfg.input = BosonInput::thermal(value);
    } else if (axis == "t_end") {
        cfg.t_end = value;
    } else if (axis == "n_atoms") {
        cfg.n_atoms = static_cast<int>(value);
    } else {
        throw ConfigError("unknown sweep axis: " + axis);
    }
}

}  // namespace

SweepResult run_sweep(const ScenarioConfig& base, const std::string& axis,
                      const std::vector<double>& values) {
    if (values.empty()) throw ConfigError("sweep: empty value list");
    {
        ScenarioConfig probe = base;  // fail fast on a bad axis name
        apply_axis(probe, axis, values.front());
    }
    SweepResult result;
    result.axis = axis;
    result.points.resize(values.size());

    std::atomic<size_t> next{0};
    const int workers = std::max(1, std::min<int>(base.workers, static_cast<int>(values.size())));
    auto work = [&]() {
        for (;;) {
            const size_t i = next.fetch_add(1);
            if (i >= values.size()) return;
            SweepPoint& point = result.points[i];
            point.value = values[i];
            try {
                ScenarioConfig cfg = base;
                apply_axis(cfg, axis, values[i]);
                cfg.id = base.id + "[" + axis + "=" + fmt(values[i]) + "]";
                point.series = run_scenario(cfg);
                point.min_xi2 = point.series->min_xi2();
                point.max_fidelity = point.series->max_fidelity();
            } catch (const std::exception& e) {
                point.error = e.what();
            }
        }
    };
    if (workers == 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (int w = 0; w < workers; ++w) pool.emplace_back(work);
        for (auto& th : pool) th.join();
    }
    return result;
}

}  // namespace oatsim
