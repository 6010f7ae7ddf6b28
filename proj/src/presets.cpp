#include "oatsim/scenario.hpp"

namespace oatsim {

namespace {

ScenarioConfig base10() {
    ScenarioConfig cfg;
    cfg.n_atoms = 10;
    cfg.chi = 1.0;
    cfg.input = BosonInput::coherent(1.0);
    return cfg;
}

// Constant-drive runs start from the pole CSS |0,0>; the drive then spins it
// about x. Pulse-train and undriven runs start from the equatorial |pi/2,0>.
ScenarioConfig fig2a(double omega0) {
    ScenarioConfig cfg = base10();
    cfg.id = "fig2a";
    cfg.model = ModelKind::Eq16;
    cfg.drive = DriveWaveform::constant(omega0);
    cfg.initial_css = {0.0, 0.0};
    cfg.t_end = 0.8;
    cfg.n_samples = 161;
    return cfg;
}

ScenarioConfig fig2b(double omega0) {
    ScenarioConfig cfg = base10();
    cfg.id = "fig2b";
    cfg.model = ModelKind::Eq16;
    cfg.drive = DriveWaveform::constant(omega0);
    cfg.initial_css = {0.0, 0.0};
    cfg.t_end = 4.0;
    cfg.align = GridAlign::DrivePeriods;
    return cfg;
}

ScenarioConfig fig3(double duty, double t_end) {
    ScenarioConfig cfg = base10();
    cfg.model = ModelKind::Eq16;
    cfg.drive = DriveWaveform::canonical_pulse_train(duty, 0.1);
    cfg.initial_css = {M_PI / 2, 0.0};
    cfg.t_end = t_end;
    cfg.align = GridAlign::EchoReadout;
    return cfg;
}

ScenarioConfig fig4(LindbladKind kind, double gamma) {
    ScenarioConfig cfg = base10();
    cfg.id = "fig4";
    cfg.model = ModelKind::Lindblad;
    cfg.lindblad_kind = kind;
    cfg.gamma = gamma;
    cfg.n_samples = 161;
    switch (kind) {
        case LindbladKind::Eq26:
            cfg.initial_css = {0.0, 0.0};
            cfg.t_end = 4.0;  // cat forms at chi t = pi under -(chi/2) S_x^2
            break;
        case LindbladKind::Eq26Doubled:
            cfg.initial_css = {0.0, 0.0};
            cfg.t_end = 2.0;
            break;
        case LindbladKind::Eq27:
            cfg.initial_css = {M_PI / 2, 0.0};
            cfg.t_end = 2.0;
            break;
        case LindbladKind::Eq25:
            cfg.initial_css = {M_PI / 2, 0.0};
            cfg.t_end = 2.0;
            break;
    }
    return cfg;
}

}  // namespace

std::vector<std::string> preset_names() {
    return {"fig2a_ideal", "fig2a_red",   "fig2a_blue",   "fig2a_orange", "fig2a_cyan",
            "fig2b_red",   "fig2b_orange", "fig2b_cyan",
            "fig3a_ideal", "fig3a_red",   "fig3a_d03",    "fig3a_d001",
            "fig3b_red",   "fig3b_orange", "fig3b_cyan",
            "fig4_eq26",   "fig4_eq26_doubled", "fig4_eq27"};
}

ScenarioConfig preset(const std::string& name) {
    // Fig. 2: constant drive, N=10, coherent alpha=1.
    if (name == "fig2a_ideal") {
        ScenarioConfig cfg = base10();
        cfg.id = name;
        cfg.model = ModelKind::IdealOat;
        cfg.ideal_axis = SpinAxis::X;
        cfg.ideal_strength = -0.5;
        cfg.initial_css = {0.0, 0.0};
        cfg.t_end = 0.8;
        cfg.n_samples = 161;
        return cfg;
    }
    if (name == "fig2a_red") {
        ScenarioConfig cfg = base10();
        cfg.id = name;
        cfg.model = ModelKind::Eq2;
        cfg.t_end = 0.8;
        cfg.n_samples = 161;
        return cfg;
    }
    if (name == "fig2a_blue") { auto c = fig2a(16.0); c.id = name; return c; }
    if (name == "fig2a_orange") { auto c = fig2a(32.0); c.id = name; return c; }
    if (name == "fig2a_cyan") { auto c = fig2a(160.0); c.id = name; return c; }

    if (name == "fig2b_red") {
        ScenarioConfig cfg = base10();
        cfg.id = name;
        cfg.model = ModelKind::Eq2;
        cfg.t_end = 4.0;
        cfg.n_samples = 201;
        return cfg;
    }
    if (name == "fig2b_orange") { auto c = fig2b(32.0); c.id = name; return c; }
    if (name == "fig2b_cyan") { auto c = fig2b(160.0); c.id = name; return c; }

    // Fig. 3: canonical pulse trains, T = 0.1, sampled at echo readout times.
    if (name == "fig3a_ideal") {
        ScenarioConfig cfg = base10();
        cfg.id = name;
        cfg.model = ModelKind::IdealOat;
        cfg.ideal_axis = SpinAxis::Y;
        cfg.ideal_strength = 1.0;
        cfg.t_end = 0.6;
        cfg.n_samples = 121;
        return cfg;
    }
    if (name == "fig3a_red") {
        ScenarioConfig cfg = base10();
        cfg.id = name;
        cfg.model = ModelKind::Eq2;
        cfg.t_end = 0.6;
        cfg.n_samples = 121;
        return cfg;
    }
    if (name == "fig3a_d03") { auto c = fig3(0.3, 0.6); c.id = name; return c; }
    if (name == "fig3a_d001") { auto c = fig3(0.01, 0.6); c.id = name; return c; }

    if (name == "fig3b_red") {
        // d = 0: no pulses, plain dispersive evolution
        ScenarioConfig cfg = base10();
        cfg.id = name;
        cfg.model = ModelKind::Eq2;
        cfg.t_end = 2.4;
        cfg.n_samples = 121;
        return cfg;
    }
    if (name == "fig3b_orange") { auto c = fig3(0.2, 2.4); c.id = name; return c; }
    if (name == "fig3b_cyan") { auto c = fig3(0.04, 2.4); c.id = name; return c; }

    // Fig. 4: spin-only master equations at Gamma = 0.01 chi.
    if (name == "fig4_eq26") { auto c = fig4(LindbladKind::Eq26, 0.01); c.id = name; return c; }
    if (name == "fig4_eq26_doubled") {
        auto c = fig4(LindbladKind::Eq26Doubled, 0.01);
        c.id = name;
        return c;
    }
    if (name == "fig4_eq27") { auto c = fig4(LindbladKind::Eq27, 0.01); c.id = name; return c; }

    throw ConfigError("unknown preset: " + name);
}

}  // namespace oatsim
