#include "oatsim/model.hpp"

#include <cmath>
#include <sstream>

namespace oatsim {

void ModelParams::validate(double rel_tol) const {
    if (chi < 0 || kappa < 0 || gamma < 0) {
        throw ConfigurationViolationError("ModelParams: rates must be nonnegative");
    }
    if (g != 0.0 && delta != 0.0) {
        const double implied = g * g / delta;
        if (std::abs(implied - chi) > rel_tol * std::max(1.0, std::abs(chi))) {
            throw ConfigurationViolationError("ModelParams: chi != g^2/Delta");
        }
    }
    if (kappa != 0.0 && delta_prime != 0.0 && gamma != 0.0) {
        const double implied = chi * kappa / delta_prime;
        if (std::abs(implied - gamma) > rel_tol * std::max(1.0, std::abs(gamma))) {
            throw ConfigurationViolationError("ModelParams: Gamma != chi kappa / Delta'");
        }
    }
}

ModelParams ModelParams::dispersive(int n_atoms, double delta_prime_over_g, double chi) {
    // In the drive frame the dispersive parameter is g^2/Delta'; fixing chi
    // and the ratio Delta'/g pins both.
    ModelParams p;
    p.n_atoms = n_atoms;
    p.chi = chi;
    p.delta_prime = delta_prime_over_g * delta_prime_over_g * chi;
    p.g = std::sqrt(chi * p.delta_prime);
    return p;
}

DriveWaveform DriveWaveform::constant(double omega0) {
    DriveWaveform w;
    w.kind = Kind::Constant;
    w.omega0 = omega0;
    return w;
}

DriveWaveform DriveWaveform::pulse_train(double omega0_offset, double amplitude, double duty,
                                         double period) {
    if (duty <= 0.0 || duty > 1.0) {
        throw ConfigurationViolationError("DriveWaveform: duty cycle must be in (0, 1]");
    }
    if (period <= 0.0) {
        throw ConfigurationViolationError("DriveWaveform: period must be positive");
    }
    DriveWaveform w;
    w.kind = Kind::PulseTrain;
    w.omega0 = omega0_offset;
    w.amplitude = amplitude;
    w.duty = duty;
    w.period = period;
    return w;
}

DriveWaveform DriveWaveform::canonical_pulse_train(double duty, double period,
                                                   double omega0_offset) {
    return pulse_train(omega0_offset, M_PI / (duty * period), duty, period);
}

bool DriveWaveform::is_canonical() const {
    return kind == Kind::PulseTrain && std::abs(pulse_area() - M_PI) <= kTol.canonical_pulse;
}

std::string DriveWaveform::str() const {
    std::ostringstream os;
    if (kind == Kind::Constant) {
        os << "constant(" << omega0 << ")";
    } else {
        os << "pulse_train(offset=" << omega0 << ", A0=" << amplitude << ", d=" << duty
           << ", T=" << period << ")";
    }
    return os.str();
}

double drive_value(const DriveWaveform& w, double t) {
    if (w.kind == DriveWaveform::Kind::Constant) return w.omega0;
    const double tau0 = w.pulse_width();
    double phase = std::fmod(t, w.period);
    if (phase < 0) phase += w.period;
    const bool inside = (phase < tau0 / 2) || (phase > w.period - tau0 / 2);
    return w.omega0 + (inside ? w.amplitude : 0.0);
}

double step_phase(const DriveWaveform& w, double t) {
    if (w.kind != DriveWaveform::Kind::PulseTrain) {
        throw ConfigurationViolationError("step_phase: pulse-train waveform required");
    }
    if (!w.is_canonical()) {
        throw ConfigurationViolationError("step_phase: pulse area " +
                                          std::to_string(w.pulse_area()) +
                                          " is not canonical (pi)");
    }
    if (t < 0) throw ConfigurationViolationError("step_phase: t must be >= 0");
    // Time spent inside pulses on [0, t]; pulses sit at [kT - tau0/2, kT + tau0/2],
    // so each complete period contributes one half pulse at each end.
    const double tau0 = w.pulse_width();
    const double full_periods = std::floor(t / w.period);
    const double phase = t - full_periods * w.period;
    double inside = full_periods * tau0;
    inside += std::min(phase, tau0 / 2);
    inside += std::max(0.0, phase - (w.period - tau0 / 2));
    return w.amplitude * inside;
}

namespace {

void require_composite_pair(const CollectiveOperators& spin_ops, const LadderOperators& boson_ops,
                            const ModelParams& params, const char* where) {
    if (spin_ops.s_z.basis.kind != BasisKind::Spin ||
        boson_ops.number.basis.kind != BasisKind::Boson) {
        throw BasisMismatchError(std::string(where) + ": expected spin and boson operator sets");
    }
    if (spin_ops.s_z.basis.n_atoms != params.n_atoms) {
        throw BasisMismatchError(std::string(where) + ": spin operators built for N=" +
                                 std::to_string(spin_ops.s_z.basis.n_atoms) +
                                 ", params say N=" + std::to_string(params.n_atoms));
    }
}

}  // namespace

OperatorMatrix h_eff_tc(const ModelParams& params, const CollectiveOperators& spin_ops,
                        const LadderOperators& boson_ops) {
    require_composite_pair(spin_ops, boson_ops, params, "h_eff_tc");
    const BosonSpace space(boson_ops.number.basis.n_max);
    const SpinEnsemble ens(params.n_atoms);
    OperatorMatrix id_b(Matrix::Identity(space.dim(), space.dim()), space.basis());
    OperatorMatrix sz2(spin_ops.s_z.data * spin_ops.s_z.data, ens.basis());
    Matrix h = -2.0 * params.chi * kron(spin_ops.s_z, boson_ops.number).data +
               params.chi * kron(sz2, id_b).data;
    return OperatorMatrix(std::move(h), BasisTag::composite(params.n_atoms, space.n_max));
}

OperatorMatrix h_eff_driven(const ModelParams& params, double drive_value,
                            const CollectiveOperators& spin_ops,
                            const LadderOperators& boson_ops) {
    OperatorMatrix h = h_eff_tc(params, spin_ops, boson_ops);
    const BosonSpace space(boson_ops.number.basis.n_max);
    OperatorMatrix id_b(Matrix::Identity(space.dim(), space.dim()), space.basis());
    h.data += drive_value * kron(spin_ops.s_x, id_b).data;
    return h;
}

OperatorMatrix h_full_driven_tc(const ModelParams& params, double drive_value,
                                const CollectiveOperators& spin_ops,
                                const LadderOperators& boson_ops) {
    require_composite_pair(spin_ops, boson_ops, params, "h_full_driven_tc");
    const BosonSpace space(boson_ops.number.basis.n_max);
    const SpinEnsemble ens(params.n_atoms);
    OperatorMatrix id_s(Matrix::Identity(ens.dim(), ens.dim()), ens.basis());
    Matrix h = params.delta_prime * kron(id_s, boson_ops.number).data +
               params.g * (kron(spin_ops.s_minus, boson_ops.a_dag).data +
                           kron(spin_ops.s_plus, boson_ops.a).data) +
               drive_value * kron(id_s, OperatorMatrix(boson_ops.a.data + boson_ops.a_dag.data,
                                                       space.basis()))
                                 .data;
    return OperatorMatrix(std::move(h), BasisTag::composite(params.n_atoms, space.n_max));
}

OperatorMatrix h_ideal_oat(SpinAxis axis, double strength, const CollectiveOperators& spin_ops,
                           double omega_x) {
    const OperatorMatrix& s = spin_ops.axis(axis);
    Matrix h = strength * (s.data * s.data);
    if (omega_x != 0.0) h += omega_x * spin_ops.s_x.data;
    return OperatorMatrix(std::move(h), s.basis);
}

OperatorMatrix h_appendix_b(const ModelParams& params, AppendixBVariant variant,
                            double omega_drive, const CollectiveOperators& spin_ops,
                            const LadderOperators& boson_ops) {
    if (params.omega0 == 0.0 && omega_drive != 0.0) {
        throw ConfigurationViolationError("h_appendix_b: omega0 must be set");
    }
    OperatorMatrix h = h_eff_tc(params, spin_ops, boson_ops);
    const BosonSpace space(boson_ops.number.basis.n_max);
    OperatorMatrix id_b(Matrix::Identity(space.dim(), space.dim()), space.basis());
    const Matrix sz_c = kron(spin_ops.s_z, id_b).data;
    const Matrix sx_c = kron(spin_ops.s_x, id_b).data;
    switch (variant) {
        case AppendixBVariant::ConstantDrive:
            if (omega_drive != 0.0) {
                h.data -= (omega_drive * omega_drive / (2.0 * params.omega0)) * sz_c;
            }
            break;
        case AppendixBVariant::OscillatingDrive:
            if (omega_drive != 0.0) {
                h.data += 0.5 * omega_drive * sx_c;
                h.data -= (omega_drive * omega_drive / (16.0 * params.omega0)) * sz_c;
            }
            break;
    }
    return h;
}

}  // namespace oatsim
