// model.hpp — Hamiltonian builders for the driven Tavis-Cummings family and
// the drive-waveform abstraction (constant drive and square-pulse trains).
//
// Units: chi = 1 sets the scale; all rates are in units of chi and all times
// in units of 1/chi.

#pragma once

#include "oatsim/boson.hpp"
#include "oatsim/numerics.hpp"
#include "oatsim/spin.hpp"

namespace oatsim {

struct ModelParams {
    int n_atoms = 10;
    double chi = 1.0;          // OAT rate, the unit
    double delta = 0.0;        // Delta = omega0 - omega (dispersive detuning)
    double delta_prime = 0.0;  // Delta' = omega - omega_d (drive-frame detuning)
    double g = 0.0;            // single-atom coupling
    double kappa = 0.0;        // cavity linewidth
    double gamma = 0.0;        // collective decay Gamma = chi kappa / Delta'
    double omega0 = 0.0;       // atomic splitting (direct-driving variants only)

    // Enforces chi = g^2/Delta and Gamma = chi kappa/Delta' whenever both
    // sides of a relation are specified (nonzero).
    void validate(double rel_tol = 1e-9) const;

    static ModelParams dispersive(int n_atoms, double delta_prime_over_g, double chi = 1.0);
};

// Drive waveform: either a constant amplitude, or a square-pulse train of
// height amplitude on top of a constant offset. Pulses of width duty*period
// are centered at t = k*period.
struct DriveWaveform {
    enum class Kind { Constant, PulseTrain };
    Kind kind = Kind::Constant;
    double omega0 = 0.0;     // constant value / pulse-train offset
    double amplitude = 0.0;  // pulse height A0 (pulse train only)
    double duty = 0.0;       // d = tau0 / period, in (0, 1]
    double period = 0.0;     // pulse-to-pulse spacing T

    static DriveWaveform constant(double omega0);
    static DriveWaveform pulse_train(double omega0_offset, double amplitude, double duty,
                                     double period);
    // Pulse train with the area A0 * d * T pinned to pi (the canonical
    // decoupling configuration) at given duty and period.
    static DriveWaveform canonical_pulse_train(double duty, double period,
                                               double omega0_offset = 0.0);

    double pulse_width() const { return duty * period; }
    double pulse_area() const { return amplitude * duty * period; }
    bool is_canonical() const;
    std::string str() const;
};

// Instantaneous drive value (time-domain square wave; the Fourier series is
// its analytic representation, not the numerical one).
double drive_value(const DriveWaveform& w, double t);

// Accumulated pulse-train rotation angle: the integral of
// (drive - offset) over [0, t]. In the canonical configuration this is the
// step function that equals (m + 1/2) pi throughout gap m.
double step_phase(const DriveWaveform& w, double t);

// ----------------------------- Hamiltonians ----------------------------------
// All builders return Hermitian matrices; spin (x) boson composite basis.

// -2 chi (a^dag a) S_z + chi S_z^2
OperatorMatrix h_eff_tc(const ModelParams& params, const CollectiveOperators& spin_ops,
                        const LadderOperators& boson_ops);

// Omega~ S_x - 2 chi (a^dag a) S_z + chi S_z^2, with the instantaneous
// effective drive Omega~ passed in.
OperatorMatrix h_eff_driven(const ModelParams& params, double drive_value,
                            const CollectiveOperators& spin_ops,
                            const LadderOperators& boson_ops);

// Delta' a^dag a + g (a^dag S_- + a S_+) + Omega (a + a^dag); the full
// drive-frame model used to validate the effective one for Delta' >> g.
OperatorMatrix h_full_driven_tc(const ModelParams& params, double drive_value,
                                const CollectiveOperators& spin_ops,
                                const LadderOperators& boson_ops);

// strength * S_axis^2 (+ optional omega_x S_x for the twist-and-turn form);
// spin-only.
OperatorMatrix h_ideal_oat(SpinAxis axis, double strength, const CollectiveOperators& spin_ops,
                           double omega_x = 0.0);

enum class AppendixBVariant { ConstantDrive, OscillatingDrive };

// Direct-atomic-driving effective models:
//   constant:    -2 chi a^dag a S_z + chi S_z^2 - (Omega0^2 / 2 omega0) S_z
//   oscillating: same Stark+OAT plus (Omega0/2) S_x - (Omega0^2 / 16 omega0) S_z
OperatorMatrix h_appendix_b(const ModelParams& params, AppendixBVariant variant, double omega_drive,
                            const CollectiveOperators& spin_ops,
                            const LadderOperators& boson_ops);

}  // namespace oatsim
