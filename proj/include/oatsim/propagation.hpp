// propagation.hpp — Time evolution: unitary propagation under static and
// pulse-train Hamiltonians, and Lindblad master-equation integration via
// dense superoperator exponentials.

#pragma once

#include <functional>
#include <vector>

#include "oatsim/model.hpp"

namespace oatsim {

struct TimeGrid {
    double t_start = 0.0;
    double t_end = 0.0;
    std::vector<double> samples;  // strictly increasing, first sample = t_start

    static TimeGrid uniform(double t_start, double t_end, int n_samples);
    static TimeGrid from_samples(std::vector<double> samples);

    void validate() const;
};

struct LindbladChannel {
    OperatorMatrix jump;
    double rate = 0.0;
};

struct LindbladSpec {
    OperatorMatrix hamiltonian;
    std::vector<LindbladChannel> channels;

    void validate() const;
};

// psi(t_k) = exp(-i H t_k) psi0 through one cached eigendecomposition.
// Densities are conjugated, rho(t) = U rho0 U^dag.
std::vector<QuantumState> evolve_unitary_static(const OperatorMatrix& h, const QuantumState& psi0,
                                                const TimeGrid& grid);

// Time-ordered piecewise-constant propagation of the driven effective model
// under a waveform. Segment boundaries align exactly with pulse edges; only
// two distinct Hamiltonians arise, so two cached eigensystems cover every
// segment. Samples strictly inside a pulse raise StepTooCoarseError.
std::vector<QuantumState> evolve_unitary_pulsed(const ModelParams& params,
                                                const DriveWaveform& waveform,
                                                const QuantumState& psi0, const TimeGrid& grid);

// Integrates d rho/dt = -i[H, rho] + sum_k rate_k L(A_k, rho) by exponentiating
// the vectorized generator once per distinct time step. Trace, Hermiticity,
// and the eigenvalue floor are checked at every sample.
std::vector<QuantumState> evolve_lindblad(const LindbladSpec& spec, const QuantumState& rho0,
                                          const TimeGrid& grid);

// Adaptive RK4 fallback for a time-dependent Hamiltonian H(t) with static
// channels; step-halves until the final-state change is below tol.
std::vector<QuantumState> evolve_lindblad_time_dependent(
    const std::function<Matrix(double)>& hamiltonian, const std::vector<LindbladChannel>& channels,
    const QuantumState& rho0, const TimeGrid& grid, double tol = 1e-8);

// Dense Liouvillian acting on vec(rho).
Matrix liouvillian(const LindbladSpec& spec);

enum class LindbladKind { Eq25, Eq26, Eq26Doubled, Eq27 };

// Spin-only master-equation presets:
//   eq25:         H = Omega~ S_x + chi S_z^2 (cavity adiabatically eliminated,
//                 a^dag a -> 0), channel (S_-, Gamma)
//   eq26:         H = -(chi/2) S_x^2, channels (S_x, G), (S_y, G/2), (S_z, G/2)
//   eq26_doubled: same channels, coherent strength doubled: H = -chi S_x^2
//   eq27:         H = chi S_y^2, channels (S_-, G/2), (S_+, G/2)
LindbladSpec lindblad_builders(LindbladKind kind, const ModelParams& params,
                               const CollectiveOperators& spin_ops,
                               double drive_value = 0.0);

}  // namespace oatsim
