// observables.hpp — Measurement layer: squeezing parameter, fidelity, purity,
// expectation helpers, and spherical quasi-probability maps.

#pragma once

#include <array>
#include <vector>

#include "oatsim/spin.hpp"

namespace oatsim {

double expectation(const QuantumState& state, const OperatorMatrix& op);

struct SqueezingReport {
    double xi2 = 0.0;            // 4 * min_variance / N
    double optimal_angle = 0.0;  // in [0, pi), measured from the first frame axis
    double min_variance = 0.0;
    std::array<double, 3> msd{0, 0, 0};  // mean-spin direction (unit vector)
    bool zero_mean_spin = false;         // |<S>| below tolerance; y-z frame used
};

// Kitagawa-Ueda squeezing: minimal spin variance orthogonal to the mean-spin
// direction, from the eigenvalues of the 2x2 transverse covariance matrix.
// When the MSD lies along x the frame is (y, z) and the result reproduces the
// arctan form of the minimized variance exactly.
SqueezingReport squeezing_parameter(const QuantumState& rho);

// <psi_T| rho |psi_T> for a pure target.
double fidelity(const QuantumState& rho, const QuantumState& target);

// tr(rho^2); 1 for vector states by definition.
double purity(const QuantumState& rho);

enum class SphereMapKind { Husimi, Wigner };

struct SphereMap {
    SphereMapKind kind = SphereMapKind::Husimi;
    std::vector<double> theta;  // polar samples (midpoint grid)
    std::vector<double> phi;    // azimuthal samples
    std::vector<std::vector<double>> values;  // [theta][phi]

    // Quadrature of the map over the sphere with sin(theta) weights.
    double integral() const;
};

// Husimi: Q(theta, phi) = <theta,phi| rho |theta,phi>, normalization
// (2S+1)/(4 pi) * integral = 1. Wigner: the multipole expansion
// sum_{k,q} rho_kq Y_kq over irreducible tensor operators.
SphereMap sphere_map(const QuantumState& rho, SphereMapKind kind, int resolution);

// Clebsch-Gordan coefficient <j1 m1; j2 m2 | j3 m3>, computed with exact
// rational arithmetic (two*j inputs are twice the angular momenta).
double clebsch_gordan(int two_j1, int two_m1, int two_j2, int two_m2, int two_j3, int two_m3);

// Orthonormal irreducible tensor operator T_kq on the spin-S space:
// tr(T_kq^dag T_k'q') = delta_kk' delta_qq'.
OperatorMatrix tensor_operator(const SpinEnsemble& ens, int k, int q);

}  // namespace oatsim
