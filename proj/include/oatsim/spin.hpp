// spin.hpp — Collective-spin (Dicke) basis: operators, coherent spin states,
// rotations, OAT states, and the GHZ cat.
//
// Basis convention: |S,m> with m = -S..S ascending, S = N/2. Half-integer S
// (odd N) is fully supported.

#pragma once

#include "oatsim/numerics.hpp"
#include "oatsim/types.hpp"

namespace oatsim {

struct SpinEnsemble {
    int n_atoms = 1;

    explicit SpinEnsemble(int n) : n_atoms(n) {
        if (n < 1) throw DimensionMismatchError("SpinEnsemble: need at least one atom");
    }
    double total_spin() const { return 0.5 * n_atoms; }
    int dim() const { return n_atoms + 1; }
    BasisTag basis() const { return BasisTag::spin(n_atoms); }
    // m value of basis index i (ascending order)
    double m_of(int i) const { return -total_spin() + i; }
};

struct CssSpec {
    double theta = 0.0;  // polar angle in [0, pi]
    double phi = 0.0;    // azimuthal angle in [0, 2 pi)
};

enum class SpinAxis { X, Y, Z };

struct CollectiveOperators {
    OperatorMatrix s_x, s_y, s_z, s_plus, s_minus;

    const OperatorMatrix& axis(SpinAxis a) const {
        switch (a) {
            case SpinAxis::X: return s_x;
            case SpinAxis::Y: return s_y;
            case SpinAxis::Z: return s_z;
        }
        return s_z;
    }
};

// S_z |S,m> = m |S,m>;  S_± |S,m> = sqrt(S(S+1) - m(m±1)) |S,m±1>.
CollectiveOperators collective_operators(const SpinEnsemble& ens);

// Coherent spin state |theta,phi> = exp(-i theta S_n) |S,S> with the axis
// n = (-sin phi, cos phi, 0). Amplitudes equal the closed form
// binom(2S,S+m)^(1/2) cos^(S+m)(theta/2) sin^(S-m)(theta/2) e^{i(S-m)phi}.
QuantumState css_state(const SpinEnsemble& ens, const CssSpec& spec);

// Fast amplitude evaluation of the same state (no matrix exponential).
Vector css_amplitudes(const SpinEnsemble& ens, double theta, double phi);

// exp(-i angle S_axis) applied to a spin-tagged state (densities conjugated).
QuantumState rotate(const QuantumState& state, SpinAxis axis, double angle);

// One-axis-twisted state with twisting phase mu = 2 chi t and mean-spin
// rotation phi: amplitudes C_m e^{i phi m} e^{-i (mu/2) m^2}. With this
// parameterization oat_state(pi, 0) is the GHZ cat and the reduced state of
// the driven model decomposes as sum_n |c_n|^2 |OAT_mu, n mu><OAT_mu, n mu|.
QuantumState oat_state(const SpinEnsemble& ens, double mu, double phi);

// GHZ cat, defined through the OAT identity at mu = pi. For even N this is
// an equal superposition of two antipodal equatorial coherent states.
QuantumState ghz_state(const SpinEnsemble& ens);

}  // namespace oatsim
