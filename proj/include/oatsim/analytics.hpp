// analytics.hpp — Closed-form results for the dispersive model: characteristic
// functions, reduced spin states, moments, minimal variance and its
// expansions, the OAT-mixture decomposition, and GHZ fidelity.

#pragma once

#include <vector>

#include "oatsim/boson.hpp"
#include "oatsim/spin.hpp"

namespace oatsim {

struct CfParams {
    BosonInput input;
    double mu = 0.0;  // twisting phase, mu = 2 chi t
    int m_diff = 0;   // coherence distance m - m'
};

// Characteristic function phi_{m,m'}(t) of the photon distribution: the
// coherence-damping factor sum_n |c_n|^2 e^{i n mu (m - m')}. Closed forms
// per input family; |phi| <= 1 and phi(m_diff = 0) = 1.
Complex characteristic_function(const CfParams& p);

// Brute-force CF: the truncated series over occupation weights. Test oracle
// for the closed forms; kept independent of them.
Complex characteristic_function_series(const BosonInput& input, double mu, int m_diff,
                                       int n_max = -1);

// Reduced spin density after the dispersive evolution:
// rho_{m,m'} = C_m C_{m'} e^{-i chi t (m^2 - m'^2)} phi_{m,m'}(t).
QuantumState reduced_spin_state(int n_atoms, const BosonInput& input, double chi_t);

// Gaussian-CF approximation for a coherent input: rotation factor
// e^{2 i |alpha|^2 chi t (m - m')} and damping e^{-2 |alpha|^2 chi^2 t^2 (m-m')^2}.
QuantumState gaussian_cf_approx_state(int n_atoms, Complex alpha, double chi_t,
                                      bool include_rotation = true);

struct SpinMoments {
    double sx_mean = 0.0;   // <S_x>
    double sy2_mean = 0.0;  // <S_y^2>
    double tyz_mean = 0.0;  // <S_z S_y + S_y S_z>
};

// Closed-form moments of the Gaussian-approximated state (rotation factor
// excluded), mu = 2 chi t, mu' = 4 |alpha|^2 chi^2 t^2:
//   <S_x>   =  e^{-mu'/2} S cos^{2S-1}(mu/2)
//   <S_y^2> =  S/2 (S+1/2) - e^{-2 mu'} S/2 (S-1/2) cos^{2S-2}(mu)
//   <T_yz>  = -2 e^{-mu'/2} S (S-1/2) cos^{2S-2}(mu/2) sin(mu/2)
// The sign of <T_yz> is kept as printed; the state oracle yields the opposite
// sign under the standard su(2) conventions used here, and only its square
// enters the variance formulas.
SpinMoments moments_closed_form(int n_atoms, double alpha_abs, double chi_t);

// Minimal transverse variance (exact given the moments):
// (S/2) [1 + (1/2)(S - 1/2) (A - sqrt(A^2 + B^2))], which returns the CSS
// value S/2 analytically in the A, B -> 0 limit.
double min_variance_closed_form(int n_atoms, double alpha_abs, double chi_t);

enum class ExpansionOrder { Eq10, AppendixA };

struct ExpansionResult {
    double value = 0.0;
    bool validity_warning = false;  // set when the small-parameter regime fails
};

// Small-mu expansions of the minimal variance; delta = S mu / 2,
// delta' = S mu' / 2, beta = S mu^2 / 4, vartheta = 2 |alpha|^2 + S - 1.
ExpansionResult min_variance_expansion(int n_atoms, double alpha_abs, double chi_t,
                                       ExpansionOrder order);

struct OatMixtureTerm {
    double weight = 0.0;
    double rotation_angle = 0.0;  // n * mu
};

// Decomposition rho = sum_n |c_n|^2 |OAT_mu, n mu><OAT_mu, n mu|.
std::vector<OatMixtureTerm> oat_mixture_weights(const BosonInput& input, double mu,
                                                int n_max = -1);

// GHZ fidelity after the twisting time chi t = pi/2: the even-occupation
// probability sum_n |c_{2n}|^2. Coherent inputs give (1 + e^{-2|alpha|^2})/2.
double ghz_fidelity_closed_form(const BosonInput& input);

}  // namespace oatsim
