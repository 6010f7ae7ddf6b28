#include "oatsim/analytics.hpp"

#include <cmath>

namespace oatsim {

Complex characteristic_function(const CfParams& p) {
    const double phase = p.mu * p.m_diff;  // 2 chi t (m - m')
    const Complex z = std::exp(Complex(0, phase));
    switch (p.input.kind) {
        case BosonInput::Kind::Fock:
            return std::exp(Complex(0, p.input.n0 * phase));
        case BosonInput::Kind::Coherent: {
            const double a2 = std::norm(p.input.alpha);
            return std::exp(-a2 * (1.0 - z));
        }
        case BosonInput::Kind::Thermal:
            return 1.0 / (1.0 + p.input.nbar * (1.0 - z));
        case BosonInput::Kind::Squeezed: {
            // 1 / sqrt(cosh^2 r - sinh^2 r e^{i 4 chi t (m - m')}); the radicand
            // has positive real part, so the principal branch is continuous.
            const double ch = std::cosh(p.input.r), sh = std::sinh(p.input.r);
            const Complex z2 = std::exp(Complex(0, 2.0 * phase));
            return 1.0 / std::sqrt(ch * ch - sh * sh * z2);
        }
    }
    return 1.0;
}

Complex characteristic_function_series(const BosonInput& input, double mu, int m_diff,
                                       int n_max) {
    if (n_max < 0) n_max = truncation_recommendation(input);
    const BosonSpace space(n_max);
    const RealVector w = occupation_weights(space, input);
    Complex acc = 0;
    for (int n = 0; n <= n_max; ++n) {
        acc += w(n) * std::exp(Complex(0, n * mu * m_diff));
    }
    return acc;
}

QuantumState reduced_spin_state(int n_atoms, const BosonInput& input, double chi_t) {
    const SpinEnsemble ens(n_atoms);
    const Vector c = css_amplitudes(ens, M_PI / 2, 0.0);
    const int dim = ens.dim();
    Matrix rho(dim, dim);
    for (int i = 0; i < dim; ++i) {
        const double m = ens.m_of(i);
        for (int j = 0; j < dim; ++j) {
            const double mp = ens.m_of(j);
            CfParams cf{input, 2.0 * chi_t, i - j};
            rho(i, j) = c(i) * std::conj(c(j)) *
                        std::exp(Complex(0, -chi_t * (m * m - mp * mp))) *
                        characteristic_function(cf);
        }
    }
    return QuantumState::density(std::move(rho), ens.basis());
}

QuantumState gaussian_cf_approx_state(int n_atoms, Complex alpha, double chi_t,
                                      bool include_rotation) {
    const SpinEnsemble ens(n_atoms);
    const Vector c = css_amplitudes(ens, M_PI / 2, 0.0);
    const int dim = ens.dim();
    const double a2 = std::norm(alpha);
    Matrix rho(dim, dim);
    for (int i = 0; i < dim; ++i) {
        const double m = ens.m_of(i);
        for (int j = 0; j < dim; ++j) {
            const double mp = ens.m_of(j);
            const double dm = m - mp;
            Complex v = c(i) * std::conj(c(j)) *
                        std::exp(Complex(0, -chi_t * (m * m - mp * mp))) *
                        std::exp(-2.0 * a2 * chi_t * chi_t * dm * dm);
            if (include_rotation) v *= std::exp(Complex(0, 2.0 * a2 * chi_t * dm));
            rho(i, j) = v;
        }
    }
    return QuantumState::density(std::move(rho), ens.basis());
}

SpinMoments moments_closed_form(int n_atoms, double alpha_abs, double chi_t) {
    const double s = 0.5 * n_atoms;
    const double mu = 2.0 * chi_t;
    const double mup = 4.0 * alpha_abs * alpha_abs * chi_t * chi_t;
    SpinMoments out;
    out.sx_mean = std::exp(-mup / 2) * s * std::pow(std::cos(mu / 2), 2 * s - 1);
    out.sy2_mean = 0.5 * s * (s + 0.5) -
                   std::exp(-2 * mup) * 0.5 * s * (s - 0.5) * std::pow(std::cos(mu), 2 * s - 2);
    out.tyz_mean = -2.0 * std::exp(-mup / 2) * s * (s - 0.5) *
                   std::pow(std::cos(mu / 2), 2 * s - 2) * std::sin(mu / 2);
    return out;
}

double min_variance_closed_form(int n_atoms, double alpha_abs, double chi_t) {
    const double s = 0.5 * n_atoms;
    const double mu = 2.0 * chi_t;
    const double mup = 4.0 * alpha_abs * alpha_abs * chi_t * chi_t;
    const double a = 1.0 - std::exp(-2 * mup) * std::pow(std::cos(mu), 2 * s - 2);
    const double b =
        4.0 * std::exp(-mup / 2) * std::pow(std::cos(mu / 2), 2 * s - 2) * std::sin(mu / 2);
    // a - hypot(a, b) -> 0 as a, b -> 0, so the CSS limit S/2 needs no branch.
    return 0.5 * s * (1.0 + 0.5 * (s - 0.5) * (a - std::hypot(a, b)));
}

ExpansionResult min_variance_expansion(int n_atoms, double alpha_abs, double chi_t,
                                       ExpansionOrder order) {
    const double s = 0.5 * n_atoms;
    const double mu = 2.0 * chi_t;
    const double mup = 4.0 * alpha_abs * alpha_abs * chi_t * chi_t;
    const double a2 = alpha_abs * alpha_abs;
    const double vartheta = 2.0 * a2 + s - 1.0;
    ExpansionResult res;
    res.validity_warning = !(vartheta * mu * mu < 0.1 && mu < 0.1 && s > a2);
    switch (order) {
        case ExpansionOrder::Eq10: {
            const double delta = s * mu / 2;
            const double delta_p = s * mup / 2;
            const double beta = s * mu * mu / 4;
            const double den = delta_p + delta * delta;
            res.value = 0.5 * s *
                        (delta_p / den + std::pow(delta, 4) / (4 * std::pow(den, 3)) +
                         (2.0 / 3.0) * beta * beta);
            break;
        }
        case ExpansionOrder::AppendixA: {
            res.value = 0.5 * s *
                        (1.0 - s / vartheta + s / (2 * vartheta * vartheta) +
                         s / (std::pow(vartheta, 3) * mu * mu) +
                         vartheta * std::pow(mu, 4) * s / 24.0);
            break;
        }
    }
    return res;
}

std::vector<OatMixtureTerm> oat_mixture_weights(const BosonInput& input, double mu, int n_max) {
    if (n_max < 0) n_max = truncation_recommendation(input);
    const BosonSpace space(n_max);
    const RealVector w = occupation_weights(space, input);
    std::vector<OatMixtureTerm> terms;
    terms.reserve(n_max + 1);
    for (int n = 0; n <= n_max; ++n) {
        terms.push_back({w(n), n * mu});
    }
    return terms;
}

double ghz_fidelity_closed_form(const BosonInput& input) {
    switch (input.kind) {
        case BosonInput::Kind::Fock:
            return (input.n0 % 2 == 0) ? 1.0 : 0.0;
        case BosonInput::Kind::Coherent:
            return 0.5 * (1.0 + std::exp(-2.0 * std::norm(input.alpha)));
        case BosonInput::Kind::Thermal:
            // geometric even sum: (1 + nbar) / (1 + 2 nbar)
            return (1.0 + input.nbar) / (1.0 + 2.0 * input.nbar);
        case BosonInput::Kind::Squeezed:
            return 1.0;  // only even occupations
    }
    return 0.0;
}

}  // namespace oatsim
