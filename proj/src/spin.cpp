#include "oatsim/spin.hpp"

#include <cmath>

namespace oatsim {

CollectiveOperators collective_operators(const SpinEnsemble& ens) {
    const int dim = ens.dim();
    const double s = ens.total_spin();
    Matrix sz = Matrix::Zero(dim, dim);
    Matrix sp = Matrix::Zero(dim, dim);
    for (int i = 0; i < dim; ++i) {
        const double m = ens.m_of(i);
        sz(i, i) = m;
        if (i + 1 < dim) sp(i + 1, i) = std::sqrt(s * (s + 1) - m * (m + 1));
    }
    Matrix sm = sp.adjoint();
    Matrix sx = 0.5 * (sp + sm);
    Matrix sy = Complex(0, -0.5) * (sp - sm);
    const BasisTag tag = ens.basis();
    return {OperatorMatrix(sx, tag), OperatorMatrix(sy, tag), OperatorMatrix(sz, tag),
            OperatorMatrix(sp, tag), OperatorMatrix(sm, tag)};
}

Vector css_amplitudes(const SpinEnsemble& ens, double theta, double phi) {
    const int dim = ens.dim();
    const double s = ens.total_spin();
    const double c = std::cos(theta / 2), sn = std::sin(theta / 2);
    Vector amps(dim);
    for (int i = 0; i < dim; ++i) {
        const double m = ens.m_of(i);
        // binom(2S, S+m) via lgamma; exponents S+m = i and S-m = N-i are integers
        const double binom = std::exp(std::lgamma(ens.n_atoms + 1.0) - std::lgamma(i + 1.0) -
                                      std::lgamma(ens.n_atoms - i + 1.0));
        const double mag = std::sqrt(binom) * std::pow(c, double(i)) *
                           std::pow(sn, double(ens.n_atoms - i));
        amps(i) = mag * std::exp(Complex(0, (s - m) * phi));
    }
    return amps;
}

QuantumState css_state(const SpinEnsemble& ens, const CssSpec& spec) {
    const auto ops = collective_operators(ens);
    Matrix axis = -std::sin(spec.phi) * ops.s_x.data + std::cos(spec.phi) * ops.s_y.data;
    HermitianPropagator prop(OperatorMatrix(axis, ens.basis()));
    Vector north = Vector::Zero(ens.dim());
    north(ens.dim() - 1) = 1.0;  // |S,S>, the top of the ascending-m ladder
    return QuantumState::vector(prop.apply(north, spec.theta), ens.basis());
}

QuantumState rotate(const QuantumState& state, SpinAxis axis, double angle) {
    if (state.basis.kind != BasisKind::Spin) {
        throw BasisMismatchError("rotate: spin-tagged state required, got " + state.basis.str());
    }
    const SpinEnsemble ens(state.basis.n_atoms);
    const auto ops = collective_operators(ens);
    HermitianPropagator prop(ops.axis(axis));
    if (state.is_vector()) {
        return QuantumState::vector(prop.apply(state.vec(), angle), state.basis);
    }
    return QuantumState::density(prop.conjugate(state.data, angle), state.basis);
}

QuantumState oat_state(const SpinEnsemble& ens, double mu, double phi) {
    Vector amps = css_amplitudes(ens, M_PI / 2, 0.0);
    for (int i = 0; i < ens.dim(); ++i) {
        const double m = ens.m_of(i);
        amps(i) *= std::exp(Complex(0, phi * m - 0.5 * mu * m * m));
    }
    return QuantumState::vector(std::move(amps), ens.basis());
}

QuantumState ghz_state(const SpinEnsemble& ens) {
    QuantumState cat = oat_state(ens, M_PI, 0.0);
    Vector v = cat.vec();
    v /= v.norm();
    return QuantumState::vector(std::move(v), ens.basis());
}

}  // namespace oatsim
