#include "oatsim/boson.hpp"

#include <cmath>
#include <sstream>

namespace oatsim {

BosonInput BosonInput::fock(int n0) {
    if (n0 < 0) throw DimensionMismatchError("BosonInput::fock: n0 must be >= 0");
    BosonInput b;
    b.kind = Kind::Fock;
    b.n0 = n0;
    return b;
}

BosonInput BosonInput::coherent(Complex alpha) {
    BosonInput b;
    b.kind = Kind::Coherent;
    b.alpha = alpha;
    return b;
}

BosonInput BosonInput::thermal(double nbar) {
    if (nbar < 0) throw DimensionMismatchError("BosonInput::thermal: nbar must be >= 0");
    BosonInput b;
    b.kind = Kind::Thermal;
    b.nbar = nbar;
    return b;
}

BosonInput BosonInput::squeezed(double r) {
    if (r < 0) throw DimensionMismatchError("BosonInput::squeezed: r must be >= 0");
    BosonInput b;
    b.kind = Kind::Squeezed;
    b.r = r;
    return b;
}

std::string BosonInput::str() const {
    std::ostringstream os;
    switch (kind) {
        case Kind::Fock: os << "fock(" << n0 << ")"; break;
        case Kind::Coherent: os << "coherent(" << alpha.real();
            if (alpha.imag() != 0) os << (alpha.imag() > 0 ? "+" : "") << alpha.imag() << "i";
            os << ")";
            break;
        case Kind::Thermal: os << "thermal(" << nbar << ")"; break;
        case Kind::Squeezed: os << "squeezed(" << r << ")"; break;
    }
    return os.str();
}

LadderOperators ladder_operators(const BosonSpace& space) {
    const int dim = space.dim();
    Matrix a = Matrix::Zero(dim, dim);
    for (int n = 1; n < dim; ++n) a(n - 1, n) = std::sqrt(double(n));
    Matrix ad = a.adjoint();
    Matrix num = ad * a;
    const BasisTag tag = space.basis();
    return {OperatorMatrix(a, tag), OperatorMatrix(ad, tag), OperatorMatrix(num, tag)};
}

namespace {

// Unnormalized |c_n|^2 for n = 0..n_max.
RealVector raw_weights(int n_max, const BosonInput& input) {
    RealVector w = RealVector::Zero(n_max + 1);
    switch (input.kind) {
        case BosonInput::Kind::Fock:
            if (input.n0 <= n_max) w(input.n0) = 1.0;
            break;
        case BosonInput::Kind::Coherent: {
            const double a2 = std::norm(input.alpha);
            for (int n = 0; n <= n_max; ++n) {
                w(n) = std::exp(-a2 + n * std::log(a2 > 0 ? a2 : 1.0) - std::lgamma(n + 1.0));
                if (a2 == 0.0) w(n) = (n == 0) ? 1.0 : 0.0;
            }
            break;
        }
        case BosonInput::Kind::Thermal: {
            const double q = input.nbar / (1.0 + input.nbar);
            for (int n = 0; n <= n_max; ++n) {
                w(n) = std::pow(q, n) / (1.0 + input.nbar);
            }
            break;
        }
        case BosonInput::Kind::Squeezed: {
            // |c_n|^2 = (tanh r)^n n! / (2^n cosh r [(n/2)!]^2), even n only
            const double th = std::tanh(input.r);
            for (int n = 0; n <= n_max; n += 2) {
                const int k = n / 2;
                const double log_w = n * std::log(th > 0 ? th : 1.0) - n * std::log(2.0) -
                                     std::log(std::cosh(input.r)) + std::lgamma(n + 1.0) -
                                     2.0 * std::lgamma(k + 1.0);
                w(n) = (th == 0.0) ? ((n == 0) ? 1.0 : 0.0) : std::exp(log_w);
            }
            break;
        }
    }
    return w;
}

}  // namespace

RealVector occupation_weights(const BosonSpace& space, const BosonInput& input) {
    RealVector w = raw_weights(space.n_max, input);
    const double total = w.sum();
    if (total < 1.0 - kTol.truncation_hard) {
        throw TruncationInsufficientError("occupation_weights: retained probability " +
                                          std::to_string(total) + " for " + input.str() +
                                          " at n_max=" + std::to_string(space.n_max));
    }
    return w / total;
}

double truncation_deficit(const BosonSpace& space, const BosonInput& input) {
    return std::max(0.0, 1.0 - raw_weights(space.n_max, input).sum());
}

QuantumState input_state(const BosonSpace& space, const BosonInput& input) {
    const int dim = space.dim();
    const BasisTag tag = space.basis();
    switch (input.kind) {
        case BosonInput::Kind::Fock: {
            if (input.n0 > space.n_max) {
                throw TruncationInsufficientError("input_state: fock(" +
                                                  std::to_string(input.n0) + ") needs n_max >= " +
                                                  std::to_string(input.n0));
            }
            Vector v = Vector::Zero(dim);
            v(input.n0) = 1.0;
            return QuantumState::vector(std::move(v), tag);
        }
        case BosonInput::Kind::Coherent: {
            Vector v(dim);
            const double a2 = std::norm(input.alpha);
            for (int n = 0; n < dim; ++n) {
                // c_n = e^{-|alpha|^2/2} alpha^n / sqrt(n!)
                const double mag =
                    std::exp(-a2 / 2 + 0.5 * (n * std::log(a2 > 0 ? a2 : 1.0)) -
                             0.5 * std::lgamma(n + 1.0));
                const double ph = std::arg(input.alpha);
                v(n) = (a2 == 0.0 && n > 0) ? 0.0 : mag * std::exp(Complex(0, n * ph));
            }
            const double nrm = v.norm();
            if (nrm * nrm < 1.0 - kTol.truncation_hard) {
                throw TruncationInsufficientError("input_state: coherent retained probability " +
                                                  std::to_string(nrm * nrm));
            }
            return QuantumState::vector(v / nrm, tag);
        }
        case BosonInput::Kind::Thermal: {
            RealVector w = occupation_weights(space, input);
            Matrix rho = Matrix::Zero(dim, dim);
            for (int n = 0; n < dim; ++n) rho(n, n) = w(n);
            return QuantumState::density(std::move(rho), tag);
        }
        case BosonInput::Kind::Squeezed: {
            // c_n for even n: sqrt(n!) (-tanh r / 2)^(n/2) / ((n/2)! sqrt(cosh r))
            Vector v = Vector::Zero(dim);
            const double th = std::tanh(input.r);
            for (int n = 0; n < dim; n += 2) {
                const int k = n / 2;
                const double mag = std::exp(0.5 * std::lgamma(n + 1.0) - std::lgamma(k + 1.0) +
                                            k * std::log(th > 0 ? th / 2 : 1.0) -
                                            0.5 * std::log(std::cosh(input.r)));
                v(n) = (th == 0.0 && n > 0) ? 0.0 : mag * std::pow(-1.0, k);
            }
            const double nrm = v.norm();
            if (nrm * nrm < 1.0 - kTol.truncation_hard) {
                throw TruncationInsufficientError("input_state: squeezed retained probability " +
                                                  std::to_string(nrm * nrm));
            }
            return QuantumState::vector(v / nrm, tag);
        }
    }
    throw DimensionMismatchError("input_state: unknown kind");
}

int truncation_recommendation(const BosonInput& input) {
    if (input.kind == BosonInput::Kind::Fock) return input.n0;
    // scan upward until the cumulative weight clears the tail target
    int upper = 32;
    switch (input.kind) {
        case BosonInput::Kind::Coherent: {
            const double am = std::abs(input.alpha);
            upper = static_cast<int>(std::ceil(am * am + 8 * am + 10));
            break;
        }
        case BosonInput::Kind::Thermal:
            upper = static_cast<int>(std::ceil(40 * (input.nbar + 1)));
            break;
        case BosonInput::Kind::Squeezed:
            upper = static_cast<int>(std::ceil(40 * (std::sinh(input.r) * std::sinh(input.r) + 1)));
            break;
        default: break;
    }
    for (;;) {
        const RealVector w = raw_weights(upper, input);
        double cum = 0.0;
        for (int n = 0; n <= upper; ++n) {
            cum += w(n);
            if (1.0 - cum < kTol.truncation_tail) return n;
        }
        upper *= 2;  // policy bound was too small; widen the scan
        if (upper > 1 << 20) {
            throw TruncationInsufficientError("truncation_recommendation: no adequate n_max for " +
                                              input.str());
        }
    }
}

}  // namespace oatsim
