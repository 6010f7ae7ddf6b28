#include "oatsim/observables.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <map>

namespace oatsim {

namespace mp = boost::multiprecision;
using BigInt = mp::cpp_int;
using BigRational = mp::cpp_rational;

double expectation(const QuantumState& state, const OperatorMatrix& op) {
    require_same_basis(state.basis, op.basis, "expectation");
    if (state.is_vector()) {
        const Vector v = state.vec();
        return (v.adjoint() * op.data * v)(0, 0).real();
    }
    return (state.data * op.data).trace().real();
}

namespace {

double symmetrized_expectation(const QuantumState& state, const Matrix& a, const Matrix& b) {
    const Matrix sym = 0.5 * (a * b + b * a);
    if (state.is_vector()) {
        const Vector v = state.vec();
        return (v.adjoint() * sym * v)(0, 0).real();
    }
    return (state.data * sym).trace().real();
}

}  // namespace

SqueezingReport squeezing_parameter(const QuantumState& rho) {
    if (rho.basis.kind != BasisKind::Spin) {
        throw BasisMismatchError("squeezing_parameter: spin-tagged state required");
    }
    const SpinEnsemble ens(rho.basis.n_atoms);
    const auto ops = collective_operators(ens);
    const double sx = expectation(rho, ops.s_x);
    const double sy = expectation(rho, ops.s_y);
    const double sz = expectation(rho, ops.s_z);

    SqueezingReport report;
    const double mean_len = std::sqrt(sx * sx + sy * sy + sz * sz);
    Eigen::Vector3d n, e1, e2;
    if (mean_len < kTol.zero_mean_spin) {
        // Angle undefined; fall back to the y-z covariance plane.
        report.zero_mean_spin = true;
        n = {1, 0, 0};
        e1 = {0, 1, 0};
        e2 = {0, 0, 1};
    } else {
        n = Eigen::Vector3d(sx, sy, sz) / mean_len;
        report.msd = {n.x(), n.y(), n.z()};
        Eigen::Vector3d zhat(0, 0, 1);
        e1 = zhat.cross(n);
        if (e1.norm() < 1e-8) e1 = Eigen::Vector3d(0, 1, 0);  // MSD along z
        e1.normalize();
        e2 = n.cross(e1);
    }

    auto component = [&](const Eigen::Vector3d& dir) {
        return Matrix(dir.x() * ops.s_x.data + dir.y() * ops.s_y.data + dir.z() * ops.s_z.data);
    };
    const Matrix a = component(e1), b = component(e2);
    const OperatorMatrix a_op(a, rho.basis), b_op(b, rho.basis);
    const double ma = expectation(rho, a_op), mb = expectation(rho, b_op);
    const double vaa = symmetrized_expectation(rho, a, a) - ma * ma;
    const double vbb = symmetrized_expectation(rho, b, b) - mb * mb;
    const double vab = symmetrized_expectation(rho, a, b) - ma * mb;

    const double half_tr = 0.5 * (vaa + vbb);
    const double radius = std::sqrt(0.25 * (vaa - vbb) * (vaa - vbb) + vab * vab);
    report.min_variance = half_tr - radius;
    report.xi2 = 4.0 * report.min_variance / ens.n_atoms;

    // Eigenvector of the smaller eigenvalue; angle measured from e1 in [0, pi).
    double angle;
    if (radius < 1e-15) {
        angle = 0.0;  // isotropic, tie broken toward zero
    } else {
        angle = 0.5 * std::atan2(2.0 * vab, vaa - vbb) + M_PI / 2;
    }
    angle = std::fmod(angle, M_PI);
    if (angle < 0) angle += M_PI;
    report.optimal_angle = angle;
    return report;
}

double fidelity(const QuantumState& rho, const QuantumState& target) {
    require_same_basis(rho.basis, target.basis, "fidelity");
    if (!target.is_vector()) {
        throw BasisMismatchError("fidelity: target must be a pure state vector");
    }
    const Vector t = target.vec();
    if (rho.is_vector()) {
        const Complex overlap = (t.adjoint() * rho.vec())(0, 0);
        return std::norm(overlap);
    }
    return (t.adjoint() * rho.data * t)(0, 0).real();
}

double purity(const QuantumState& rho) { return rho.purity(); }

double SphereMap::integral() const {
    // midpoint rule in theta, periodic trapezoid (= midpoint) in phi
    if (theta.empty() || phi.empty()) return 0.0;
    const double dtheta = M_PI / theta.size();
    const double dphi = 2.0 * M_PI / phi.size();
    double acc = 0.0;
    for (size_t i = 0; i < theta.size(); ++i) {
        double row = 0.0;
        for (size_t j = 0; j < phi.size(); ++j) row += values[i][j];
        acc += row * std::sin(theta[i]);
    }
    return acc * dtheta * dphi;
}

// --------------------------- Clebsch-Gordan ----------------------------------

namespace {

BigInt big_factorial(int n) {
    BigInt f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

}  // namespace

double clebsch_gordan(int two_j1, int two_m1, int two_j2, int two_m2, int two_j3, int two_m3) {
    if (two_m1 + two_m2 != two_m3) return 0.0;
    if (std::abs(two_m1) > two_j1 || std::abs(two_m2) > two_j2 || std::abs(two_m3) > two_j3) {
        return 0.0;
    }
    if (two_j3 < std::abs(two_j1 - two_j2) || two_j3 > two_j1 + two_j2) return 0.0;
    // all of these are integers for physical inputs
    auto half = [](int two_x) {
        if (two_x % 2 != 0) throw DimensionMismatchError("clebsch_gordan: non-integer argument");
        return two_x / 2;
    };
    const int j1pj2mj3 = half(two_j1 + two_j2 - two_j3);
    const int j1mj2pj3 = half(two_j1 - two_j2 + two_j3);
    const int mj1pj2pj3 = half(-two_j1 + two_j2 + two_j3);
    const int j1pj2pj3p1 = half(two_j1 + two_j2 + two_j3) + 1;
    const int j1pm1 = half(two_j1 + two_m1), j1mm1 = half(two_j1 - two_m1);
    const int j2pm2 = half(two_j2 + two_m2), j2mm2 = half(two_j2 - two_m2);
    const int j3pm3 = half(two_j3 + two_m3), j3mm3 = half(two_j3 - two_m3);

    // prefactor^2 = (2 j3 + 1) Delta(j1 j2 j3) * product of m-factorials
    BigRational pref2(BigInt(two_j3 + 1), BigInt(1));
    pref2 *= BigRational(big_factorial(j1pj2mj3) * big_factorial(j1mj2pj3) *
                             big_factorial(mj1pj2pj3),
                         big_factorial(j1pj2pj3p1));
    pref2 *= BigRational(big_factorial(j3pm3) * big_factorial(j3mm3) * big_factorial(j1mm1) *
                             big_factorial(j1pm1) * big_factorial(j2mm2) * big_factorial(j2pm2),
                         BigInt(1));

    // alternating Racah sum (exact rational)
    BigRational series = 0;
    const int k_min = std::max({0, -half(two_j3 - two_j2 + two_m1), -half(two_j3 - two_j1 - two_m2)});
    const int k_max = std::min({j1pj2mj3, j1mm1, j2pm2});
    for (int k = k_min; k <= k_max; ++k) {
        BigInt denom = big_factorial(k) * big_factorial(j1pj2mj3 - k) * big_factorial(j1mm1 - k) *
                       big_factorial(j2pm2 - k) * big_factorial(half(two_j3 - two_j2 + two_m1) + k) *
                       big_factorial(half(two_j3 - two_j1 - two_m2) + k);
        BigRational term(BigInt(1), denom);
        if (k % 2 != 0) term = -term;
        series += term;
    }
    if (series == 0) return 0.0;

    // CG = sqrt(pref2) * series: return sign(series) * sqrt(pref2 * series^2)
    const BigRational c2 = pref2 * series * series;
    const double value = std::sqrt(c2.convert_to<double>());
    return (series < 0) ? -value : value;
}

OperatorMatrix tensor_operator(const SpinEnsemble& ens, int k, int q) {
    const int dim = ens.dim();
    const int two_s = ens.n_atoms;
    if (k < 0 || k > two_s || std::abs(q) > k) {
        throw DimensionMismatchError("tensor_operator: invalid (k, q)");
    }
    Matrix t = Matrix::Zero(dim, dim);
    const double norm = std::sqrt((2.0 * k + 1.0) / (two_s + 1.0));
    for (int col = 0; col < dim; ++col) {
        const int row = col + q;  // m' = m + q
        if (row < 0 || row >= dim) continue;
        const int two_m = 2 * col - two_s;
        const int two_mp = 2 * row - two_s;
        t(row, col) = norm * clebsch_gordan(two_s, two_m, 2 * k, 2 * q, two_s, two_mp);
    }
    return OperatorMatrix(std::move(t), ens.basis());
}

SphereMap sphere_map(const QuantumState& rho, SphereMapKind kind, int resolution) {
    if (rho.basis.kind != BasisKind::Spin) {
        throw BasisMismatchError("sphere_map: spin-tagged state required");
    }
    if (resolution < 16) {
        throw ResolutionTooLowError("sphere_map: need at least 16 points per axis");
    }
    const SpinEnsemble ens(rho.basis.n_atoms);
    SphereMap map;
    map.kind = kind;
    map.theta.resize(resolution);
    map.phi.resize(resolution);
    for (int i = 0; i < resolution; ++i) {
        map.theta[i] = (i + 0.5) * M_PI / resolution;
        map.phi[i] = i * 2.0 * M_PI / resolution;
    }
    map.values.assign(resolution, std::vector<double>(resolution, 0.0));

    if (kind == SphereMapKind::Husimi) {
        const Matrix dens = rho.density();
        for (int i = 0; i < resolution; ++i) {
            for (int j = 0; j < resolution; ++j) {
                const Vector c = css_amplitudes(ens, map.theta[i], map.phi[j]);
                map.values[i][j] = std::max(0.0, (c.adjoint() * dens * c)(0, 0).real());
            }
        }
        return map;
    }

    // Wigner multipole expansion: W = sum_kq rho_kq Y_kq with
    // rho_kq = tr(rho T_kq^dag). Hermiticity pairs (k, ±q), so the q > 0
    // terms contribute twice their real part.
    const Matrix dens = rho.density();
    const int two_s = ens.n_atoms;
    for (int k = 0; k <= two_s; ++k) {
        for (int q = 0; q <= k; ++q) {
            const OperatorMatrix t = tensor_operator(ens, k, q);
            const Complex rho_kq = (dens * t.data.adjoint()).trace();
            if (std::abs(rho_kq) < 1e-18) continue;
            for (int i = 0; i < resolution; ++i) {
                const double leg = std::sph_legendre(k, q, map.theta[i]);
                for (int j = 0; j < resolution; ++j) {
                    const Complex y = leg * std::exp(Complex(0, q * map.phi[j]));
                    const Complex term = rho_kq * y;
                    map.values[i][j] += (q == 0) ? term.real() : 2.0 * term.real();
                }
            }
        }
    }
    return map;
}

}  // namespace oatsim
