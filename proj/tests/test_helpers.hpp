// test_helpers.hpp — Shared oracles and utilities for the test suites. These
// stay independent of the library code paths they are used to check.

#pragma once

#include <Eigen/Dense>

#include <complex>
#include <random>

#include "oatsim/types.hpp"

namespace test_oracle {

using oatsim::Complex;
using oatsim::Matrix;
using oatsim::Vector;

// Taylor-series matrix exponential of (-i H t); brute-force oracle for the
// eigendecomposition-based propagator. Converges for moderate ||H t||.
inline Matrix expm_series(const Matrix& h, double t, int max_terms = 120) {
    const int d = static_cast<int>(h.rows());
    Matrix acc = Matrix::Identity(d, d);
    Matrix term = Matrix::Identity(d, d);
    const Matrix a = Complex(0, -t) * h;
    for (int k = 1; k <= max_terms; ++k) {
        term = term * a / double(k);
        acc += term;
        if (term.cwiseAbs().maxCoeff() < 1e-18) break;
    }
    return acc;
}

inline Matrix random_hermitian(int dim, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    Matrix m(dim, dim);
    for (int i = 0; i < dim; ++i) {
        for (int j = 0; j < dim; ++j) m(i, j) = Complex(u(rng), u(rng));
    }
    return 0.5 * (m + m.adjoint().eval());
}

inline Vector random_vector(int dim, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    Vector v(dim);
    for (int i = 0; i < dim; ++i) v(i) = Complex(u(rng), u(rng));
    return v / v.norm();
}

inline double max_abs_diff(const Matrix& a, const Matrix& b) {
    return (a - b).cwiseAbs().maxCoeff();
}

// |<a|b>|^2 with normalization, insensitive to global phases.
inline double overlap2(const Vector& a, const Vector& b) {
    return std::norm(a.dot(b)) / (a.squaredNorm() * b.squaredNorm());
}

// Uhlmann fidelity between two density matrices, F = (tr sqrt(sqrt(r1) r2 sqrt(r1)))^2.
inline double uhlmann_fidelity(const Matrix& r1, const Matrix& r2) {
    Eigen::SelfAdjointEigenSolver<Matrix> s1(r1);
    const Matrix sq1 = s1.eigenvectors() *
                       s1.eigenvalues().cwiseMax(0.0).cwiseSqrt().asDiagonal() *
                       s1.eigenvectors().adjoint();
    Eigen::SelfAdjointEigenSolver<Matrix> s2(sq1 * r2 * sq1);
    return std::pow(s2.eigenvalues().cwiseMax(0.0).cwiseSqrt().sum(), 2);
}

// 0.5 * tr |r1 - r2|
inline double trace_distance(const Matrix& r1, const Matrix& r2) {
    Eigen::SelfAdjointEigenSolver<Matrix> s(r1 - r2);
    return 0.5 * s.eigenvalues().cwiseAbs().sum();
}

}  // namespace test_oracle
