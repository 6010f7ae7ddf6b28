// numerics.hpp — Dense linear-algebra services: Hermitian eigendecomposition,
// generator exponentials, Kronecker products, vectorization, partial trace.

#pragma once

#include <utility>
#include <vector>

#include "oatsim/types.hpp"

namespace oatsim {

// Eigendecomposition of a Hermitian operator, M = V diag(lambda) V^dag,
// eigenvalues ascending. Throws NotHermitianError / DimensionMismatchError.
std::pair<RealVector, OperatorMatrix> herm_eig(const OperatorMatrix& M);

// exp(-i H t) via the eigendecomposition of Hermitian H; unitary to
// machine precision by construction.
OperatorMatrix expm_hermitian_generator(const OperatorMatrix& H, double t);

// Cached eigensystem of a Hermitian generator. Reusable across a time grid:
// one decomposition, then O(dim^2) per propagator application.
class HermitianPropagator {
public:
    explicit HermitianPropagator(const OperatorMatrix& H);

    Matrix unitary(double t) const;                    // exp(-i H t)
    Vector apply(const Vector& psi, double t) const;   // exp(-i H t) psi
    Matrix conjugate(const Matrix& rho, double t) const;  // U rho U^dag

    const RealVector& eigenvalues() const { return eigenvalues_; }
    const Matrix& eigenvectors() const { return eigenvectors_; }
    const BasisTag& basis() const { return basis_; }

private:
    RealVector eigenvalues_;
    Matrix eigenvectors_;
    BasisTag basis_;
};

// Kronecker product with the factor order fixed to spin (x) boson.
// Throws BasisOrderViolationError when tags come in reversed.
OperatorMatrix kron(const OperatorMatrix& spin_op, const OperatorMatrix& boson_op);

// Reduced spin state of a composite pure/density state; trace preserved.
QuantumState partial_trace_boson(const QuantumState& rho);

// Column-stacking vectorization and its inverse.
Vector vectorize(const Matrix& m);
Matrix unvectorize(const Vector& v, int rows, int cols);

// Superoperator factors on vec(rho): vec(A rho B) = (B^T (x) A) vec(rho).
Matrix left_multiply_superop(const Matrix& a);    // rho -> A rho
Matrix right_multiply_superop(const Matrix& b);   // rho -> rho B

}  // namespace oatsim
