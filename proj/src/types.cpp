#include "oatsim/types.hpp"

#include <Eigen/Eigenvalues>

#include <sstream>

namespace oatsim {

std::string BasisTag::str() const {
    std::ostringstream os;
    switch (kind) {
        case BasisKind::Spin: os << "spin(N=" << n_atoms << ")"; break;
        case BasisKind::Boson: os << "boson(n_max=" << n_max << ")"; break;
        case BasisKind::Composite:
            os << "composite(N=" << n_atoms << ", n_max=" << n_max << ")";
            break;
    }
    return os.str();
}

OperatorMatrix::OperatorMatrix(Matrix m, BasisTag tag) : data(std::move(m)), basis(tag) {
    if (data.rows() != data.cols()) {
        throw DimensionMismatchError("OperatorMatrix: matrix must be square, got " +
                                     std::to_string(data.rows()) + "x" +
                                     std::to_string(data.cols()));
    }
    if (data.rows() != basis.dim()) {
        throw DimensionMismatchError("OperatorMatrix: dim " + std::to_string(data.rows()) +
                                     " does not match basis " + basis.str());
    }
}

QuantumState QuantumState::vector(Vector v, BasisTag tag) {
    if (v.size() != tag.dim()) {
        throw DimensionMismatchError("QuantumState::vector: length " + std::to_string(v.size()) +
                                     " does not match basis " + tag.str());
    }
    QuantumState s;
    s.repr = Representation::Vector;
    s.data = std::move(v);
    s.basis = tag;
    return s;
}

QuantumState QuantumState::density(Matrix rho, BasisTag tag) {
    if (rho.rows() != rho.cols() || rho.rows() != tag.dim()) {
        throw DimensionMismatchError("QuantumState::density: shape does not match basis " +
                                     tag.str());
    }
    QuantumState s;
    s.repr = Representation::Density;
    s.data = std::move(rho);
    s.basis = tag;
    return s;
}

Vector QuantumState::vec() const {
    if (!is_vector()) {
        throw DimensionMismatchError("QuantumState::vec: state is a density matrix");
    }
    return data.col(0);
}

Matrix QuantumState::density() const {
    if (is_vector()) return data.col(0) * data.col(0).adjoint();
    return data;
}

double QuantumState::norm_defect() const {
    if (is_vector()) return std::abs(data.col(0).norm() - 1.0);
    return std::abs(data.trace().real() - 1.0) + std::abs(data.trace().imag());
}

double QuantumState::purity() const {
    if (is_vector()) return 1.0;
    return (data * data).trace().real();
}

void QuantumState::validate(const Tolerances& tol) const {
    if (is_vector()) {
        if (norm_defect() > tol.state_norm) {
            throw DimensionMismatchError("QuantumState: vector norm defect " +
                                         std::to_string(norm_defect()));
        }
        return;
    }
    if (norm_defect() > tol.trace) {
        throw DimensionMismatchError("QuantumState: density trace defect " +
                                     std::to_string(norm_defect()));
    }
    const double herm = (data - data.adjoint()).cwiseAbs().maxCoeff();
    if (herm > tol.hermiticity * 100) {
        throw NotHermitianError("QuantumState: density Hermiticity defect " +
                                std::to_string(herm));
    }
    Eigen::SelfAdjointEigenSolver<Matrix> solver(data, Eigen::EigenvaluesOnly);
    const double min_eig = solver.eigenvalues().minCoeff();
    if (min_eig < tol.eigenvalue_floor) {
        throw PositivityViolationError(
            "QuantumState: density eigenvalue " + std::to_string(min_eig) + " below floor",
            min_eig);
    }
}

void require_same_basis(const BasisTag& a, const BasisTag& b, const char* where) {
    if (a != b) {
        throw BasisMismatchError(std::string(where) + ": basis mismatch, " + a.str() + " vs " +
                                 b.str());
    }
}

}  // namespace oatsim
