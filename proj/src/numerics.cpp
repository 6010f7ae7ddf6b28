#include "oatsim/numerics.hpp"

#include <Eigen/Eigenvalues>

#include <string>

namespace oatsim {

namespace {

void require_hermitian(const OperatorMatrix& M, const char* where) {
    const double defect = M.hermiticity_defect();
    if (defect > kTol.hermiticity) {
        throw NotHermitianError(std::string(where) + ": Hermiticity defect " +
                                std::to_string(defect));
    }
}

}  // namespace

std::pair<RealVector, OperatorMatrix> herm_eig(const OperatorMatrix& M) {
    require_hermitian(M, "herm_eig");
    Eigen::SelfAdjointEigenSolver<Matrix> solver(M.data);
    if (solver.info() != Eigen::Success) {
        throw DimensionMismatchError("herm_eig: eigendecomposition failed");
    }
    return {solver.eigenvalues(), OperatorMatrix(solver.eigenvectors(), M.basis)};
}

OperatorMatrix expm_hermitian_generator(const OperatorMatrix& H, double t) {
    HermitianPropagator prop(H);
    return OperatorMatrix(prop.unitary(t), H.basis);
}

HermitianPropagator::HermitianPropagator(const OperatorMatrix& H) : basis_(H.basis) {
    auto [lambda, v] = herm_eig(H);
    eigenvalues_ = std::move(lambda);
    eigenvectors_ = std::move(v.data);
}

Matrix HermitianPropagator::unitary(double t) const {
    const Vector phases =
        (Complex(0, -t) * eigenvalues_.cast<Complex>().array()).exp().matrix();
    return eigenvectors_ * phases.asDiagonal() * eigenvectors_.adjoint();
}

Vector HermitianPropagator::apply(const Vector& psi, double t) const {
    if (psi.size() != eigenvectors_.rows()) {
        throw DimensionMismatchError("HermitianPropagator::apply: size mismatch");
    }
    const Vector phases =
        (Complex(0, -t) * eigenvalues_.cast<Complex>().array()).exp().matrix();
    return eigenvectors_ * (phases.asDiagonal() * (eigenvectors_.adjoint() * psi));
}

Matrix HermitianPropagator::conjugate(const Matrix& rho, double t) const {
    const Matrix u = unitary(t);
    return u * rho * u.adjoint();
}

OperatorMatrix kron(const OperatorMatrix& spin_op, const OperatorMatrix& boson_op) {
    if (spin_op.basis.kind != BasisKind::Spin || boson_op.basis.kind != BasisKind::Boson) {
        throw BasisOrderViolationError("kron: expected spin (x) boson, got " +
                                       spin_op.basis.str() + " (x) " + boson_op.basis.str());
    }
    const int ds = spin_op.dim();
    const int db = boson_op.dim();
    Matrix out(ds * db, ds * db);
    for (int i = 0; i < ds; ++i) {
        for (int j = 0; j < ds; ++j) {
            out.block(i * db, j * db, db, db) = spin_op.data(i, j) * boson_op.data;
        }
    }
    return OperatorMatrix(out, BasisTag::composite(spin_op.basis.n_atoms, boson_op.basis.n_max));
}

QuantumState partial_trace_boson(const QuantumState& rho) {
    if (rho.basis.kind != BasisKind::Composite) {
        throw BasisMismatchError("partial_trace_boson: state is not composite, " +
                                 rho.basis.str());
    }
    const int ds = rho.basis.spin_dim();
    const int db = rho.basis.boson_dim();
    Matrix out = Matrix::Zero(ds, ds);
    if (rho.is_vector()) {
        // <m| rho_S |m'> = sum_n psi[m,n] conj(psi[m',n]) without forming rho.
        const Vector psi = rho.vec();
        for (int i = 0; i < ds; ++i) {
            for (int j = 0; j < ds; ++j) {
                Complex acc = 0;
                for (int n = 0; n < db; ++n) acc += psi(i * db + n) * std::conj(psi(j * db + n));
                out(i, j) = acc;
            }
        }
    } else {
        const Matrix& full = rho.data;
        for (int i = 0; i < ds; ++i) {
            for (int j = 0; j < ds; ++j) {
                Complex acc = 0;
                for (int n = 0; n < db; ++n) acc += full(i * db + n, j * db + n);
                out(i, j) = acc;
            }
        }
    }
    return QuantumState::density(std::move(out), BasisTag::spin(rho.basis.n_atoms));
}

Vector vectorize(const Matrix& m) {
    Vector v(m.size());
    int k = 0;
    for (int c = 0; c < m.cols(); ++c) {
        for (int r = 0; r < m.rows(); ++r) v(k++) = m(r, c);
    }
    return v;
}

Matrix unvectorize(const Vector& v, int rows, int cols) {
    if (v.size() != static_cast<long>(rows) * cols) {
        throw DimensionMismatchError("unvectorize: size mismatch");
    }
    Matrix m(rows, cols);
    int k = 0;
    for (int c = 0; c < cols; ++c) {
        for (int r = 0; r < rows; ++r) m(r, c) = v(k++);
    }
    return m;
}

Matrix left_multiply_superop(const Matrix& a) {
    const int d = static_cast<int>(a.rows());
    Matrix id = Matrix::Identity(d, d);
    Matrix out = Matrix::Zero(d * d, d * d);
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) {
            if (id(i, j) != Complex(0)) out.block(i * d, j * d, d, d) = id(i, j) * a;
        }
    }
    return out;
}

Matrix right_multiply_superop(const Matrix& b) {
    const int d = static_cast<int>(b.rows());
    Matrix bt = b.transpose();
    Matrix out = Matrix::Zero(d * d, d * d);
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) {
            if (bt(i, j) != Complex(0)) out.block(i * d, j * d, d, d) = bt(i, j) * Matrix::Identity(d, d);
        }
    }
    return out;
}

}  // namespace oatsim
