// types.hpp — Basis tags, operator matrices, and quantum states.
//
// Every operator and state carries a BasisTag so that mixed-basis algebra
// (and reversed Kronecker factor order) is caught at the call site instead
// of surfacing as an index bug three modules later.

#pragma once

#include <Eigen/Dense>

#include <complex>
#include <string>

#include "oatsim/errors.hpp"
#include "oatsim/tolerances.hpp"

namespace oatsim {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

// ----------------------------- basis tags -----------------------------------

enum class BasisKind { Spin, Boson, Composite };

struct BasisTag {
    BasisKind kind = BasisKind::Spin;
    int n_atoms = 0;  // spin/composite: Dicke space of N atoms, dim N+1
    int n_max = -1;   // boson/composite: Fock truncation, dim n_max+1

    static BasisTag spin(int n_atoms) { return {BasisKind::Spin, n_atoms, -1}; }
    static BasisTag boson(int n_max) { return {BasisKind::Boson, 0, n_max}; }
    static BasisTag composite(int n_atoms, int n_max) {
        return {BasisKind::Composite, n_atoms, n_max};
    }

    int spin_dim() const { return n_atoms + 1; }
    int boson_dim() const { return n_max + 1; }

    int dim() const {
        switch (kind) {
            case BasisKind::Spin: return spin_dim();
            case BasisKind::Boson: return boson_dim();
            case BasisKind::Composite: return spin_dim() * boson_dim();
        }
        return 0;
    }

    bool operator==(const BasisTag& o) const {
        if (kind != o.kind) return false;
        switch (kind) {
            case BasisKind::Spin: return n_atoms == o.n_atoms;
            case BasisKind::Boson: return n_max == o.n_max;
            case BasisKind::Composite: return n_atoms == o.n_atoms && n_max == o.n_max;
        }
        return false;
    }
    bool operator!=(const BasisTag& o) const { return !(*this == o); }

    std::string str() const;
};

// --------------------------- operator matrix ---------------------------------

struct OperatorMatrix {
    Matrix data;
    BasisTag basis;

    OperatorMatrix() = default;
    OperatorMatrix(Matrix m, BasisTag tag);

    int dim() const { return static_cast<int>(data.rows()); }
    double hermiticity_defect() const { return (data - data.adjoint()).cwiseAbs().maxCoeff(); }
    bool is_hermitian(double tol = kTol.hermiticity) const { return hermiticity_defect() <= tol; }
};

// ------------------------------ quantum state --------------------------------

enum class Representation { Vector, Density };

struct QuantumState {
    Representation repr = Representation::Vector;
    Matrix data;  // dim x 1 for vectors, dim x dim for densities
    BasisTag basis;

    static QuantumState vector(Vector v, BasisTag tag);
    static QuantumState density(Matrix rho, BasisTag tag);

    int dim() const { return static_cast<int>(data.rows()); }
    bool is_vector() const { return repr == Representation::Vector; }

    Vector vec() const;       // vector form (throws for densities)
    Matrix density() const;   // density form (outer product for vectors)

    double norm_defect() const;   // vector: | ||v||-1 |,  density: | tr-1 |
    double purity() const;        // tr(rho^2), exactly 1 for vectors

    // Checks the representation invariants (norm/trace, Hermiticity,
    // eigenvalue floor) and throws on violation.
    void validate(const Tolerances& tol = kTol) const;
};

void require_same_basis(const BasisTag& a, const BasisTag& b, const char* where);

}  // namespace oatsim
