// boson.hpp — Truncated Fock space for the cavity mode and the four
// bosonic input-state families (Fock, coherent, thermal, squeezed vacuum).

#pragma once

#include <complex>
#include <variant>

#include "oatsim/types.hpp"

namespace oatsim {

struct BosonSpace {
    int n_max = 0;

    explicit BosonSpace(int n) : n_max(n) {
        if (n < 0) throw DimensionMismatchError("BosonSpace: n_max must be >= 0");
    }
    int dim() const { return n_max + 1; }
    BasisTag basis() const { return BasisTag::boson(n_max); }
};

// Input-state family. Thermal inputs are mixed (diagonal density); the other
// three are pure vectors.
struct BosonInput {
    enum class Kind { Fock, Coherent, Thermal, Squeezed };
    Kind kind = Kind::Fock;
    int n0 = 0;          // Fock
    Complex alpha = 0.;  // coherent amplitude
    double nbar = 0.;    // thermal mean occupation
    double r = 0.;       // squeezing parameter

    static BosonInput fock(int n0);
    static BosonInput coherent(Complex alpha);
    static BosonInput thermal(double nbar);
    static BosonInput squeezed(double r);

    bool is_mixed() const { return kind == Kind::Thermal; }
    std::string str() const;
};

struct LadderOperators {
    OperatorMatrix a, a_dag, number;
};

// a|n> = sqrt(n)|n-1>; creation truncated at n_max; number = a^dag a.
LadderOperators ladder_operators(const BosonSpace& space);

// Fock-basis occupation weights |c_n|^2 of an input, renormalized over the
// truncation. The pre-normalization deficit is available separately.
RealVector occupation_weights(const BosonSpace& space, const BosonInput& input);

// Probability weight left outside the truncation (before renormalization).
double truncation_deficit(const BosonSpace& space, const BosonInput& input);

// State constructor. Throws TruncationInsufficientError when the retained
// probability falls below 1 - kTol.truncation_hard.
QuantumState input_state(const BosonSpace& space, const BosonInput& input);

// Smallest n_max whose omitted tail probability is < kTol.truncation_tail.
int truncation_recommendation(const BosonInput& input);

}  // namespace oatsim
