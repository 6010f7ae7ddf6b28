// tolerances.hpp — Central numerical tolerance record used across the library.

#pragma once

namespace oatsim {

struct Tolerances {
    double hermiticity      = 1e-12;  // max |M - M^dag| entrywise
    double unitarity        = 1e-10;  // max |U^dag U - I| entrywise
    double reconstruction   = 1e-10;  // eigendecomposition round trip, per unit dim
    double state_norm       = 1e-10;  // | ||psi|| - 1 |
    double trace            = 1e-10;  // | tr(rho) - 1 |
    double eigenvalue_floor = -1e-8;  // smallest admissible density eigenvalue
    double truncation_tail  = 1e-12;  // omitted Fock-tail probability target
    double truncation_hard  = 1e-10;  // retained probability below 1 - this is an error
    double canonical_pulse  = 1e-9;   // | A0*d*T - pi | for the canonical pulse train
    double zero_mean_spin   = 1e-9;   // |<S>| below this has no mean-spin direction
};

inline constexpr Tolerances kTol{};

}  // namespace oatsim
