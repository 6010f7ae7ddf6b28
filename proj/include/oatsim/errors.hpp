// errors.hpp — Exception types thrown by the library.

#pragma once

#include <stdexcept>
#include <string>

namespace oatsim {

struct NotHermitianError : std::runtime_error {
    explicit NotHermitianError(const std::string& what) : std::runtime_error(what) {}
};

struct DimensionMismatchError : std::invalid_argument {
    explicit DimensionMismatchError(const std::string& what) : std::invalid_argument(what) {}
};

struct BasisMismatchError : std::invalid_argument {
    explicit BasisMismatchError(const std::string& what) : std::invalid_argument(what) {}
};

// kron() is fixed to spin (x) boson factor order.
struct BasisOrderViolationError : std::invalid_argument {
    explicit BasisOrderViolationError(const std::string& what) : std::invalid_argument(what) {}
};

struct TruncationInsufficientError : std::runtime_error {
    explicit TruncationInsufficientError(const std::string& what) : std::runtime_error(what) {}
};

struct StepTooCoarseError : std::invalid_argument {
    explicit StepTooCoarseError(const std::string& what) : std::invalid_argument(what) {}
};

struct PositivityViolationError : std::runtime_error {
    double worst_eigenvalue;
    PositivityViolationError(const std::string& what, double worst)
        : std::runtime_error(what), worst_eigenvalue(worst) {}
};

struct ConfigurationViolationError : std::invalid_argument {
    explicit ConfigurationViolationError(const std::string& what) : std::invalid_argument(what) {}
};

struct ResolutionTooLowError : std::invalid_argument {
    explicit ResolutionTooLowError(const std::string& what) : std::invalid_argument(what) {}
};

struct ConfigError : std::invalid_argument {
    explicit ConfigError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace oatsim
