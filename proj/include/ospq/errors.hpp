#pragma once

#include <stdexcept>
#include <string>

namespace ospq {

/// Raised when a one-parameter solve leaves a residual above tolerance.
struct NoSolution : std::runtime_error {
    explicit NoSolution(const std::string& msg) : std::runtime_error(msg) {}
};

/// Raised when a restricted nullspace does not have the expected dimension.
struct DegenerateNullspace : std::runtime_error {
    explicit DegenerateNullspace(const std::string& msg) : std::runtime_error(msg) {}
};

/// Raised when a consistency back-check of a recursive construction fails.
struct ResidualTooLarge : std::runtime_error {
    explicit ResidualTooLarge(const std::string& msg) : std::runtime_error(msg) {}
};

/// Raised when an operator family is numerically zero where a fit needs it nonzero.
struct ZeroOperator : std::runtime_error {
    explicit ZeroOperator(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace ospq
