#pragma once

#include <stdexcept>

namespace gft {

// Thrown when an evaluation runs into a zero of a denominator (vanishing
// derivative, zero of phi0, ...).  The message names the offending point.
struct singularity_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Thrown when an iteration fails to converge; the message carries diagnostics.
struct numerical_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Usage errors (bad arguments, mismatched orders) are std::invalid_argument,
// domain violations (point outside the domain of a map) are std::domain_error.

} // namespace gft
