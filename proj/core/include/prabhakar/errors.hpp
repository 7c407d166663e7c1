#pragma once

#include <stdexcept>

namespace prabhakar {

// Error taxonomy used across the library. Everything derives from
// std::runtime_error so callers may catch coarsely or by exact type.

// Gamma evaluated at a non-positive integer.
struct pole_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A value left the representable double range.
struct overflow_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Argument outside an operation's domain.
struct domain_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// The power series did not meet its stop rule within the term cap.
// Callers are expected to switch to the contour-inversion backend.
struct non_convergence_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Adaptive quadrature could not certify the requested tolerance
// within its panel budget.
struct quadrature_failure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Relaxation-model parameters outside the declared range of the kind.
struct invalid_model_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace prabhakar
