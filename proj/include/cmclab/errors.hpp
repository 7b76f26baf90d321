#pragma once

#include <stdexcept>
#include <string>

namespace cmclab {

// Point lies outside the model domain of an ambient space or chart.
struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

// A finite-difference stencil would leave the model domain.
struct StencilError : DomainError {
    using DomainError::DomainError;
};

// Surface parameters violate a family invariant (e.g. 4H^2 outside (0,1)).
struct ParameterError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Immersion Jacobian has rank < 2 at the requested point.
struct DegeneracyError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Metric too close to singular for a reliable curvature/operator value.
struct ConditioningError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Requested a log-q residual at (or too close to) a zero of q.
struct ZeroQError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Polynomial input with the wrong shape (odd in nu, or degree too high).
struct ShapeError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Pair of CMC classes that no classification bucket covers.
struct UnreachableBucketError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

} // namespace cmclab
