#pragma once

#include <stdexcept>
#include <string>

namespace nlcurve {

// Input that violates a documented precondition (bad JSON, bad parameters,
// self-intersecting curves, out-of-range sigma, ...).  CLI maps this to exit 2.
struct ValidationError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Geometric degeneracy that survived perturbation/retry.  CLI maps this to exit 3.
struct GeometryError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DegenerateRayError : GeometryError {
    using GeometryError::GeometryError;
};

struct OnExtensionError : GeometryError {
    using GeometryError::GeometryError;
};

struct NotRadialError : GeometryError {
    using GeometryError::GeometryError;
};

struct PvMismatchError : GeometryError {
    using GeometryError::GeometryError;
};

struct InvalidNormalError : ValidationError {
    using ValidationError::ValidationError;
};

struct ZOnCurveError : GeometryError {
    using GeometryError::GeometryError;
};

} // namespace nlcurve
