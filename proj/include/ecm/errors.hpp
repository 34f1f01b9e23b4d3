#pragma once

#include <stdexcept>
#include <string>

namespace ecm {

// Bad parameter or malformed field handed to a library call.
struct InvalidArgument : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Mesh too coarse to represent the requested geometry.
struct ResolutionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Equivalent-parameter extraction hit a (near-)singular denominator.
struct SingularExtraction : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Iterative linear solver missed its residual tolerance.
struct SolverError : std::runtime_error {
    SolverError(const std::string& msg, long iterations, double residual)
        : std::runtime_error(msg), iterations(iterations), residual(residual) {}
    long iterations;
    double residual;
};

}  // namespace ecm
