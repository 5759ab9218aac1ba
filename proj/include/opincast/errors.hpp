#pragma once

#include <stdexcept>
#include <string>

namespace opincast {

// Malformed input data (edge lists, opinion files).
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Violated preconditions or domain invariants.
struct ValidationError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Iterative solver failed to reach the requested residual.
struct SolverError : std::runtime_error {
    SolverError(const std::string& what, double residual)
        : std::runtime_error(what), final_residual(residual) {}
    double final_residual;
};

}  // namespace opincast
