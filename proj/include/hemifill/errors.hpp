#pragma once

#include <stdexcept>
#include <string>

namespace hemifill {

// Malformed or out-of-contract input. The CLI maps this to exit code 2.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A construction was asked to operate where it degenerates (boundary Dirac
// branch, geodesic orthogonal to the boundary, seminorm with kernel).
struct DegeneracyError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Adaptive quadrature failed to reach the requested tolerance.
struct QuadratureError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An iterative solver (transport LP, enclosing ellipse) did not converge.
struct SolverError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace hemifill
