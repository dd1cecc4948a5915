#pragma once

#include <functional>

namespace hemifill {

// Adaptive Simpson on [a, b] to the absolute tolerance tol. Throws
// QuadratureError (reporting the tolerance actually reached) when the
// refinement depth runs out.
double adaptive_simpson(const std::function<double(double)>& f, double a,
                        double b, double tol, int max_depth = 40);

}  // namespace hemifill
