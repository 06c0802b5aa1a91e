#pragma once

#include <functional>

namespace gmix {

// Adaptive Gauss-Kronrod (7-15) integration of f over [a, b].
// Throws ConvergenceError if the refinement cannot reach the tolerance.
double integrate_adaptive(const std::function<double(double)>& f, double a,
                          double b, double rel_tol = 1e-10,
                          int max_depth = 48);

}  // namespace gmix
