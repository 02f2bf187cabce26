#pragma once

#include <functional>
#include <vector>

namespace subchain {

/// Adaptive Simpson integration to an absolute error target.
double integrate_adaptive(const std::function<double(double)>& f, double lo,
                          double hi, double abs_tol, int max_depth = 48);

/// Adaptive Simpson with the interval pre-split at the given interior
/// breakpoints (integrand zeros, kinks, sharp peaks). The error budget
/// is distributed over the panels in proportion to their length.
double integrate_with_breakpoints(const std::function<double(double)>& f,
                                  double lo, double hi,
                                  std::vector<double> breakpoints,
                                  double abs_tol);

}  // namespace subchain
