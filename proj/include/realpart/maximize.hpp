#pragma once

#include <functional>
#include <optional>

namespace realpart {

struct MaximizeOptions {
  int grid_points = 256;       ///< grid intervals; grid_points + 1 samples
  double x_tol = 1e-10;        ///< golden-section / bisection bracket width
  double flat_rel_tol = 1e-12; ///< objective spread treated as flat
};

struct MaximizeResult {
  double x = 0.0;
  double value = 0.0;
  bool flat = false;
  int evaluations = 0;
};

/// Maximizes f on [lo, hi]: uniform grid, then golden-section search on the
/// bracket around the best grid point (lowest index on ties). A flat
/// objective returns lo. When `derivative` is given, the golden-section
/// point is replaced by the sign change of f' inside the bracket, which is
/// resolvable at flat maxima where f values alone are dominated by
/// rounding.
MaximizeResult grid_golden_maximize(const std::function<double(double)>& f, double lo, double hi,
                                    const MaximizeOptions& opts = {},
                                    const std::function<double(double)>& derivative = {});

}  // namespace realpart
