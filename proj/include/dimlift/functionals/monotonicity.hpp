#pragma once

#include <functional>
#include <vector>

namespace dimlift {

struct MonotonicityReport {
  std::vector<double> grid;
  std::vector<double> values;
  /// Forward differences; one fewer than the grid.
  std::vector<double> fd_derivatives;
  double min_slope = 0.0;
  /// Slopes below -tol * max(1, max |value|).
  int violations = 0;
  double tol = 0.0;
};

/// Evaluates `curve` on a strictly increasing grid of at least 8 points. Points
/// may be evaluated in parallel; results are ordered by grid index. A failing
/// evaluation is rethrown with the offending parameter in its message.
/// threads <= 0 uses default_threads().
MonotonicityReport monotonicity_sweep(const std::function<double(double)>& curve,
                                      const std::vector<double>& grid, double tol,
                                      int threads = 1);

/// k points from a to b inclusive, evenly spaced or geometric.
std::vector<double> linear_grid(double a, double b, int k);
std::vector<double> geometric_grid(double a, double b, int k);

}  // namespace dimlift
