#pragma once

#include <vector>

#include "dimlift/types.hpp"

namespace dimlift {

/// Heat kernel (4 pi t)^{-d/2} exp(-|x|^2 / 4t).
double gaussian_weight(int d, double t, const Vector& x);

/// Log of the constant in front of the finite-dimensional weight.
double log_finite_weight_prefactor(int d, int n, double t);

/// Density of the push-forward of the uniform measure on S_t^n under the
/// row-sum map. Requires n d >= d + 2 so the density is bounded.
double finite_weight(int d, int n, double t, const Vector& x);

/// Supremum over x of finite_weight / gaussian_weight. Requires n d >= d + 3.
double ratio_bound(int d, int n);

struct WeightLimitReport {
  std::vector<int> n_list;
  /// sup over the grid of |G_n - G| / G for each n.
  std::vector<double> sup_rel_error;
  /// sup_rel_error[k] / sup_rel_error[k+1].
  std::vector<double> ratios;
  bool strictly_decreasing = false;
};

/// Grid is a list of d-vectors.
WeightLimitReport weight_limit_report(int d, double t, const std::vector<Vector>& x_grid,
                                      const std::vector<int>& n_list);

}  // namespace dimlift
