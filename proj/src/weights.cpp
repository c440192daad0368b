#include "dimlift/weights.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "dimlift/core_lift.hpp"
#include "dimlift/errors.hpp"

namespace dimlift {
namespace {

void check_time(double t) {
  if (!(t > 0.0)) throw DomainError("weight requires t > 0");
}

void check_dim(int d, const Vector& x) {
  if (d < 1) throw DomainError("weight requires d >= 1");
  if (x.size() != d) throw DomainError("point dimension does not match d");
}

}  // namespace

double gaussian_weight(int d, double t, const Vector& x) {
  check_time(t);
  check_dim(d, x);
  return std::pow(4.0 * std::numbers::pi * t, -0.5 * d) * std::exp(-x.squaredNorm() / (4.0 * t));
}

double log_finite_weight_prefactor(int d, int n, double t) {
  check_time(t);
  if (d < 1 || n < 1) throw DomainError("finite weight requires d >= 1 and n >= 1");
  const int N = n * d;
  if (N < d + 2) {
    throw UnsupportedConfiguration("finite weight is unbounded for n*d < d + 2 (d=" +
                                   std::to_string(d) + ", n=" + std::to_string(n) + ")");
  }
  return log_sphere_area(N - d) - log_sphere_area(N) - 0.5 * d * std::log(2.0 * N * t);
}

double finite_weight(int d, int n, double t, const Vector& x) {
  check_dim(d, x);
  const double log_pre = log_finite_weight_prefactor(d, n, t);
  const double N = static_cast<double>(n) * d;
  const double s = x.squaredNorm() / (2.0 * N * t);
  if (s > 1.0) return 0.0;
  const double exponent = 0.5 * (N - d - 2.0);
  if (exponent == 0.0) return std::exp(log_pre);
  if (s == 1.0) return 0.0;
  return std::exp(log_pre + exponent * std::log1p(-s));
}

double ratio_bound(int d, int n) {
  if (d < 1 || n < 1) throw DomainError("ratio_bound requires d >= 1 and n >= 1");
  const int N = n * d;
  if (N < d + 3) {
    throw UnsupportedConfiguration("ratio_bound requires n*d >= d + 3 (d=" + std::to_string(d) +
                                   ", n=" + std::to_string(n) + ")");
  }
  const double Nd = N;
  const double log_ratio = log_sphere_area(N - d) - log_sphere_area(N) +
                           0.5 * d * std::log(4.0 * std::numbers::pi / (2.0 * Nd)) +
                           0.5 * (Nd - d - 2.0) * std::log1p(-(2.0 / Nd) * (0.5 * d + 1.0)) +
                           (0.5 * d + 1.0);
  return std::exp(log_ratio);
}

WeightLimitReport weight_limit_report(int d, double t, const std::vector<Vector>& x_grid,
                                      const std::vector<int>& n_list) {
  check_time(t);
  if (x_grid.empty()) throw DomainError("weight_limit_report needs a non-empty grid");
  if (n_list.empty()) throw DomainError("weight_limit_report needs at least one n");
  WeightLimitReport report;
  report.n_list = n_list;
  for (int n : n_list) {
    double worst = 0.0;
    for (const Vector& x : x_grid) {
      const double g = gaussian_weight(d, t, x);
      const double gn = finite_weight(d, n, t, x);
      worst = std::max(worst, std::abs(gn - g) / g);
    }
    report.sup_rel_error.push_back(worst);
  }
  report.strictly_decreasing = true;
  for (std::size_t k = 0; k + 1 < report.sup_rel_error.size(); ++k) {
    report.ratios.push_back(report.sup_rel_error[k] / report.sup_rel_error[k + 1]);
    if (!(report.sup_rel_error[k + 1] < report.sup_rel_error[k])) report.strictly_decreasing = false;
  }
  return report;
}

}  // namespace dimlift
