#include "dimlift/functionals/monotonicity.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <string>

#include "dimlift/errors.hpp"
#include "dimlift/parallel.hpp"

namespace dimlift {
namespace {

std::string at(double p) { return " (at parameter " + std::to_string(p) + ")"; }

[[noreturn]] void rethrow_with_parameter(std::exception_ptr e, double p) {
  try {
    std::rethrow_exception(e);
  } catch (const AccuracyError& err) {
    throw AccuracyError(err.what() + at(p), err.previous(), err.last());
  } catch (const DegenerateDenominator& err) {
    throw DegenerateDenominator(err.what() + at(p));
  } catch (const UnsupportedConfiguration& err) {
    throw UnsupportedConfiguration(err.what() + at(p));
  } catch (const DomainError& err) {
    throw DomainError(err.what() + at(p));
  } catch (const std::exception& err) {
    throw std::runtime_error(err.what() + at(p));
  }
}

}  // namespace

MonotonicityReport monotonicity_sweep(const std::function<double(double)>& curve,
                                      const std::vector<double>& grid, double tol, int threads) {
  if (grid.size() < 8) throw DomainError("monotonicity sweep needs at least 8 grid points");
  for (std::size_t k = 1; k < grid.size(); ++k) {
    if (!(grid[k] > grid[k - 1])) throw DomainError("sweep grid must be strictly increasing");
  }
  if (!(tol >= 0.0)) throw DomainError("sweep tolerance must be non-negative");

  MonotonicityReport rep;
  rep.grid = grid;
  rep.tol = tol;
  rep.values.assign(grid.size(), 0.0);
  std::vector<std::exception_ptr> errors(grid.size());
  parallel_for(
      grid.size(),
      [&](std::size_t k) {
        try {
          rep.values[k] = curve(grid[k]);
        } catch (...) {
          errors[k] = std::current_exception();
        }
      },
      threads > 0 ? threads : default_threads());
  for (std::size_t k = 0; k < grid.size(); ++k) {
    if (errors[k]) rethrow_with_parameter(errors[k], grid[k]);
  }

  double scale = 1.0;
  for (double v : rep.values) scale = std::max(scale, std::abs(v));
  rep.min_slope = INFINITY;
  for (std::size_t k = 0; k + 1 < grid.size(); ++k) {
    const double slope = (rep.values[k + 1] - rep.values[k]) / (grid[k + 1] - grid[k]);
    rep.fd_derivatives.push_back(slope);
    rep.min_slope = std::min(rep.min_slope, slope);
    if (slope < -tol * scale) ++rep.violations;
  }
  return rep;
}

std::vector<double> linear_grid(double a, double b, int k) {
  if (k < 2 || !(b > a)) throw DomainError("grid needs k >= 2 and b > a");
  std::vector<double> g(k);
  for (int i = 0; i < k; ++i) g[i] = a + (b - a) * i / (k - 1);
  g.back() = b;
  return g;
}

std::vector<double> geometric_grid(double a, double b, int k) {
  if (k < 2 || !(a > 0.0) || !(b > a)) throw DomainError("geometric grid needs k >= 2 and 0 < a < b");
  std::vector<double> g(k);
  const double ratio = std::log(b / a);
  for (int i = 0; i < k; ++i) g[i] = a * std::exp(ratio * i / (k - 1));
  g.front() = a;
  g.back() = b;
  return g;
}

}  // namespace dimlift
