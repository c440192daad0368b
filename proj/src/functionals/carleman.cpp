#include "dimlift/functionals/carleman.hpp"

#include <algorithm>
#include <cmath>

#include "dimlift/errors.hpp"

namespace dimlift {

double carleman_elliptic_constant(double gamma, int N) {
  if (N < 1) throw DomainError("carleman constant needs N >= 1");
  if (!std::isfinite(gamma)) throw DomainError("gamma must be finite");
  // The product is a quadratic in l with roots 2 - gamma - N/2 and gamma - N/2;
  // past the larger root it only grows.
  const double half = 0.5 * N;
  const double top = std::max(2.0 - gamma - half, gamma - half);
  const long last = std::max(1L, static_cast<long>(std::ceil(top)) + 1);
  double best = INFINITY;
  for (long l = 0; l <= last; ++l) {
    const double ld = static_cast<double>(l);
    best = std::min(best, std::abs((half + ld + gamma - 2.0) * (half + ld - gamma)));
  }
  return best;
}

EllipticCarlemanReport carleman_elliptic_check(const ScalarField& v, double gamma,
                                               const QuadratureSpec& spec, double rel_tol) {
  const auto support = v.support();
  if (!support || !(support->r_in > 0.0)) {
    throw DomainError("carleman check needs a support annulus away from the origin");
  }
  const int N = v.dim();
  const Vector m = integrate_shell_multi(
                       [&](const Vector& y) {
                         const double r = y.norm();
                         const double lap = v.laplacian(y);
                         const double val = v.value(y);
                         return (Vector(2) << std::pow(r, 2.0 * (2.0 - gamma)) * lap * lap,
                                 std::pow(r, -2.0 * gamma) * val * val)
                             .finished();
                       },
                       2, N, support->r_in, support->r_out, spec)
                       .values;
  EllipticCarlemanReport rep;
  rep.gamma = gamma;
  rep.constant = carleman_elliptic_constant(gamma, N);
  rep.lhs = std::sqrt(m[0]);
  rep.rhs = rep.constant * std::sqrt(m[1]);
  rep.satisfied = rep.lhs >= rep.rhs - rel_tol * std::max(rep.lhs, rep.rhs);
  return rep;
}

CarlemanReport carleman_parabolic_check(const SpaceTimeField& u, double alpha,
                                        const QuadratureSpec& spec, double rel_tol) {
  const int d = u.dim();
  CarlemanReport rep;
  rep.alpha = alpha;
  rep.beta = 2.0 * alpha - 0.5 * d - 1.0;
  if (!(rep.beta > 0.0)) throw DomainError("carleman check needs beta = 2 alpha - d/2 - 1 > 0");
  rep.epsilon = std::abs(rep.beta - std::round(rep.beta));
  if (rep.epsilon < 1e-12) throw DomainError("carleman check needs a non-integer beta");
  const auto window = u.support();
  if (!window || !(window->t_in >= 0.0) || (window->r_in <= 0.0 && window->t_in <= 0.0)) {
    throw DomainError("carleman check needs a support window away from (0, 0)");
  }
  const Vector m = integrate_window_multi(
                       [&](const Vector& x, double t) {
                         const double g = std::exp(-x.squaredNorm() / (4.0 * t));
                         const double val = u.value(x, t);
                         const double heat = u.laplacian(x, t) + u.dt(x, t);
                         return (Vector(2) << std::pow(t, -2.0 * alpha) * g * val * val,
                                 std::pow(t, 2.0 - 2.0 * alpha) * g * heat * heat)
                             .finished();
                       },
                       2, d, *window, spec)
                       .values;
  rep.lhs = m[0];
  rep.rhs_integral = m[1];
  rep.constant_used = 8.0 / (rep.epsilon * rep.epsilon);
  rep.rhs = rep.constant_used * rep.rhs_integral;
  rep.satisfied = rep.lhs <= rep.rhs + rel_tol * std::max(rep.lhs, rep.rhs);
  return rep;
}

}  // namespace dimlift
