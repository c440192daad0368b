#include "dimlift/functionals/frequency.hpp"

#include <cmath>
#include <string>

#include "dimlift/errors.hpp"

namespace dimlift {
namespace {

void check_denominator(double H, const char* what) {
  if (!(std::abs(H) >= kDenominatorFloor)) {
    throw DegenerateDenominator(std::string(what) + ": denominator " + std::to_string(H) +
                                " is below the floor");
  }
}

void check_dim(int expected, int got) {
  if (expected != got) throw DomainError("field dimension does not match");
}

}  // namespace

FrequencyValues almgren(const ScalarField& v, double r, const QuadratureSpec& spec) {
  if (!(r > 0.0)) throw DomainError("almgren needs r > 0");
  const int N = v.dim();
  const Vector origin = Vector::Zero(N);
  const double H = integrate_sphere_multi(
                       [&](const Vector& y) {
                         const double val = v.value(y);
                         return Vector::Constant(1, val * val);
                       },
                       1, N, origin, r, spec)
                       .values[0];
  check_denominator(H, "almgren");
  const double D = integrate_ball_multi(
                       [&](const Vector& y) {
                         return Vector::Constant(1, v.gradient(y).squaredNorm());
                       },
                       1, N, origin, r, spec)
                       .values[0];
  return {r, H, D, r * D / H};
}

double almgren_dL_lower_bound(const ScalarField& v, const NonhomTerm& h, double r,
                              const QuadratureSpec& spec) {
  if (!(r > 0.0)) throw DomainError("almgren bound needs r > 0");
  const int N = v.dim();
  const Vector origin = Vector::Zero(N);
  const Vector boundary = integrate_sphere_multi(
                              [&](const Vector& y) {
                                const double val = v.value(y);
                                return (Vector(2) << val * val,
                                        val * y.dot(v.gradient(y)))
                                    .finished();
                              },
                              2, N, origin, r, spec)
                              .values;
  const double H = boundary[0];
  check_denominator(H, "almgren bound");
  const Vector bulk = integrate_ball_multi(
                          [&](const Vector& y) {
                            const double hy = h(y);
                            return (Vector(2) << hy * v.value(y), hy * y.dot(v.gradient(y)))
                                .finished();
                          },
                          2, N, origin, r, spec)
                          .values;
  return 2.0 * boundary[1] * bulk[0] / (H * H) - 2.0 * bulk[1] / H;
}

FrequencyValues poon(const SpaceTimeField& u, double t, const QuadratureSpec& spec) {
  if (!(t > 0.0)) throw DomainError("poon needs t > 0");
  const Vector m = integrate_weighted_multi(
                       [&](const Vector& x) {
                         const double val = u.value(x, t);
                         return (Vector(2) << val * val, u.gradient(x, t).squaredNorm())
                             .finished();
                       },
                       2, Weight::gaussian(), u.dim(), t, spec)
                       .values;
  check_denominator(m[0], "poon");
  return {t, m[0], m[1], t * m[1] / m[0]};
}

double lifted_frequency(const SpaceTimeField& u, const LiftConfig& cfg, double t,
                        const QuadratureSpec& spec) {
  if (!(t > 0.0)) throw DomainError("lifted frequency needs t > 0");
  check_dim(cfg.d(), u.dim());
  if (cfg.lifted_dim() < 2) throw UnsupportedConfiguration("lifted frequency needs n d >= 2");
  const Weight w = Weight::finite(cfg.n());
  const Vector spatial = integrate_weighted_multi(
                             [&](const Vector& x) {
                               const double val = u.value(x, t);
                               const double radial = x.dot(u.gradient(x, t)) + 2.0 * t * u.dt(x, t);
                               return (Vector(2) << val * val, val * radial).finished();
                             },
                             2, w, cfg.d(), t, spec)
                             .values;
  check_denominator(spatial[0], "lifted frequency");
  // The factor (tau/t)^{(nd-2)/2} is the Gauss-Jacobi weight of the time rule,
  // so it never has to be formed explicitly.
  const double time_power = 0.5 * (cfg.lifted_dim() - 2.0);
  const double memory = integrate_spacetime_multi(
                            [&](const Vector& x, double tau) {
                              const double scaling = x.dot(u.grad_dt(x, tau)) + tau * u.dtt(x, tau);
                              return Vector::Constant(1, scaling * u.value(x, tau));
                            },
                            1, w, cfg.d(), t, spec, time_power)
                            .values[0];
  return (spatial[1] - 2.0 * memory) / spatial[0];
}

}  // namespace dimlift
