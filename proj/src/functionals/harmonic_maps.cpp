#include "dimlift/functionals/harmonic_maps.hpp"

#include <cmath>

#include "dimlift/errors.hpp"

namespace dimlift {

double hm_phi(const SphereField& v, const Vector& y0, double r, const QuadratureSpec& spec) {
  if (!(r > 0.0)) throw DomainError("hm_phi needs r > 0");
  const int N = v.dim();
  const double energy = integrate_ball_multi(
                            [&](const Vector& y) { return Vector::Constant(1, v.energy_density(y)); },
                            1, N, y0, r, spec)
                            .values[0];
  return std::pow(r, 2.0 - N) * energy;
}

double hm_dphi_lower_bound(const SphereField& v, const VectorNonhomTerm& H, const Vector& y0,
                           double r, const QuadratureSpec& spec) {
  if (!(r > 0.0)) throw DomainError("hm bound needs r > 0");
  const int N = v.dim();
  const double integral = integrate_ball_multi(
                              [&](const Vector& y) {
                                const Vector radial = v.jacobian(y) * (y - y0);
                                return Vector::Constant(1, H(y).dot(radial));
                              },
                              1, N, y0, r, spec)
                              .values[0];
  return -std::pow(r, 1.0 - N) * integral;
}

double struwe_Phi(const SphereField& u, double t, const QuadratureSpec& spec) {
  if (!(t > 0.0)) throw DomainError("struwe_Phi needs t > 0");
  return t * integrate_weighted([&](const Vector& x) { return u.energy_density(x); },
                                Weight::gaussian(), u.dim(), t, spec)
                 .value;
}

double lifted_hm_Phi(const SphereField& u, const LiftConfig& cfg, double t,
                     const QuadratureSpec& spec) {
  if (!(t > 0.0)) throw DomainError("lifted_hm_Phi needs t > 0");
  if (u.dim() != cfg.d()) throw DomainError("map dimension does not match d");
  const double N = cfg.lifted_dim();
  if (N <= 2.0) throw UnsupportedConfiguration("lifted_hm_Phi needs n d > 2");
  const Vector m = integrate_weighted_multi(
                       [&](const Vector& x) {
                         const Matrix J = u.jacobian(x);
                         return (Vector(2) << J.squaredNorm(), (J * x).squaredNorm()).finished();
                       },
                       2, Weight::finite(cfg.n()), cfg.d(), t, spec)
                       .values;
  return N / (N - 2.0) * t * m[0] - m[1] / (N - 2.0);
}

}  // namespace dimlift
