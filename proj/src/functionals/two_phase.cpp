#include "dimlift/functionals/two_phase.hpp"

#include <cmath>

#include "dimlift/errors.hpp"

namespace dimlift {
namespace {

// |y|^{2-N}; the singularity at 0 is integrable and no node sits there.
double kernel(const Vector& y, int N) { return N == 2 ? 1.0 : std::pow(y.norm(), 2.0 - N); }

void check_pair(int a, int b) {
  if (a != b) throw DomainError("two-phase pair has mismatched dimensions");
}

}  // namespace

QuadratureSpec two_phase_spec() {
  QuadratureSpec spec;
  spec.angular_rule = AngularRule::SplitGauss;
  return spec;
}

TwoPhaseReport acf_phi(const ScalarField& v1, const ScalarField& v2, double r,
                       const QuadratureSpec& spec) {
  if (!(r > 0.0)) throw DomainError("acf_phi needs r > 0");
  check_pair(v1.dim(), v2.dim());
  const int N = v1.dim();
  const Vector m = integrate_ball_multi(
                       [&](const Vector& y) {
                         const double k = kernel(y, N);
                         return (Vector(2) << v1.gradient(y).squaredNorm() * k,
                                 v2.gradient(y).squaredNorm() * k)
                             .finished();
                       },
                       2, N, Vector::Zero(N), r, spec)
                       .values;
  TwoPhaseReport rep;
  rep.param = r;
  rep.factor1 = m[0];
  rep.factor2 = m[1];
  rep.value = m[0] * m[1] / std::pow(r, 4);
  rep.s1 = support_fraction(v1, r, spec);
  rep.s2 = support_fraction(v2, r, spec);
  return rep;
}

double psi(double s) {
  if (!(s > 0.0) || s > 1.0) throw DomainError("psi is defined on (0, 1]");
  if (s < 0.25) return 0.5 * std::log(1.0 / (4.0 * s)) + 1.5;
  return 2.0 * (1.0 - s);
}

double support_fraction(const ScalarField& v, double r, const QuadratureSpec& spec) {
  if (!(r > 0.0)) throw DomainError("support_fraction needs r > 0");
  const int N = v.dim();
  const double area = sphere_area(N) * std::pow(r, N - 1);
  const double covered = integrate_sphere_multi(
                             [&](const Vector& y) {
                               return Vector::Constant(1, v.value(y) > 0.0 ? 1.0 : 0.0);
                             },
                             1, N, Vector::Zero(N), r, spec)
                             .values[0];
  return covered / area;
}

double acf_dphi_lower_bound(const ScalarField& v1, const ScalarField& v2, const NonhomTerm& h1,
                            const NonhomTerm& h2, double r, const QuadratureSpec& spec) {
  if (!(r > 0.0)) throw DomainError("acf bound needs r > 0");
  check_pair(v1.dim(), v2.dim());
  const int N = v1.dim();
  const double s1 = support_fraction(v1, r, spec);
  const double s2 = support_fraction(v2, r, spec);
  if (!(s1 > 0.0) || !(s2 > 0.0)) throw DomainError("acf bound needs non-empty supports on dB_r");
  const Vector m = integrate_ball_multi(
                       [&](const Vector& y) {
                         const double k = kernel(y, N);
                         return (Vector(4) << v1.value(y) * h1(y) * k,
                                 v1.gradient(y).squaredNorm() * k, v2.value(y) * h2(y) * k,
                                 v2.gradient(y).squaredNorm() * k)
                             .finished();
                       },
                       4, N, Vector::Zero(N), r, spec)
                       .values;
  return 2.0 / std::pow(r, 5) * (psi(s1) * m[0] * m[3] + psi(s2) * m[1] * m[2]);
}

TwoPhaseReport caffarelli_Phi(const SpaceTimeField& u1, const SpaceTimeField& u2, double tau,
                              const QuadratureSpec& spec) {
  if (!(tau > 0.0)) throw DomainError("caffarelli_Phi needs tau > 0");
  check_pair(u1.dim(), u2.dim());
  const Vector m = integrate_spacetime_multi(
                       [&](const Vector& x, double t) {
                         return (Vector(2) << u1.gradient(x, t).squaredNorm(),
                                 u2.gradient(x, t).squaredNorm())
                             .finished();
                       },
                       2, Weight::gaussian(), u1.dim(), tau, spec)
                       .values;
  TwoPhaseReport rep;
  rep.param = tau;
  rep.factor1 = m[0];
  rep.factor2 = m[1];
  rep.value = m[0] * m[1] / (tau * tau);
  return rep;
}

double lifted_two_phase(const SpaceTimeField& u1, const SpaceTimeField& u2, const LiftConfig& cfg,
                        double tau, const QuadratureSpec& spec) {
  if (!(tau > 0.0)) throw DomainError("lifted_two_phase needs tau > 0");
  check_pair(u1.dim(), u2.dim());
  check_pair(u1.dim(), cfg.d());
  const double c = 2.0 / cfg.lifted_dim();
  auto density = [c](const SpaceTimeField& u, const Vector& x, double t) {
    const Vector g = u.gradient(x, t);
    const double ut = u.dt(x, t);
    return g.squaredNorm() + c * (x.dot(g) + t * ut) * ut;
  };
  const Vector m = integrate_spacetime_multi(
                       [&](const Vector& x, double t) {
                         return (Vector(2) << density(u1, x, t), density(u2, x, t)).finished();
                       },
                       2, Weight::finite(cfg.n()), cfg.d(), tau, spec)
                       .values;
  return m[0] * m[1] / (tau * tau);
}

}  // namespace dimlift
