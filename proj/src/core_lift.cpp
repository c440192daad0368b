#include "dimlift/core_lift.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "dimlift/errors.hpp"

namespace dimlift {

LiftConfig::LiftConfig(int d, int n) : d_(d), n_(n) {
  if (d < 1 || n < 1) {
    throw DomainError("LiftConfig requires d >= 1 and n >= 1, got d=" + std::to_string(d) +
                      ", n=" + std::to_string(n));
  }
}

HighDimPoint::HighDimPoint(const LiftConfig& cfg, Vector coords)
    : cfg_(cfg), coords_(std::move(coords)) {
  if (coords_.size() != cfg.lifted_dim()) {
    throw DomainError("point has " + std::to_string(coords_.size()) + " coordinates, expected " +
                      std::to_string(cfg.lifted_dim()));
  }
}

DomainSpec::DomainSpec(DomainKind kind, const LiftConfig& cfg, double time)
    : kind_(kind), cfg_(cfg), time_(time) {
  if (!(time > 0.0)) throw DomainError("domain time parameter must be positive");
}

double DomainSpec::radius() const {
  const double d = cfg_.d();
  const double n = cfg_.n();
  switch (kind_) {
    case DomainKind::SphereStn:
    case DomainKind::BallBtn:
      return std::sqrt(2.0 * d * time_);
    case DomainKind::BallBnt:
    case DomainKind::ConeKnt:
      return std::sqrt(2.0 * n * d * time_);
  }
  return 0.0;
}

int DomainSpec::ambient_dim() const {
  switch (kind_) {
    case DomainKind::SphereStn:
    case DomainKind::BallBtn:
      return cfg_.lifted_dim();
    case DomainKind::BallBnt:
      return cfg_.d();
    case DomainKind::ConeKnt:
      return cfg_.d() + 1;
  }
  return 0;
}

bool DomainSpec::contains(const Vector& p, double rel_tol) const {
  if (kind_ == DomainKind::ConeKnt) {
    if (p.size() != cfg_.d() + 1) throw DomainError("cone membership needs a (x, t) vector");
    return contains(SpaceTimePoint{p.head(cfg_.d()), p[cfg_.d()]});
  }
  if (p.size() != ambient_dim()) throw DomainError("point dimension does not match the domain");
  const double R = radius();
  const double r = p.norm();
  if (kind_ == DomainKind::SphereStn) return std::abs(r - R) <= rel_tol * R;
  return r <= R * (1.0 + rel_tol);
}

bool DomainSpec::contains(const SpaceTimePoint& p) const {
  if (kind_ != DomainKind::ConeKnt) throw DomainError("space-time membership is defined for the cone only");
  if (p.x.size() != cfg_.d()) throw DomainError("point dimension does not match the domain");
  const double nd = static_cast<double>(cfg_.lifted_dim());
  return p.t > 0.0 && p.t <= time_ && p.x.squaredNorm() <= 2.0 * nd * p.t;
}

double log_sphere_area(int N) {
  if (N < 1) throw DomainError("sphere_area requires N >= 1");
  const double half = 0.5 * N;
  return std::log(2.0) + half * std::log(std::numbers::pi) - std::lgamma(half);
}

double sphere_area(int N) { return std::exp(log_sphere_area(N)); }

Vector lift_point(const LiftConfig& cfg, const Vector& y) {
  if (y.size() != cfg.lifted_dim()) {
    throw DomainError("point has " + std::to_string(y.size()) + " coordinates, expected " +
                      std::to_string(cfg.lifted_dim()));
  }
  Vector x = Vector::Zero(cfg.d());
  for (int i = 0; i < cfg.d(); ++i) {
    for (int j = 0; j < cfg.n(); ++j) x[i] += y[cfg.flat_index(i, j)];
  }
  return x;
}

Vector lift_point(const LiftConfig& cfg, const HighDimPoint& y) { return lift_point(cfg, y.coords()); }

LiftedPoint lift_point_time(const LiftConfig& cfg, const Vector& y) {
  Vector x = lift_point(cfg, y);
  const double t = y.squaredNorm() / (2.0 * cfg.d());
  return LiftedPoint{SpaceTimePoint{std::move(x), t}, t == 0.0};
}

LiftedPoint lift_point_time(const LiftConfig& cfg, const HighDimPoint& y) {
  return lift_point_time(cfg, y.coords());
}

LiftedDerivatives lifted_derivatives(const LiftConfig& cfg, const SpaceTimeField& u,
                                     const HighDimPoint& y) {
  if (u.dim() != cfg.d()) throw DomainError("field dimension does not match LiftConfig d");
  const LiftedPoint lp = lift_point_time(cfg, y);
  const Vector& x = lp.point.x;
  const double t = lp.point.t;
  if (!(t > 0.0)) throw DomainError("lifted derivatives need t > 0 (y = 0 is a boundary point)");

  const double d = cfg.d();
  const double n = cfg.n();
  const Vector grad = u.gradient(x, t);
  const double ut = u.dt(x, t);
  const double lap = u.laplacian(x, t);
  const Vector grad_ut = u.grad_dt(x, t);
  const double utt = u.dtt(x, t);

  LiftedDerivatives out;
  out.grad_v.resize(cfg.lifted_dim());
  for (int i = 0; i < cfg.d(); ++i) {
    for (int j = 0; j < cfg.n(); ++j) {
      const int k = cfg.flat_index(i, j);
      out.grad_v[k] = grad[i] + (y.coords()[k] / d) * ut;
    }
  }
  const double x_dot_grad = x.dot(grad);
  out.laplacian_v = n * (lap + ut) + (2.0 / d) * (x.dot(grad_ut) + t * utt);
  out.radial_v = x_dot_grad + 2.0 * t * ut;
  out.gradsq_v = n * grad.squaredNorm() + (2.0 / d) * (x_dot_grad + t * ut) * ut;
  return out;
}

}  // namespace dimlift
