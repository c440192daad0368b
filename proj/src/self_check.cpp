#include "dimlift/self_check.hpp"

#include <algorithm>
#include <cmath>
#include <type_traits>

namespace dimlift {
namespace {

double rel(double fd, double exact) { return std::abs(fd - exact) / std::max(1.0, std::abs(exact)); }

double rel(const Vector& fd, const Vector& exact) {
  double worst = 0.0;
  for (Eigen::Index k = 0; k < fd.size(); ++k) worst = std::max(worst, rel(fd[k], exact[k]));
  return worst;
}

double rel(const Matrix& fd, const Matrix& exact) {
  return rel(Eigen::Map<const Vector>(fd.data(), fd.size()).eval(),
             Eigen::Map<const Vector>(exact.data(), exact.size()).eval());
}

template <class F>
auto central(const F& f, const Vector& y, int k, double h) {
  Vector yp = y, ym = y;
  yp[k] += h;
  ym[k] -= h;
  using R = std::decay_t<decltype(f(y))>;
  const R a = f(yp), b = f(ym);
  return R((a - b) / (2.0 * h));
}

void raise(double& slot, double value) { slot = std::max(slot, value); }

}  // namespace

double SelfCheckReport::worst_derivative() const {
  return std::max({gradient, hessian, laplacian, dt, grad_dt, dtt});
}

SelfCheckReport self_check(const ScalarField& v, const std::vector<Vector>& points, double h) {
  SelfCheckReport r;
  const int N = v.dim();
  for (const Vector& y : points) {
    Vector g(N);
    Matrix H(N, N);
    for (int k = 0; k < N; ++k) {
      g[k] = central([&](const Vector& z) { return v.value(z); }, y, k, h);
      H.col(k) = central([&](const Vector& z) { return v.gradient(z); }, y, k, h);
    }
    const Matrix exact_H = v.hessian(y);
    raise(r.gradient, rel(g, v.gradient(y)));
    raise(r.hessian, rel(H, exact_H));
    raise(r.laplacian, rel(exact_H.trace(), v.laplacian(y)));
    ++r.points;
  }
  return r;
}

SelfCheckReport self_check(const SpaceTimeField& u, const std::vector<SpaceTimePoint>& points,
                           double h) {
  SelfCheckReport r;
  const int d = u.dim();
  for (const SpaceTimePoint& p : points) {
    const Vector& x = p.x;
    const double t = p.t;
    Vector g(d), gdt(d);
    Matrix H(d, d);
    for (int k = 0; k < d; ++k) {
      g[k] = central([&](const Vector& z) { return u.value(z, t); }, x, k, h);
      H.col(k) = central([&](const Vector& z) { return u.gradient(z, t); }, x, k, h);
      gdt[k] = central([&](const Vector& z) { return u.dt(z, t); }, x, k, h);
    }
    const double dt = (u.value(x, t + h) - u.value(x, t - h)) / (2.0 * h);
    const double dtt = (u.dt(x, t + h) - u.dt(x, t - h)) / (2.0 * h);
    const Matrix exact_H = u.hessian(x, t);
    const double lap = u.laplacian(x, t);
    raise(r.gradient, rel(g, u.gradient(x, t)));
    raise(r.hessian, rel(H, exact_H));
    raise(r.laplacian, rel(exact_H.trace(), lap));
    raise(r.dt, rel(dt, u.dt(x, t)));
    raise(r.grad_dt, rel(gdt, u.grad_dt(x, t)));
    raise(r.dtt, rel(dtt, u.dtt(x, t)));
    if (u.caloric()) raise(r.residual, std::abs(lap + u.dt(x, t)));
    ++r.points;
  }
  return r;
}

SelfCheckReport self_check(const SphereField& v, const std::vector<Vector>& points, double h) {
  SelfCheckReport r;
  const int N = v.dim();
  const int m = v.target_dim();
  for (const Vector& y : points) {
    Matrix J(m, N);
    Vector lap = Vector::Zero(m);
    for (int k = 0; k < N; ++k) {
      J.col(k) = central([&](const Vector& z) { return v.value(z); }, y, k, h);
      lap += central([&](const Vector& z) { return Vector(v.jacobian(z).col(k)); }, y, k, h);
    }
    const Matrix exact_J = v.jacobian(y);
    raise(r.gradient, rel(J, exact_J));
    raise(r.laplacian, rel(lap, v.laplacian(y)));
    raise(r.hessian, rel(exact_J.squaredNorm(), v.energy_density(y)));
    raise(r.unit_norm, std::abs(v.value(y).norm() - 1.0));
    ++r.points;
  }
  return r;
}

SelfCheckReport self_check(const GraphSurface& s, const std::vector<Vector>& points, double t,
                           double h) {
  SelfCheckReport r;
  const int N = s.dim();
  for (const Vector& y : points) {
    Vector g(N);
    Matrix H(N, N);
    for (int k = 0; k < N; ++k) {
      g[k] = central([&](const Vector& z) { return s.value(z, t); }, y, k, h);
      H.col(k) = central([&](const Vector& z) { return s.gradient(z, t); }, y, k, h);
    }
    const double dt = (s.value(y, t + h) - s.value(y, t - h)) / (2.0 * h);
    raise(r.gradient, rel(g, s.gradient(y, t)));
    raise(r.hessian, rel(H, s.hessian(y, t)));
    raise(r.dt, rel(dt, s.dt(y, t)));
    ++r.points;
  }
  return r;
}

LiftCheckReport lift_check(const LiftConfig& cfg, const SpaceTimeField& u,
                           const std::vector<Vector>& ys, double h, double h_second) {
  LiftCheckReport r;
  const int N = cfg.lifted_dim();
  auto v = [&](const Vector& y) {
    const LiftedPoint p = lift_point_time(cfg, y);
    return u.value(p.point.x, p.point.t);
  };
  for (const Vector& y : ys) {
    const LiftedDerivatives exact = lifted_derivatives(cfg, u, HighDimPoint(cfg, y));
    Vector g(N);
    double lap = 0.0;
    const double v0 = v(y);
    for (int k = 0; k < N; ++k) {
      g[k] = central(v, y, k, h);
      Vector yp = y, ym = y;
      yp[k] += h_second;
      ym[k] -= h_second;
      lap += (v(yp) - 2.0 * v0 + v(ym)) / (h_second * h_second);
    }
    raise(r.grad_v, rel(g, exact.grad_v));
    raise(r.radial_v, rel(y.dot(g), exact.radial_v));
    raise(r.gradsq_v, rel(g.squaredNorm(), exact.gradsq_v));
    raise(r.laplacian_v, rel(lap, exact.laplacian_v));
    ++r.points;
  }
  return r;
}

}  // namespace dimlift
