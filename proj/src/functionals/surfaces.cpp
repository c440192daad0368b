#include "dimlift/functionals/surfaces.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "dimlift/errors.hpp"
#include "dimlift/weights.hpp"

namespace dimlift {
namespace {

void check_point(const GraphSurface& s, const Vector& w0) {
  if (w0.size() != s.dim() + 1) throw DomainError("w0 must lie in R^{N+1}");
}

// Largest s in [0, r] with |s w|^2 + (v(y0 + s w) - v0)^2 <= r^2, by bisection.
// The region is assumed star-shaped about y0, so the sign changes once.
double slice_radius(const GraphSurface& s, const Vector& y0, double v0, double r, double t,
                    const Vector& w) {
  auto g = [&](double rho) {
    const double dv = s.value(y0 + rho * w, t) - v0;
    return rho * rho + dv * dv - r * r;
  };
  double lo = 0.0, hi = r;
  if (g(hi) <= 0.0) return hi;
  for (int k = 0; k < 200 && hi - lo > 4.0 * std::numeric_limits<double>::epsilon() * r; ++k) {
    const double mid = 0.5 * (lo + hi);
    (g(mid) <= 0.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

double ball_volume(int N, double r) { return sphere_area(N) / N * std::pow(r, N); }

struct Slice {
  Vector y0;
  double v0;
};

Slice split_point(const GraphSurface& s, const Vector& w0, double r, double t) {
  check_point(s, w0);
  if (!(r > 0.0)) throw DomainError("density needs r > 0");
  const int N = s.dim();
  Slice out{w0.head(N), w0[N]};
  if (std::abs(s.value(out.y0, t) - out.v0) >= r) {
    throw DomainError("the ball misses the graph above its center; projected region is not "
                      "star-shaped about y0");
  }
  return out;
}

}  // namespace

Vector graph_normal(const GraphSurface& s, const Vector& y, double t) {
  const Vector g = s.gradient(y, t);
  Vector nu(g.size() + 1);
  nu.head(g.size()) = -g;
  nu[g.size()] = 1.0;
  return nu / std::sqrt(1.0 + g.squaredNorm());
}

double graph_mean_curvature(const GraphSurface& s, const Vector& y, double t) {
  const Vector g = s.gradient(y, t);
  const Matrix Hs = s.hessian(y, t);
  const double q = 1.0 + g.squaredNorm();
  return Hs.trace() / std::sqrt(q) - g.dot(Hs * g) / std::pow(q, 1.5);
}

double ms_density(const GraphSurface& s, const Vector& w0, double r, const QuadratureSpec& spec) {
  const Slice c = split_point(s, w0, r, 0.0);
  const int N = s.dim();
  const double area =
      integrate_star_multi(
          [&](const Vector& y) {
            return Vector::Constant(1, std::sqrt(1.0 + s.gradient(y).squaredNorm()));
          },
          1, N, c.y0, [&](const Vector& w) { return slice_radius(s, c.y0, c.v0, r, 0.0, w); }, 0.0,
          spec)
          .values[0];
  return area / ball_volume(N, r);
}

DensityTilde ms_density_tilde(const GraphSurface& s, const NonhomTerm& h, const Vector& w0,
                              double r, const QuadratureSpec& spec) {
  const Slice c = split_point(s, w0, r, 0.0);
  const int N = s.dim();
  auto rel = [&](const Vector& y) {
    Vector W(N + 1);
    W.head(N) = y - c.y0;
    W[N] = s.value(y) - c.v0;
    return W;
  };
  auto radius = [&](const Vector& w) { return slice_radius(s, c.y0, c.v0, r, 0.0, w); };
  const double volume =
      integrate_star_multi(
          [&](const Vector& y) {
            const double jac = std::sqrt(1.0 + s.gradient(y).squaredNorm());
            return Vector::Constant(1, (1.0 + h(y) * rel(y).dot(graph_normal(s, y)) / N) * jac);
          },
          1, N, c.y0, radius, 0.0, spec)
          .values[0];

  // Boundary of the projected region, parametrised by direction:
  // y = y0 + rho(w) w with dA = rho^{N-1} / (n.w) dw, lifted to the graph by
  // sqrt(1 + |tangential grad v|^2).
  const double boundary =
      integrate_directions_multi(
          [&](const Vector& w) {
            const double rho = radius(w);
            const Vector y = c.y0 + rho * w;
            const Vector grad = s.gradient(y);
            const Vector W = rel(y);
            Vector n = W.head(N) + W[N] * grad;
            n.normalize();
            const double cos_angle = n.dot(w);
            if (!(cos_angle > 0.0)) throw DomainError("projected region is not star-shaped");
            const Vector tangential = grad - grad.dot(n) * n;
            const double dS =
                std::pow(rho, N - 1) / cos_angle * std::sqrt(1.0 + tangential.squaredNorm());
            const Vector nu = graph_normal(s, y);
            const double normal_part = W.dot(nu);
            const double tangent_sq = W.squaredNorm() - normal_part * normal_part;
            if (!(tangent_sq > 0.0)) {
              throw AccuracyError("|(w - w0)^T| vanishes on the boundary slice", 0.0, 0.0);
            }
            const double tangent = std::sqrt(tangent_sq);
            const double integrand = normal_part * normal_part / tangent +
                                     h(y) * normal_part * W.squaredNorm() / (N * tangent);
            return Vector::Constant(1, integrand * dS);
          },
          1, N, spec)
          .values[0];
  DensityTilde out;
  out.theta_tilde = volume / ball_volume(N, r);
  out.derivative_rhs = N / (sphere_area(N) * std::pow(r, N + 1)) * boundary;
  return out;
}

double huisken_density(const GraphSurface& u, double t, const QuadratureSpec& spec) {
  if (!(t > 0.0)) throw DomainError("huisken_density needs t > 0");
  const int d = u.dim();
  const double integral =
      integrate_weighted(
          [&](const Vector& x) {
            const double val = u.value(x, t);
            return std::exp(-val * val / (4.0 * t)) *
                   std::sqrt(1.0 + u.gradient(x, t).squaredNorm());
          },
          Weight::gaussian(), d, t, spec)
          .value;
  return std::pow(4.0 * std::numbers::pi, 0.5 * d) * integral;
}

double mcf_residual(const GraphSurface& u, const Vector& x, double t) {
  const Vector g = u.gradient(x, t);
  const Matrix H = u.hessian(x, t);
  return u.dt(x, t) + H.trace() - g.dot(H * g) / (1.0 + g.squaredNorm());
}

double lifted_mcf_density(const GraphSurface& u, const LiftConfig& cfg, double t,
                          const QuadratureSpec& spec) {
  if (!(t > 0.0)) throw DomainError("lifted_mcf_density needs t > 0");
  const int d = u.dim();
  if (d != cfg.d()) throw DomainError("graph dimension does not match d");
  const double log_pre = log_finite_weight_prefactor(d, cfg.n(), t);
  const double R2 = 2.0 * cfg.lifted_dim() * t;
  const double R = std::sqrt(R2);
  const double a = 0.5 * (cfg.lifted_dim() - d - 2.0);
  const Vector origin = Vector::Zero(d);
  const double u0 = u.value(origin, t);
  if (u0 * u0 >= R2) return 0.0;
  auto radius = [&](const Vector& w) {
    auto g = [&](double rho) {
      const double val = u.value(rho * w, t);
      return rho * rho + val * val - R2;
    };
    double lo = 0.0, hi = R;
    if (g(hi) <= 0.0) return hi;
    for (int k = 0; k < 200 && hi - lo > 4.0 * std::numeric_limits<double>::epsilon() * R; ++k) {
      const double mid = 0.5 * (lo + hi);
      (g(mid) <= 0.0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
  };
  // The weight (1 - (|x|^2 + u^2)/R^2)^a vanishes at the slice boundary like
  // (1 - s/rho)^a; that factor goes into the radial rule and the smooth
  // remainder is integrated.
  const double integral =
      integrate_star_multi(
          [&](const Vector& x) {
            const double rho_x = x.norm();
            double remainder = 1.0;
            if (a != 0.0 && rho_x > 0.0) {
              const Vector w = x / rho_x;
              const double edge = radius(w);
              const double val = u.value(x, t);
              const double gap = 1.0 - (rho_x * rho_x + val * val) / R2;
              remainder = std::pow(std::max(gap, 0.0) / (1.0 - rho_x / edge), a);
            } else if (a != 0.0) {
              remainder = std::pow(1.0 - u0 * u0 / R2, a);
            }
            return Vector::Constant(
                1, std::exp(log_pre) * remainder * std::sqrt(1.0 + u.gradient(x, t).squaredNorm()));
          },
          1, d, origin, radius, a, spec)
          .values[0];
  return std::pow(4.0 * std::numbers::pi, 0.5 * d) * integral;
}

}  // namespace dimlift
