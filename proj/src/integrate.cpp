#include "dimlift/integrate.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "dimlift/core_lift.hpp"
#include "dimlift/errors.hpp"

namespace dimlift {
namespace {

constexpr int kMaxDoublings = 3;

struct LevelResult {
  Vector values;
  Vector abs_values;
  long evaluations = 0;
};

// Evaluates `level` at increasing resolution until two successive levels agree
// channel by channel.
template <class LevelFn>
MultiEstimate converge(LevelFn&& level, double tol, double abs_tol, Method method,
                       const char* what) {
  LevelResult prev = level(0);
  long evaluations = prev.evaluations;
  for (int k = 1; k <= kMaxDoublings; ++k) {
    LevelResult cur = level(k);
    evaluations += cur.evaluations;
    Eigen::Index worst = -1;
    double worst_excess = 0.0;
    for (Eigen::Index c = 0; c < cur.values.size(); ++c) {
      const double scale = std::max(std::abs(cur.values[c]), cur.abs_values[c]);
      const double diff = std::abs(cur.values[c] - prev.values[c]);
      const double excess = diff - tol * scale - abs_tol;
      if (!(excess <= std::numeric_limits<double>::min()) && (worst < 0 || excess > worst_excess)) {
        worst = c;
        worst_excess = excess;
      }
    }
    if (worst < 0) return MultiEstimate{cur.values, method, evaluations};
    if (k == kMaxDoublings) {
      throw AccuracyError(std::string(what) + " did not converge under node doubling",
                          prev.values[worst], cur.values[worst]);
    }
    prev = std::move(cur);
  }
  throw AccuracyError(std::string(what) + " did not converge", 0.0, 0.0);
}

void accumulate(LevelResult& acc, const Vector& f, double w) {
  acc.values += w * f;
  acc.abs_values += std::abs(w) * f.cwiseAbs();
  ++acc.evaluations;
}

LevelResult empty_level(int channels) {
  return LevelResult{Vector::Zero(channels), Vector::Zero(channels), 0};
}

void check_channels(int channels) {
  if (channels < 1) throw DomainError("integrand needs at least one channel");
}

void check_output(const Vector& f, int channels) {
  if (f.size() != channels) throw DomainError("integrand returned the wrong number of channels");
}

// Radial rule for the weight in the variable s, with x = scale(t) * sqrt(s) * omega.
struct RadialRule {
  Rule1D rule;
  double scale_per_t;  // x-radius squared per unit s and unit t
};

RadialRule radial_rule(Weight w, int d, int q) {
  if (w.kind == Weight::Kind::Gaussian) {
    return {gauss_laguerre(q, 0.5 * d - 1.0).normalized(), 4.0};
  }
  if (w.n < 1) throw DomainError("finite weight requires n >= 1");
  const int N = w.n * d;
  const double a = 0.5 * (N - d - 2.0);
  if (N == d) return {Rule1D{{1.0}, {1.0}}, 2.0 * N};
  return {gauss_jacobi01(q, a, 0.5 * d - 1.0).normalized(), 2.0 * N};
}

int scaled(int base, int level) { return base << level; }

}  // namespace

std::string Weight::name() const {
  return kind == Kind::Gaussian ? "gaussian" : "finite(" + std::to_string(n) + ")";
}

void QuadratureSpec::validate() const {
  if (radial_nodes < 2 || angular_nodes < 2 || time_nodes < 2) {
    throw DomainError("quadrature node counts must be at least 2");
  }
  if (!(target_rel_tol > 0.0) || target_rel_tol > 1e-2) {
    throw DomainError("target_rel_tol must lie in (0, 1e-2]");
  }
  if (!(abs_tol >= 0.0)) throw DomainError("abs_tol must be non-negative");
}

bool is_deterministic(Method m) {
  return m != Method::MonteCarloSphere && m != Method::MonteCarloBall;
}

std::string method_name(Method m) {
  switch (m) {
    case Method::GaussRadialProduct:
      return "gauss-radial-product";
    case Method::GaussSpaceTime:
      return "gauss-space-time";
    case Method::GaussBall:
      return "gauss-ball";
    case Method::MonteCarloSphere:
      return "monte-carlo-sphere";
    case Method::MonteCarloBall:
      return "monte-carlo-ball";
  }
  return "unknown";
}

MultiEstimate integrate_weighted_multi(const MultiSpatialFn& phi, int channels, Weight w, int d,
                                       double t, const QuadratureSpec& spec) {
  spec.validate();
  check_channels(channels);
  if (d < 1) throw DomainError("integration needs d >= 1");
  if (!(t > 0.0)) throw DomainError("weighted integral needs t > 0");
  auto level = [&](int k) {
    const RadialRule rr = radial_rule(w, d, scaled(spec.radial_nodes, k));
    const SphereRule sr = sphere_rule(d, spec.angular_rule, scaled(spec.angular_nodes, k));
    LevelResult acc = empty_level(channels);
    const double r2 = rr.scale_per_t * t;
    for (std::size_t i = 0; i < rr.rule.nodes.size(); ++i) {
      const double rho = std::sqrt(r2 * rr.rule.nodes[i]);
      for (std::size_t j = 0; j < sr.nodes.size(); ++j) {
        const Vector f = phi(rho * sr.nodes[j]);
        check_output(f, channels);
        accumulate(acc, f, rr.rule.weights[i] * sr.weights[j]);
      }
    }
    return acc;
  };
  return converge(level, spec.target_rel_tol, spec.abs_tol, Method::GaussRadialProduct, "weighted integral");
}

IntegralEstimate integrate_weighted(const SpatialFn& phi, Weight w, int d, double t,
                                    const QuadratureSpec& spec) {
  const MultiEstimate m = integrate_weighted_multi(
      [&](const Vector& x) { return Vector::Constant(1, phi(x)); }, 1, w, d, t, spec);
  return IntegralEstimate{m.values[0], 0.0, m.method, m.evaluations};
}

MultiEstimate integrate_spacetime_multi(const MultiSpaceTimeFn& phi, int channels, Weight w, int d,
                                        double tau, const QuadratureSpec& spec, double time_power) {
  spec.validate();
  check_channels(channels);
  if (d < 1) throw DomainError("integration needs d >= 1");
  if (!(tau > 0.0)) throw DomainError("space-time integral needs tau > 0");
  if (!(time_power >= 0.0)) throw DomainError("time power must be non-negative");
  auto level = [&](int k) {
    const RadialRule rr = radial_rule(w, d, scaled(spec.radial_nodes, k));
    const SphereRule sr = sphere_rule(d, spec.angular_rule, scaled(spec.angular_nodes, k));
    const Rule1D tr = gauss_jacobi01(scaled(spec.time_nodes, k), 0.0, time_power);
    LevelResult acc = empty_level(channels);
    for (std::size_t m = 0; m < tr.nodes.size(); ++m) {
      const double t = tau * tr.nodes[m];
      const double wt = tau * tr.weights[m];
      const double r2 = rr.scale_per_t * t;
      for (std::size_t i = 0; i < rr.rule.nodes.size(); ++i) {
        const double rho = std::sqrt(r2 * rr.rule.nodes[i]);
        for (std::size_t j = 0; j < sr.nodes.size(); ++j) {
          const Vector f = phi(rho * sr.nodes[j], t);
          check_output(f, channels);
          accumulate(acc, f, wt * rr.rule.weights[i] * sr.weights[j]);
        }
      }
    }
    return acc;
  };
  return converge(level, spec.target_rel_tol, spec.abs_tol, Method::GaussSpaceTime, "space-time integral");
}

IntegralEstimate integrate_spacetime(const SpaceTimeFn& phi, Weight w, int d, double tau,
                                     const QuadratureSpec& spec) {
  const MultiEstimate m = integrate_spacetime_multi(
      [&](const Vector& x, double t) { return Vector::Constant(1, phi(x, t)); }, 1, w, d, tau,
      spec);
  return IntegralEstimate{m.values[0], 0.0, m.method, m.evaluations};
}

namespace {

MultiEstimate shell_integral(const MultiSpatialFn& f, int channels, int N, const Vector& center,
                             double r_in, double r_out, const QuadratureSpec& spec) {
  spec.validate();
  check_channels(channels);
  if (N < 1) throw DomainError("integration needs N >= 1");
  if (center.size() != N) throw DomainError("center dimension does not match N");
  if (!(r_in >= 0.0) || !(r_out > r_in)) throw DomainError("shell radii must satisfy 0 <= r_in < r_out");
  const double area = sphere_area(N);
  auto level = [&](int k) {
    const Rule1D rr = gauss_legendre(scaled(spec.radial_nodes, k), r_in, r_out);
    const SphereRule sr = sphere_rule(N, spec.angular_rule, scaled(spec.angular_nodes, k));
    LevelResult acc = empty_level(channels);
    for (std::size_t i = 0; i < rr.nodes.size(); ++i) {
      const double rho = rr.nodes[i];
      const double wr = area * rr.weights[i] * std::pow(rho, N - 1);
      for (std::size_t j = 0; j < sr.nodes.size(); ++j) {
        const Vector v = f(center + rho * sr.nodes[j]);
        check_output(v, channels);
        accumulate(acc, v, wr * sr.weights[j]);
      }
    }
    return acc;
  };
  return converge(level, spec.target_rel_tol, spec.abs_tol, Method::GaussBall, "ball integral");
}

}  // namespace

MultiEstimate integrate_ball_multi(const MultiSpatialFn& f, int channels, int N,
                                   const Vector& center, double r, const QuadratureSpec& spec) {
  if (!(r > 0.0)) throw DomainError("ball radius must be positive");
  return shell_integral(f, channels, N, center, 0.0, r, spec);
}

MultiEstimate integrate_shell_multi(const MultiSpatialFn& f, int channels, int N, double r_in,
                                    double r_out, const QuadratureSpec& spec) {
  return shell_integral(f, channels, N, Vector::Zero(N), r_in, r_out, spec);
}

MultiEstimate integrate_sphere_multi(const MultiSpatialFn& f, int channels, int N,
                                     const Vector& center, double r, const QuadratureSpec& spec) {
  spec.validate();
  check_channels(channels);
  if (N < 1) throw DomainError("integration needs N >= 1");
  if (center.size() != N) throw DomainError("center dimension does not match N");
  if (!(r > 0.0)) throw DomainError("sphere radius must be positive");
  const double measure = sphere_area(N) * std::pow(r, N - 1);
  auto level = [&](int k) {
    const SphereRule sr = sphere_rule(N, spec.angular_rule, scaled(spec.angular_nodes, k));
    LevelResult acc = empty_level(channels);
    for (std::size_t j = 0; j < sr.nodes.size(); ++j) {
      const Vector v = f(center + r * sr.nodes[j]);
      check_output(v, channels);
      accumulate(acc, v, measure * sr.weights[j]);
    }
    return acc;
  };
  return converge(level, spec.target_rel_tol, spec.abs_tol, Method::GaussBall, "sphere integral");
}

MultiEstimate integrate_window_multi(const MultiSpaceTimeFn& f, int channels, int d,
                                     const SpaceTimeWindow& window, const QuadratureSpec& spec) {
  spec.validate();
  check_channels(channels);
  if (d < 1) throw DomainError("integration needs d >= 1");
  if (!(window.r_in >= 0.0) || !(window.r_out > window.r_in) || !(window.t_out > window.t_in)) {
    throw DomainError("degenerate space-time window");
  }
  const double area = sphere_area(d);
  auto level = [&](int k) {
    const Rule1D rr = gauss_legendre(scaled(spec.radial_nodes, k), window.r_in, window.r_out);
    const Rule1D tr = gauss_legendre(scaled(spec.time_nodes, k), window.t_in, window.t_out);
    const SphereRule sr = sphere_rule(d, spec.angular_rule, scaled(spec.angular_nodes, k));
    LevelResult acc = empty_level(channels);
    for (std::size_t m = 0; m < tr.nodes.size(); ++m) {
      for (std::size_t i = 0; i < rr.nodes.size(); ++i) {
        const double rho = rr.nodes[i];
        const double w = area * tr.weights[m] * rr.weights[i] * std::pow(rho, d - 1);
        for (std::size_t j = 0; j < sr.nodes.size(); ++j) {
          const Vector v = f(rho * sr.nodes[j], tr.nodes[m]);
          check_output(v, channels);
          accumulate(acc, v, w * sr.weights[j]);
        }
      }
    }
    return acc;
  };
  return converge(level, spec.target_rel_tol, spec.abs_tol, Method::GaussSpaceTime, "window integral");
}

MultiEstimate integrate_directions_multi(const MultiSpatialFn& g, int channels, int N,
                                         const QuadratureSpec& spec) {
  spec.validate();
  check_channels(channels);
  if (N < 1) throw DomainError("integration needs N >= 1");
  const double area = sphere_area(N);
  auto level = [&](int k) {
    const SphereRule sr = sphere_rule(N, spec.angular_rule, scaled(spec.angular_nodes, k));
    LevelResult acc = empty_level(channels);
    for (std::size_t j = 0; j < sr.nodes.size(); ++j) {
      const Vector v = g(sr.nodes[j]);
      check_output(v, channels);
      accumulate(acc, v, area * sr.weights[j]);
    }
    return acc;
  };
  return converge(level, spec.target_rel_tol, spec.abs_tol, Method::GaussBall, "direction integral");
}

MultiEstimate integrate_star_multi(const MultiSpatialFn& f, int channels, int N,
                                   const Vector& center,
                                   const std::function<double(const Vector&)>& rho, double a,
                                   const QuadratureSpec& spec) {
  spec.validate();
  check_channels(channels);
  if (N < 1) throw DomainError("integration needs N >= 1");
  if (center.size() != N) throw DomainError("center dimension does not match N");
  if (!(a >= 0.0)) throw DomainError("boundary exponent must be non-negative");
  const double area = sphere_area(N);
  auto level = [&](int k) {
    const Rule1D rr = gauss_jacobi01(scaled(spec.radial_nodes, k), a, N - 1.0);
    const SphereRule sr = sphere_rule(N, spec.angular_rule, scaled(spec.angular_nodes, k));
    LevelResult acc = empty_level(channels);
    for (std::size_t j = 0; j < sr.nodes.size(); ++j) {
      const Vector& w = sr.nodes[j];
      const double R = rho(w);
      if (!(R >= 0.0) || !std::isfinite(R)) throw DomainError("star radius must be finite and non-negative");
      if (R == 0.0) continue;
      const double wj = area * sr.weights[j] * std::pow(R, N);
      for (std::size_t i = 0; i < rr.nodes.size(); ++i) {
        const Vector v = f(center + (R * rr.nodes[i]) * w);
        check_output(v, channels);
        accumulate(acc, v, wj * rr.weights[i]);
      }
    }
    return acc;
  };
  return converge(level, spec.target_rel_tol, spec.abs_tol, Method::GaussBall, "star-region integral");
}

}  // namespace dimlift
