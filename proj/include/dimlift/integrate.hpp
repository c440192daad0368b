#pragma once

#include <cstdint>
#include <functional>
#include <string>

#include "dimlift/field_types.hpp"
#include "dimlift/quadrature.hpp"
#include "dimlift/types.hpp"

namespace dimlift {

/// Weight against which spatial integrals are taken: the heat kernel G_t or
/// the push-forward density of the uniform measure on S_t^n. The finite weight
/// is handled for every n >= 1, including the singular cases n d <= d + 1
/// (n = 1 is the sphere measure itself).
struct Weight {
  enum class Kind { Gaussian, Finite };
  Kind kind = Kind::Gaussian;
  int n = 0;

  static Weight gaussian() { return {Kind::Gaussian, 0}; }
  static Weight finite(int n) { return {Kind::Finite, n}; }
  std::string name() const;
};

struct QuadratureSpec {
  int radial_nodes = 40;
  AngularRule angular_rule = AngularRule::ProductGauss;
  /// Polar resolution handed to sphere_rule.
  int angular_nodes = 8;
  int time_nodes = 24;
  double target_rel_tol = 1e-11;
  /// Changes below this are accepted as converged; for integrals whose exact
  /// value is zero and whose integrand is pure roundoff.
  double abs_tol = 0.0;

  void validate() const;
};

enum class Method {
  GaussRadialProduct,
  GaussSpaceTime,
  GaussBall,
  MonteCarloSphere,
  MonteCarloBall,
};

bool is_deterministic(Method m);
std::string method_name(Method m);

struct IntegralEstimate {
  double value = 0.0;
  double std_error = 0.0;
  Method method = Method::GaussRadialProduct;
  long evaluations = 0;
};

/// Several integrals computed on a shared set of nodes.
struct MultiEstimate {
  Vector values;
  Method method = Method::GaussRadialProduct;
  long evaluations = 0;
};

using MultiSpatialFn = std::function<Vector(const Vector&)>;
using MultiSpaceTimeFn = std::function<Vector(const Vector&, double)>;

/// int phi(x) w(x, t) dx over R^d. Node counts double until successive values
/// agree to target_rel_tol; after three doublings an AccuracyError is thrown.
IntegralEstimate integrate_weighted(const SpatialFn& phi, Weight w, int d, double t,
                                    const QuadratureSpec& spec = {});
MultiEstimate integrate_weighted_multi(const MultiSpatialFn& phi, int channels, Weight w, int d,
                                       double t, const QuadratureSpec& spec = {});

/// int_0^tau (t / tau)^time_power int phi(x, t) w(x, t) dx dt.
IntegralEstimate integrate_spacetime(const SpaceTimeFn& phi, Weight w, int d, double tau,
                                     const QuadratureSpec& spec = {});
MultiEstimate integrate_spacetime_multi(const MultiSpaceTimeFn& phi, int channels, Weight w, int d,
                                        double tau, const QuadratureSpec& spec = {},
                                        double time_power = 0.0);

/// int over the ball B_r(center) in R^N, and over the sphere dB_r(center) with surface measure.
MultiEstimate integrate_ball_multi(const MultiSpatialFn& f, int channels, int N,
                                   const Vector& center, double r, const QuadratureSpec& spec = {});
MultiEstimate integrate_sphere_multi(const MultiSpatialFn& f, int channels, int N,
                                     const Vector& center, double r,
                                     const QuadratureSpec& spec = {});
/// int over {r_in < |y| < r_out}.
MultiEstimate integrate_shell_multi(const MultiSpatialFn& f, int channels, int N, double r_in,
                                    double r_out, const QuadratureSpec& spec = {});
/// int over {r_in < |x| < r_out} x (t_in, t_out), unweighted.
MultiEstimate integrate_window_multi(const MultiSpaceTimeFn& f, int channels, int d,
                                     const SpaceTimeWindow& window,
                                     const QuadratureSpec& spec = {});

/// int over S^{N-1} of g(w) with the surface measure (total mass |S^{N-1}|).
MultiEstimate integrate_directions_multi(const MultiSpatialFn& g, int channels, int N,
                                         const QuadratureSpec& spec = {});

/// int of f(y) (1 - s / rho(w))^a dy over the star-shaped region
/// {center + s w : |w| = 1, 0 <= s < rho(w)}. A boundary factor a > 0 is taken
/// into the Gauss-Jacobi weight, so f only has to be smooth up to the boundary.
MultiEstimate integrate_star_multi(const MultiSpatialFn& f, int channels, int N,
                                   const Vector& center,
                                   const std::function<double(const Vector&)>& rho, double a,
                                   const QuadratureSpec& spec = {});

}  // namespace dimlift
