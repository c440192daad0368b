#pragma once

#include <vector>

#include "dimlift/core_lift.hpp"
#include "dimlift/field_types.hpp"

namespace dimlift {

/// Largest central-difference discrepancies, each as |fd - exact| / max(1, |exact|).
struct SelfCheckReport {
  int points = 0;
  double gradient = 0.0;
  double hessian = 0.0;
  double laplacian = 0.0;
  double dt = 0.0;
  double grad_dt = 0.0;
  double dtt = 0.0;
  /// |Delta u + d_t u| for caloric fields.
  double residual = 0.0;
  /// | |v| - 1 | for sphere-valued maps.
  double unit_norm = 0.0;

  double worst_derivative() const;
};

SelfCheckReport self_check(const ScalarField& v, const std::vector<Vector>& points, double h = 1e-5);
SelfCheckReport self_check(const SpaceTimeField& u, const std::vector<SpaceTimePoint>& points,
                           double h = 1e-5);
SelfCheckReport self_check(const SphereField& v, const std::vector<Vector>& points, double h = 1e-5);
SelfCheckReport self_check(const GraphSurface& s, const std::vector<Vector>& points, double t = 0.0,
                           double h = 1e-5);

/// Chain-rule identities against finite differences of y -> u(F(y)).
struct LiftCheckReport {
  int points = 0;
  double grad_v = 0.0;
  double radial_v = 0.0;
  double gradsq_v = 0.0;
  double laplacian_v = 0.0;
};

/// `h` is the first-order step; the Laplacian uses `h_second`.
LiftCheckReport lift_check(const LiftConfig& cfg, const SpaceTimeField& u,
                           const std::vector<Vector>& ys, double h = 1e-5, double h_second = 1e-3);

}  // namespace dimlift
