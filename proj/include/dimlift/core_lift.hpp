#pragma once

#include "dimlift/field_types.hpp"
#include "dimlift/types.hpp"

namespace dimlift {

/// d parabolic space dimensions, each lifted to n elliptic coordinates.
class LiftConfig {
 public:
  LiftConfig(int d, int n);

  int d() const noexcept { return d_; }
  int n() const noexcept { return n_; }
  /// N = n * d.
  int lifted_dim() const noexcept { return n_ * d_; }

  /// Position of y_{i,j} (zero-based) in the flat coordinate vector.
  int flat_index(int i, int j) const noexcept { return i * n_ + j; }

 private:
  int d_;
  int n_;
};

/// Point of R^{n d} with coordinates y_{i,j}, i < d, j < n, stored row-major in i.
class HighDimPoint {
 public:
  HighDimPoint(const LiftConfig& cfg, Vector coords);

  const Vector& coords() const noexcept { return coords_; }
  double at(int i, int j) const { return coords_[cfg_.flat_index(i, j)]; }
  const LiftConfig& config() const noexcept { return cfg_; }

 private:
  LiftConfig cfg_;
  Vector coords_;
};

struct SpaceTimePoint {
  Vector x;
  double t;
};

struct LiftedPoint {
  SpaceTimePoint point;
  /// True when y = 0, which maps to t = 0 and must not be fed to weighted integrands.
  bool boundary;
};

enum class DomainKind { SphereStn, BallBnt, BallBtn, ConeKnt };

/// The four canonical sets. `time` is t for SphereStn and BallBnt, tau otherwise.
class DomainSpec {
 public:
  DomainSpec(DomainKind kind, const LiftConfig& cfg, double time);

  DomainKind kind() const noexcept { return kind_; }
  /// Radius of the sphere or ball; for ConeKnt the radius of the top slice.
  double radius() const;
  /// Dimension of the ambient space the set lives in.
  int ambient_dim() const;
  /// Membership of a point of the ambient space (SphereStn, BallBnt, BallBtn).
  bool contains(const Vector& p, double rel_tol = 1e-12) const;
  /// Membership of a space-time point (ConeKnt).
  bool contains(const SpaceTimePoint& p) const;

 private:
  DomainKind kind_;
  LiftConfig cfg_;
  double time_;
};

/// Surface measure of the unit sphere S^{N-1} in R^N.
double sphere_area(int N);
double log_sphere_area(int N);

/// x_i = sum_j y_{i,j}.
Vector lift_point(const LiftConfig& cfg, const HighDimPoint& y);
Vector lift_point(const LiftConfig& cfg, const Vector& y);

/// (x, |y|^2 / (2d)).
LiftedPoint lift_point_time(const LiftConfig& cfg, const HighDimPoint& y);
LiftedPoint lift_point_time(const LiftConfig& cfg, const Vector& y);

struct LiftedDerivatives {
  Vector grad_v;
  double laplacian_v;
  /// y . grad v
  double radial_v;
  /// |grad v|^2
  double gradsq_v;
};

/// Derivatives of v(y) = u(F(y)) expressed through derivatives of u at F(y).
LiftedDerivatives lifted_derivatives(const LiftConfig& cfg, const SpaceTimeField& u,
                                     const HighDimPoint& y);

}  // namespace dimlift
