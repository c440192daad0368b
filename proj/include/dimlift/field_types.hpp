#pragma once

#include <functional>
#include <optional>
#include <string>

#include "dimlift/types.hpp"

namespace dimlift {

enum class Smoothness { Smooth, LipschitzAe };

/// Annulus {r_in < |y| < r_out} containing the support of a compactly supported field.
struct Annulus {
  double r_in;
  double r_out;
};

/// Space-time window {r_in < |x| < r_out} x (t_in, t_out) containing a field's support.
struct SpaceTimeWindow {
  double r_in;
  double r_out;
  double t_in;
  double t_out;
};

/// Elliptic scalar function v on R^N.
class ScalarField {
 public:
  virtual ~ScalarField() = default;

  virtual int dim() const = 0;
  virtual double value(const Vector& y) const = 0;
  virtual Vector gradient(const Vector& y) const = 0;
  virtual Matrix hessian(const Vector& y) const = 0;
  virtual double laplacian(const Vector& y) const { return hessian(y).trace(); }

  virtual Smoothness smoothness() const { return Smoothness::Smooth; }
  /// Homogeneity degree when v is homogeneous.
  virtual std::optional<int> degree() const { return std::nullopt; }
  /// Annulus containing the support, when the support is compact and avoids the origin.
  virtual std::optional<Annulus> support() const { return std::nullopt; }
  virtual std::string name() const = 0;
};

/// Parabolic scalar function u on R^d x (0, T). Caloric means Delta u + d_t u = 0.
class SpaceTimeField {
 public:
  virtual ~SpaceTimeField() = default;

  virtual int dim() const = 0;
  virtual double value(const Vector& x, double t) const = 0;
  virtual Vector gradient(const Vector& x, double t) const = 0;
  virtual Matrix hessian(const Vector& x, double t) const = 0;
  virtual double dt(const Vector& x, double t) const = 0;
  virtual Vector grad_dt(const Vector& x, double t) const = 0;
  virtual double dtt(const Vector& x, double t) const = 0;
  virtual double laplacian(const Vector& x, double t) const { return hessian(x, t).trace(); }

  virtual bool caloric() const { return false; }
  virtual Smoothness smoothness() const { return Smoothness::Smooth; }
  virtual std::optional<SpaceTimeWindow> support() const { return std::nullopt; }
  virtual std::string name() const = 0;
};

/// Map v from R^N into the unit sphere of R^m. Time-independent; the parabolic
/// functionals evaluate it as u(x) with d_t u = 0.
class SphereField {
 public:
  virtual ~SphereField() = default;

  virtual int dim() const = 0;
  virtual int target_dim() const = 0;
  virtual Vector value(const Vector& y) const = 0;
  /// m x N matrix of partial derivatives.
  virtual Matrix jacobian(const Vector& y) const = 0;
  /// Componentwise Laplacian, an m-vector.
  virtual Vector laplacian(const Vector& y) const = 0;
  virtual double energy_density(const Vector& y) const { return jacobian(y).squaredNorm(); }
  virtual std::string name() const = 0;
};

/// Graph {(y, v(y, t))} over R^N, optionally moving in time.
class GraphSurface {
 public:
  virtual ~GraphSurface() = default;

  virtual int dim() const = 0;
  virtual double value(const Vector& y, double t = 0.0) const = 0;
  virtual Vector gradient(const Vector& y, double t = 0.0) const = 0;
  virtual Matrix hessian(const Vector& y, double t = 0.0) const = 0;
  virtual double dt(const Vector& y, double t = 0.0) const = 0;
  virtual std::string name() const = 0;
};

/// Scalar inhomogeneity h(y).
struct NonhomTerm {
  std::function<double(const Vector&)> eval;
  std::string name;

  double operator()(const Vector& y) const { return eval(y); }
  static NonhomTerm zero();
  static NonhomTerm constant(double c);
};

/// Vector inhomogeneity H(y) in R^m.
struct VectorNonhomTerm {
  std::function<Vector(const Vector&)> eval;
  std::string name;

  Vector operator()(const Vector& y) const { return eval(y); }
  static VectorNonhomTerm zero(int m);
};

}  // namespace dimlift
