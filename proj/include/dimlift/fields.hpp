#pragma once

#include <istream>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "dimlift/field_types.hpp"
#include "dimlift/types.hpp"

namespace dimlift {

using ScalarFieldPtr = std::shared_ptr<const ScalarField>;
using SpaceTimeFieldPtr = std::shared_ptr<const SpaceTimeField>;
using SphereFieldPtr = std::shared_ptr<const SphereField>;
using GraphSurfacePtr = std::shared_ptr<const GraphSurface>;

// ---- elliptic scalar fields -------------------------------------------------

/// v = c + a.y + y^T A y / 2 with A symmetric.
class QuadraticField final : public ScalarField {
 public:
  QuadraticField(double c, Vector a, Matrix A, std::string name,
                 std::optional<int> degree = std::nullopt);

  int dim() const override { return static_cast<int>(a_.size()); }
  double value(const Vector& y) const override;
  Vector gradient(const Vector& y) const override;
  Matrix hessian(const Vector& y) const override;
  std::optional<int> degree() const override { return degree_; }
  std::string name() const override { return name_; }

 private:
  double c_;
  Vector a_;
  Matrix A_;
  std::string name_;
  std::optional<int> degree_;
};

enum class HarmonicKind { X1, X1X2, ReZk };

/// y1, y1 y2, or Re((y1 + i y2)^k) on R^N, N >= 2.
ScalarFieldPtr harmonic_polynomial(HarmonicKind kind, int N, int k = 3);
ScalarFieldPtr constant_scalar(int N, double c);
/// y1 + (c/2) y2^2, whose Laplacian is c.
ScalarFieldPtr poisson_quadratic(int N, double c);
/// |y|^2 / (2N), whose Laplacian is 1.
ScalarFieldPtr radial_quadratic(int N);
/// max(sign * v, 0), differentiated where it is positive.
ScalarFieldPtr positive_part(ScalarFieldPtr v, double sign = 1.0);
/// (y1)^+ and (y1)^- on R^N.
std::pair<ScalarFieldPtr, ScalarFieldPtr> half_space_pair_elliptic(int N);
/// (y1 + delta y1^2)^+ and (y1)^-; valid on balls of radius below 1/delta.
std::pair<ScalarFieldPtr, ScalarFieldPtr> perturbed_half_space_pair(int N, double delta);
/// (y1)^+ (y2)^+, supported on a quadrant.
ScalarFieldPtr quadrant_field(int N);

enum class BumpFactor { One, Y1, Y1Y2 };

/// B(|y|) p(y) with B a (1 - s^2)^k profile over (r_in, r_out) and p in {1, y1, y1 y2}.
ScalarFieldPtr radial_bump(int N, double r_in, double r_out, int k,
                           BumpFactor factor = BumpFactor::One);
ScalarFieldPtr scaled(ScalarFieldPtr v, double c);

// ---- parabolic fields ------------------------------------------------------

enum class CaloricKind { One, X1, X1Sq, X1Cube, Radial };

/// 1, x1, x1^2 - 2t, x1^3 - 6 x1 t, |x|^2 - 2 d t.
SpaceTimeFieldPtr caloric_polynomial(CaloricKind kind, int d);
/// u(x, t) = G(x - x0, s0 - t), defined for t < s0.
SpaceTimeFieldPtr heat_kernel_translate(const Vector& x0, double s0);
/// u = sign * d^alpha G(x - x0, s0 - t) for a spatial multi-index alpha.
SpaceTimeFieldPtr heat_kernel_derivative(const Vector& x0, double s0, std::vector<int> alpha,
                                         double sign = 1.0);
/// x1 G(x, s0 - t) / (2 (s0 - t)) split into its positive and negative parts.
std::pair<SpaceTimeFieldPtr, SpaceTimeFieldPtr> heat_dipole_pair(int d, double s0);
SpaceTimeFieldPtr positive_part(SpaceTimeFieldPtr u, double sign = 1.0);
/// (x1)^+ and (x1)^-.
std::pair<SpaceTimeFieldPtr, SpaceTimeFieldPtr> half_space_pair(int d);
/// B(|x|) B(t) with (1 - s^2)^k profiles over (r_in, r_out) and (t_in, t_out).
SpaceTimeFieldPtr bump_spacetime(int d, double r_in, double r_out, double t_in, double t_out,
                                 int k);
SpaceTimeFieldPtr scaled(SpaceTimeFieldPtr u, double c);

/// Values g on a tensor grid in R^d; point k has coordinates points[k].
struct GridData {
  std::vector<Vector> points;
  std::vector<double> values;
};

/// Reads "x1,...,xd,value" rows; a non-numeric first row is treated as a header.
GridData read_grid_csv(std::istream& in);
GridData read_grid_csv(const std::string& path);

/// u(x, t) = sum_k w_k G(x - xi_k, T - t) g_k with trapezoid weights w_k.
/// Evaluation with T - t < 1e-3 raises AccuracyError.
SpaceTimeFieldPtr caloric_from_data(const GridData& g, double T);

// ---- sphere-valued maps ----------------------------------------------------

/// y / |y| on R^N, N >= 3.
SphereFieldPtr equator_map(int N);
/// Constant map to the first pole of S^{m-1}.
SphereFieldPtr constant_map(int N, int m);

enum class AngleKind { X1, X1X2, HalfX1Sq };

/// (cos theta, sin theta) into S^1 with theta = scale * x1, x1 x2, or x1^2 / 2.
SphereFieldPtr angle_map(AngleKind kind, int N, double scale = 1.0);

/// -Delta v - |Dv|^2 v, the right-hand side that v solves exactly.
VectorNonhomTerm harmonic_map_defect(SphereFieldPtr v);
/// y / |y|.
VectorNonhomTerm radial_unit_term(int N);

// ---- graphs ----------------------------------------------------------------

/// Static graph of c + a.y + y^T A y / 2.
class QuadraticGraph final : public GraphSurface {
 public:
  QuadraticGraph(double c, Vector a, Matrix A, std::string name);

  int dim() const override { return static_cast<int>(a_.size()); }
  double value(const Vector& y, double t = 0.0) const override;
  Vector gradient(const Vector& y, double t = 0.0) const override;
  Matrix hessian(const Vector& y, double t = 0.0) const override;
  double dt(const Vector&, double = 0.0) const override { return 0.0; }
  std::string name() const override { return name_; }

 private:
  double c_;
  Vector a_;
  Matrix A_;
  std::string name_;
};

GraphSurfacePtr graph_plane(int N, double c = 0.0);
GraphSurfacePtr graph_linear(const Vector& a, double c = 0.0);
/// eps |y|^2 / 2; not minimal.
GraphSurfacePtr graph_paraboloid(int N, double eps);

}  // namespace dimlift
