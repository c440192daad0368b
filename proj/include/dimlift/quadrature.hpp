#pragma once

#include <vector>

#include "dimlift/types.hpp"

namespace dimlift {

/// One-dimensional rule: sum_k weights[k] f(nodes[k]).
struct Rule1D {
  std::vector<double> nodes;
  std::vector<double> weights;

  double weight_sum() const;
  /// Rescale weights so they sum to one.
  Rule1D normalized() const;
};

/// Gauss-Jacobi on [-1, 1] for the weight (1-x)^alpha (1+x)^beta, alpha, beta > -1.
Rule1D gauss_jacobi(int q, double alpha, double beta);
/// Gauss-Jacobi on [0, 1] for the weight (1-s)^alpha s^beta.
Rule1D gauss_jacobi01(int q, double alpha, double beta);
/// Generalised Gauss-Laguerre on [0, inf) for the weight s^alpha e^{-s}.
Rule1D gauss_laguerre(int q, double alpha);
/// Gauss-Legendre on [a, b].
Rule1D gauss_legendre(int q, double a, double b);

enum class AngularRule { ProductGauss, Tabulated, TensorTrapezoid, SplitGauss };

/// Rule on the unit sphere S^{N-1}; weights sum to one (an average).
struct SphereRule {
  std::vector<Vector> nodes;
  std::vector<double> weights;
};

/// `resolution` is the number of polar nodes per angle; the azimuth gets twice as
/// many, rounded up to a multiple of four so no node falls on a coordinate
/// hyperplane. The Tabulated rule is the 6/14/26-point octahedral family on S^2
/// and falls back to ProductGauss elsewhere. SplitGauss is ProductGauss with
/// y1 and the azimuth integrated separately on each side of the coordinate
/// hyperplanes, so integrands that jump across y1 = 0 or y2 = 0 (N = 2) keep
/// spectral accuracy.
SphereRule sphere_rule(int N, AngularRule rule, int resolution);

}  // namespace dimlift
