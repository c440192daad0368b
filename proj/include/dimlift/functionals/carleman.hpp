#pragma once

#include "dimlift/field_types.hpp"
#include "dimlift/integrate.hpp"

namespace dimlift {

/// inf over integers l >= 0 of |(N/2 + l + gamma - 2)(N/2 + l - gamma)|.
double carleman_elliptic_constant(double gamma, int N);

struct EllipticCarlemanReport {
  double gamma = 0.0;
  double constant = 0.0;
  /// || |y|^{2-gamma} Delta v ||_2
  double lhs = 0.0;
  /// c(gamma, N) || |y|^{-gamma} v ||_2
  double rhs = 0.0;
  bool satisfied = false;
};

/// v must report a support annulus with r_in > 0.
EllipticCarlemanReport carleman_elliptic_check(const ScalarField& v, double gamma,
                                               const QuadratureSpec& spec = {},
                                               double rel_tol = 1e-9);

struct CarlemanReport {
  double alpha = 0.0;
  double beta = 0.0;
  /// Distance from beta to the nearest non-negative integer.
  double epsilon = 0.0;
  /// int int t^{-2 alpha} e^{-|x|^2/4t} u^2
  double lhs = 0.0;
  /// int int t^{2 - 2 alpha} e^{-|x|^2/4t} (Delta u + d_t u)^2
  double rhs_integral = 0.0;
  double constant_used = 0.0;
  /// constant_used * rhs_integral
  double rhs = 0.0;
  bool satisfied = false;
};

/// lhs <= (8 / eps^2) rhs_integral for u supported in a window away from (0, 0);
/// beta = 2 alpha - d/2 - 1 must be positive and not an integer.
CarlemanReport carleman_parabolic_check(const SpaceTimeField& u, double alpha,
                                        const QuadratureSpec& spec = {}, double rel_tol = 1e-9);

}  // namespace dimlift
