#pragma once

#include "dimlift/core_lift.hpp"
#include "dimlift/field_types.hpp"
#include "dimlift/integrate.hpp"

namespace dimlift {

/// Upward unit normal (-grad v, 1) / sqrt(1 + |grad v|^2) of the graph at y.
Vector graph_normal(const GraphSurface& s, const Vector& y, double t = 0.0);

/// Delta v / sqrt(1 + p^2) - v_i v_j v_ij / (1 + p^2)^{3/2} with p = |grad v|.
double graph_mean_curvature(const GraphSurface& s, const Vector& y, double t = 0.0);

/// Area of the graph inside B_r(w0) divided by the volume of the radius-r ball
/// in R^N. w0 lies in R^{N+1}. The projected region
/// {y : |y - y0|^2 + (v(y) - v0)^2 <= r^2} is assumed star-shaped about y0.
double ms_density(const GraphSurface& s, const Vector& w0, double r,
                  const QuadratureSpec& spec = {});

struct DensityTilde {
  double theta_tilde = 0.0;
  /// Boundary integral that equals d theta_tilde / dr.
  double derivative_rhs = 0.0;
};

/// Density with the mean-curvature correction (1/N) int h (w - w0).nu, for a
/// graph whose mean curvature is h (a function of the graph coordinate y).
DensityTilde ms_density_tilde(const GraphSurface& s, const NonhomTerm& h, const Vector& w0,
                              double r, const QuadratureSpec& spec = {});

/// int t^{-d/2} exp(-(|x|^2 + u^2) / 4t) sqrt(1 + |grad u|^2) dx.
double huisken_density(const GraphSurface& u, double t, const QuadratureSpec& spec = {});

/// d_t u + Delta u - u_i u_j u_ij / (1 + |grad u|^2).
double mcf_residual(const GraphSurface& u, const Vector& x, double t);

/// (4 pi)^{d/2} int sqrt(1 + |grad u|^2) G^u_{t,n} dx, where G^u_{t,n} is the
/// finite weight with |x|^2 replaced by |x|^2 + u^2. Needs nd >= d + 2.
double lifted_mcf_density(const GraphSurface& u, const LiftConfig& cfg, double t,
                          const QuadratureSpec& spec = {});

}  // namespace dimlift
