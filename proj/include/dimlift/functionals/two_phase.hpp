#pragma once

#include "dimlift/core_lift.hpp"
#include "dimlift/field_types.hpp"
#include "dimlift/integrate.hpp"

namespace dimlift {

/// Quadrature defaults for two-phase functionals: the angular rule is split
/// along the coordinate hyperplanes where catalog supports end.
QuadratureSpec two_phase_spec();

struct TwoPhaseReport {
  /// r or tau.
  double param = 0.0;
  double factor1 = 0.0;
  double factor2 = 0.0;
  /// factor1 factor2 / r^4 or / tau^2.
  double value = 0.0;
  /// Support fractions on dB_r; left at 0 for the parabolic functional.
  double s1 = 0.0;
  double s2 = 0.0;
};

/// factor_i = int_{B_r} |grad v_i|^2 |y|^{2-N} dy.
TwoPhaseReport acf_phi(const ScalarField& v1, const ScalarField& v2, double r,
                       const QuadratureSpec& spec = two_phase_spec());

/// Decreasing convex function on (0, 1]: log(1/(4s))/2 + 3/2 below 1/4, 2(1 - s) above.
double psi(double s);

/// Fraction of dB_r where v > 0.
double support_fraction(const ScalarField& v, double r,
                        const QuadratureSpec& spec = two_phase_spec());

/// (2/r^5)[psi(s1) I(v1 h1) J(v2) + psi(s2) J(v1) I(v2 h2)] with
/// I(v h) = int_{B_r} v h |y|^{2-N} and J(v) = int_{B_r} |grad v|^2 |y|^{2-N}.
double acf_dphi_lower_bound(const ScalarField& v1, const ScalarField& v2, const NonhomTerm& h1,
                            const NonhomTerm& h2, double r,
                            const QuadratureSpec& spec = two_phase_spec());

/// factor_i = int_0^tau int |grad u_i|^2 G_t dx dt; value = product / tau^2.
TwoPhaseReport caffarelli_Phi(const SpaceTimeField& u1, const SpaceTimeField& u2, double tau,
                              const QuadratureSpec& spec = two_phase_spec());

/// Finite-n version: factor_i = int_0^tau int (|grad u_i|^2 + (2/(nd)) (x.grad u_i + t d_t u_i) d_t u_i) G_{t,n}.
double lifted_two_phase(const SpaceTimeField& u1, const SpaceTimeField& u2, const LiftConfig& cfg,
                        double tau, const QuadratureSpec& spec = two_phase_spec());

}  // namespace dimlift
