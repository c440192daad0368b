#pragma once

#include "dimlift/core_lift.hpp"
#include "dimlift/field_types.hpp"
#include "dimlift/integrate.hpp"

namespace dimlift {

/// H, D and L = param * D / H at radius r (elliptic) or time t (parabolic).
struct FrequencyValues {
  double param = 0.0;
  double H = 0.0;
  double D = 0.0;
  double L = 0.0;
};

/// Denominators below this raise DegenerateDenominator.
inline constexpr double kDenominatorFloor = 1e-30;

/// H = int_{dB_r} v^2, D = int_{B_r} |grad v|^2, L = r D / H.
FrequencyValues almgren(const ScalarField& v, double r, const QuadratureSpec& spec = {});

/// Lower bound for L'(r) when Delta v = h:
/// 2 (int_{dB_r} v y.grad v)(int_{B_r} h v) / H^2 - 2 (int_{B_r} h y.grad v) / H.
double almgren_dL_lower_bound(const ScalarField& v, const NonhomTerm& h, double r,
                              const QuadratureSpec& spec = {});

/// H = int u^2 G_t, D = int |grad u|^2 G_t, L = t D / H.
FrequencyValues poon(const SpaceTimeField& u, double t, const QuadratureSpec& spec = {});

/// Frequency of the lifted function v_n at radius sqrt(2 d t), evaluated through
/// its d-dimensional reduction. Tends to 2 L(t) of poon as n grows.
double lifted_frequency(const SpaceTimeField& u, const LiftConfig& cfg, double t,
                        const QuadratureSpec& spec = {});

}  // namespace dimlift
