#pragma once

#include "dimlift/core_lift.hpp"
#include "dimlift/field_types.hpp"
#include "dimlift/integrate.hpp"

namespace dimlift {

/// r^{2-N} int_{B(y0, r)} |Dv|^2 dy.
double hm_phi(const SphereField& v, const Vector& y0, double r, const QuadratureSpec& spec = {});

/// -r^{1-N} int_{B(y0, r)} H . ((y - y0) . Dv) dy, for v solving -Delta v = |Dv|^2 v + H.
double hm_dphi_lower_bound(const SphereField& v, const VectorNonhomTerm& H, const Vector& y0,
                           double r, const QuadratureSpec& spec = {});

/// t int |Du|^2 G_t dx for a time-independent map u on R^d.
double struwe_Phi(const SphereField& u, double t, const QuadratureSpec& spec = {});

/// [nd/(nd-2)] t int |Du|^2 G_{t,n} - [1/(nd-2)] int |x.Du|^2 G_{t,n}; needs nd > 2.
double lifted_hm_Phi(const SphereField& u, const LiftConfig& cfg, double t,
                     const QuadratureSpec& spec = {});

}  // namespace dimlift
