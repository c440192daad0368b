#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <array>
#include <map>
#include <optional>
#include <tuple>
#include <numbers>
#include <random>

#include "dimlift/core_lift.hpp"
#include "dimlift/fields.hpp"
#include "dimlift/functionals.hpp"
#include "dimlift/montecarlo.hpp"
#include "dimlift/parallel.hpp"
#include "dimlift/weights.hpp"

namespace dimlift::cli {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kConvergenceSlack = 1e-10;  // relative, absorbs roundoff growth in n
constexpr double kConvergenceFraction = 0.05;

template <class F>
auto par_map(const std::vector<double>& grid, F&& f) {
  using R = decltype(f(grid.front()));
  std::vector<R> out(grid.size());
  parallel_for(grid.size(), [&](std::size_t k) { out[k] = f(grid[k]); });
  return out;
}

std::vector<double> par_map_int(const std::vector<int>& ns, const std::function<double(int)>& f) {
  std::vector<double> out(ns.size());
  parallel_for(ns.size(), [&](std::size_t k) { out[k] = f(ns[k]); });
  return out;
}

/// Monotonicity of precomputed values; appends violations to the report.
MonotonicityReport sweep(Report& rep, const std::vector<double>& grid,
                         const std::vector<double>& values, double tol, const std::string& what) {
  auto lookup = [&](double p) {
    return values[std::lower_bound(grid.begin(), grid.end(), p) - grid.begin()];
  };
  auto m = monotonicity_sweep(lookup, grid, tol, 1);
  if (m.violations > 0)
    rep.violation(-m.min_slope, what + ": " + std::to_string(m.violations) + " decreasing steps");
  return m;
}

std::string slope_cell(const MonotonicityReport& m, std::size_t k) {
  return k < m.fd_derivatives.size() ? num(m.fd_derivatives[k]) : std::string();
}

/// Errors must not increase with n (up to roundoff) and the finest must sit within 5% of target.
void convergence(Report& rep, const std::vector<int>& ns, const std::vector<double>& errs,
                 double target, const std::string& what) {
  const double slack = kConvergenceSlack * std::max(1.0, std::abs(target));
  for (std::size_t k = 1; k < errs.size(); ++k)
    rep.violation(errs[k] - errs[k - 1] - slack,
                  what + ": error increased at n=" + std::to_string(ns[k]));
  rep.error(errs.back(), kConvergenceFraction * std::abs(target) + slack,
            what + ": not within 5% at n=" + std::to_string(ns.back()));
}

Vector unit(int dim, double scale = 1.0) {
  Vector e = Vector::Zero(dim);
  e[0] = scale;
  return e;
}

void require(bool ok, const std::string& msg) {
  if (!ok) throw UsageError(msg);
}

double central(const std::function<double(double)>& f, double x, double h) {
  return (f(x + h) - f(x - h)) / (2.0 * h);
}

struct CaloricChoice {
  SpaceTimeFieldPtr u;
  std::optional<double> poon_L;
};

CaloricChoice caloric_field(const std::string& name, int d) {
  static const std::map<std::string, std::pair<CaloricKind, double>> poly = {
      {"one", {CaloricKind::One, 0.0}},     {"x1", {CaloricKind::X1, 0.5}},
      {"x1sq", {CaloricKind::X1Sq, 1.0}},   {"x1cube", {CaloricKind::X1Cube, 1.5}},
      {"radial", {CaloricKind::Radial, 1.0}}};
  if (auto it = poly.find(name); it != poly.end())
    return {caloric_polynomial(it->second.first, d), it->second.second};
  if (name == "heat-kernel") return {heat_kernel_translate(unit(d, 0.7), 3.0), std::nullopt};
  if (name == "heat-kernel-derivative") {
    std::vector<int> alpha(d, 0);
    alpha[0] = 1;
    return {heat_kernel_derivative(Vector::Zero(d), 2.0, alpha), std::nullopt};
  }
  throw UsageError("unknown caloric field '" + name +
                   "' (one, x1, x1sq, x1cube, radial, heat-kernel, heat-kernel-derivative)");
}

}  // namespace

// ---------------------------------------------------------------------------

Report gn_limit(const GnLimitOpts& o, RunInfo& info) {
  const std::string xg = o.x_grid.empty() ? (o.d <= 2 ? "-2:2:201" : "-2:2:41") : o.x_grid;
  info.parameters = {{"d", o.d}, {"t", o.t}, {"n", o.n}, {"x_grid", xg}};
  require(o.d >= 1, "--d must be >= 1");
  require(!o.n.empty(), "--n must not be empty");
  const auto axis = parse_grid(xg, false);
  const double total = std::pow(static_cast<double>(axis.size()), o.d);
  require(total <= 2e7, "tensor grid too large; reduce k in --x-grid");

  std::vector<Vector> pts;
  pts.reserve(static_cast<std::size_t>(total));
  std::vector<std::size_t> idx(o.d, 0);
  while (true) {
    Vector x(o.d);
    for (int i = 0; i < o.d; ++i) x[i] = axis[idx[i]];
    pts.push_back(x);
    int i = 0;
    while (i < o.d && ++idx[i] == axis.size()) idx[i++] = 0;
    if (i == o.d) break;
  }

  const auto wl = weight_limit_report(o.d, o.t, pts, o.n);
  Report rep;
  rep.table.header = {"n", "sup_rel_error", "ratio"};
  for (std::size_t k = 0; k < wl.n_list.size(); ++k) {
    rep.table.add(wl.n_list[k], wl.sup_rel_error[k], k ? num(wl.ratios[k - 1]) : std::string());
    rep.max_error = std::max(rep.max_error, wl.sup_rel_error[k]);
    if (k) {
      rep.violation(wl.sup_rel_error[k] - wl.sup_rel_error[k - 1],
                    "error increased at n=" + std::to_string(wl.n_list[k]));
    }
  }
  if (!wl.strictly_decreasing && rep.pass) rep.fail("errors not strictly decreasing");
  return rep;
}

// ---------------------------------------------------------------------------

Report pushforward(const PushforwardOpts& o, RunInfo& info) {
  info.parameters = {{"d", o.d},           {"n", o.n},         {"t", o.t},
                     {"measure", o.measure}, {"phi", o.phi},     {"samples", o.samples},
                     {"seeds", o.seeds},   {"k_se", o.k_se},   {"min_fraction", o.min_fraction}};
  require(o.measure == "sphere" || o.measure == "ball" || o.measure == "both",
          "--measure must be sphere, ball or both");
  require(o.samples >= 2 && o.seeds >= 1, "--samples >= 2 and --seeds >= 1 required");
  static const std::map<std::string, SpatialFn> catalog = {
      {"one", [](const Vector&) { return 1.0; }},
      {"x1", [](const Vector& x) { return x[0]; }},
      {"x1sq", [](const Vector& x) { return x[0] * x[0]; }},
      {"x1pow4", [](const Vector& x) { return std::pow(x[0], 4); }},
      {"gauss", [](const Vector& x) { return std::exp(-x.squaredNorm()); }}};
  std::vector<SpatialFn> phis;
  std::vector<SpaceTimeFn> phis_t;
  for (const auto& name : o.phi) {
    auto it = catalog.find(name);
    require(it != catalog.end(), "unknown --phi '" + name + "' (one, x1, x1sq, x1pow4, gauss)");
    phis.push_back(it->second);
    phis_t.push_back([f = it->second](const Vector& x, double) { return f(x); });
  }
  std::vector<std::string> measures;
  if (o.measure != "ball") measures.push_back("sphere");
  if (o.measure != "sphere") measures.push_back("ball");

  Report rep;
  rep.table.header = {"measure", "d",        "n",          "t",     "phi",   "seed",
                      "mc_value", "mc_std_error", "quad_value", "z", "within", "exact"};
  for (const auto& measure : measures) {
    const bool sphere = measure == "sphere";
    for (int d : o.d)
      for (int n : o.n)
        for (double t : o.t) {
          std::vector<int> within(phis.size(), 0);
          for (int s = 0; s < o.seeds; ++s) {
            MonteCarloSpec mc;
            mc.seed = info.seed + static_cast<std::uint64_t>(s);
            mc.samples = static_cast<std::size_t>(o.samples);
            const auto checks = sphere ? pushforward_check_sphere(phis, d, n, t, mc)
                                       : pushforward_check_ball(phis_t, d, n, t, mc);
            for (std::size_t k = 0; k < checks.size(); ++k) {
              const auto& c = checks[k];
              const bool ok = c.discrepancy_in_std_errors <= o.k_se;
              within[k] += ok;
              rep.worst_violation =
                  std::max(rep.worst_violation, c.discrepancy_in_std_errors - o.k_se);
              // Closed forms: total mass, odd moment and second moment.
              std::optional<double> exact;
              if (o.phi[k] == "one") exact = sphere ? 1.0 : t;
              if (o.phi[k] == "x1") exact = 0.0;
              if (o.phi[k] == "x1sq") exact = sphere ? 2.0 * t : t * t;
              rep.table.add(measure, d, n, t, o.phi[k], mc.seed, c.mc_value, c.mc_std_error,
                            c.quad_value, c.discrepancy_in_std_errors, ok,
                            exact ? num(*exact) : std::string());
              if (exact && s == 0) {
                rep.error(std::abs(c.quad_value - *exact), 1e-8,
                          measure + " " + o.phi[k] + " quadrature off closed form (d=" +
                              std::to_string(d) + ", n=" + std::to_string(n) + ")");
              }
            }
          }
          for (std::size_t k = 0; k < phis.size(); ++k) {
            if (within[k] < o.min_fraction * o.seeds) {
              rep.fail(measure + " " + o.phi[k] + ": " + std::to_string(within[k]) + "/" +
                       std::to_string(o.seeds) + " seeds within " + num(o.k_se) +
                       " standard errors (d=" + std::to_string(d) + ", n=" + std::to_string(n) +
                       ", t=" + num(t) + ")");
            }
          }
        }
  }
  rep.worst_violation = std::max(0.0, rep.worst_violation);
  return rep;
}

// ---------------------------------------------------------------------------

Report frequency(const FrequencyOpts& o, RunInfo& info) {
  require(!(o.parabolic && o.elliptic), "--parabolic and --elliptic are exclusive");
  const bool par = !o.elliptic;
  const std::string field = !o.field.empty() ? o.field : par ? "heat-kernel" : "x1x2";
  const std::string grid_text = par ? o.t_grid : o.r_grid;
  info.parameters = {{"mode", par ? "parabolic" : "elliptic"}, {"field", field}};
  if (par) {
    info.parameters["d"] = o.d;
    info.parameters["t_grid"] = grid_text;
  } else {
    info.parameters["N"] = o.N;
    if (field == "rezk") info.parameters["k"] = o.k;
    info.parameters["r_grid"] = grid_text;
  }
  info.parameters["tol"] = o.tol;
  const auto grid = parse_grid(grid_text, par);

  std::optional<double> expected;
  std::function<FrequencyValues(double)> eval;
  SpaceTimeFieldPtr u;
  ScalarFieldPtr v;
  if (par) {
    require(o.d >= 1, "--d must be >= 1");
    auto c = caloric_field(field, o.d);
    u = c.u;
    expected = c.poon_L;
    eval = [&](double t) { return poon(*u, t); };
  } else {
    require(o.N >= 2, "--N must be >= 2");
    if (field == "x1") {
      v = harmonic_polynomial(HarmonicKind::X1, o.N);
      expected = 1.0;
    } else if (field == "x1x2") {
      v = harmonic_polynomial(HarmonicKind::X1X2, o.N);
      expected = 2.0;
    } else if (field == "rezk") {
      v = harmonic_polynomial(HarmonicKind::ReZk, o.N, o.k);
      expected = o.k;
    } else if (field == "one") {
      v = constant_scalar(o.N, 1.0);
      expected = 0.0;
    } else if (field == "radial-quadratic") {
      v = radial_quadratic(o.N);
      expected = 4.0 / (o.N + 2.0);
    } else {
      throw UsageError("unknown elliptic field '" + field +
                       "' (x1, x1x2, rezk, one, radial-quadratic)");
    }
    eval = [&](double r) { return almgren(*v, r); };
  }

  const auto vals = par_map(grid, eval);
  std::vector<double> L(vals.size());
  for (std::size_t k = 0; k < vals.size(); ++k) L[k] = vals[k].L;
  Report rep;
  const auto m = sweep(rep, grid, L, o.tol, "frequency");
  rep.table.header = {par ? "t" : "r", "H", "D", "L", "expected", "error", "fd_slope"};
  for (std::size_t k = 0; k < vals.size(); ++k) {
    const auto& f = vals[k];
    std::string exp_cell, err_cell;
    if (expected) {
      const double err = std::abs(f.L - *expected);
      exp_cell = num(*expected);
      err_cell = num(err);
      rep.error(err, o.tol * std::max(1.0, std::abs(*expected)),
                "frequency off its constant at " + num(grid[k]));
    }
    rep.table.add(grid[k], f.H, f.D, f.L, exp_cell, err_cell, slope_cell(m, k));
  }
  return rep;
}

// ---------------------------------------------------------------------------

namespace {

double scan_constant(double gamma, int N) {
  double best = INFINITY;
  for (int l = 0; l <= 10000; ++l) {
    const double a = 0.5 * N + l;
    best = std::min(best, std::abs((a + gamma - 2.0) * (a - gamma)));
  }
  return best;
}

double shortfall(double lhs, double rhs) {
  return (rhs - lhs) / std::max(std::abs(rhs), 1e-300);
}

}  // namespace

Report carleman(const CarlemanOpts& o, RunInfo& info) {
  info.parameters = {{"N", o.N},           {"d", o.d},           {"gammas", o.gammas},
                     {"alphas", o.alphas}, {"random", o.random}};
  require(o.N >= 2 && o.d >= 1 && o.random >= 0, "need --N >= 2, --d >= 1, --random >= 0");
  Report rep;
  rep.table.header = {"kind", "case", "param", "lhs", "rhs", "constant", "pass"};

  const std::vector<std::pair<std::string, BumpFactor>> factors = {
      {"bump", BumpFactor::One}, {"bump-y1", BumpFactor::Y1}, {"bump-y1y2", BumpFactor::Y1Y2}};
  for (const auto& [name, f] : factors) {
    auto v = radial_bump(o.N, 1.0, 2.0, 4, f);
    for (double g : o.gammas) {
      const auto r = carleman_elliptic_check(*v, g);
      rep.table.add("elliptic", name, g, r.lhs, r.rhs, r.constant, r.satisfied);
      if (!r.satisfied)
        rep.violation(std::max(shortfall(r.lhs, r.rhs), 1e-300),
                      "elliptic " + name + " gamma=" + num(g));
    }
  }
  auto u = bump_spacetime(o.d, 1.0, 2.0, 1.0, 2.0, 4);
  for (double a : o.alphas) {
    const auto r = carleman_parabolic_check(*u, a);
    rep.table.add("parabolic", "bump", a, r.lhs, r.rhs, r.constant_used, r.satisfied);
    if (!r.satisfied)
      rep.violation(std::max(shortfall(r.lhs, r.rhs), 1e-300), "parabolic alpha=" + num(a));
  }

  // Library constant against an exhaustive scan over spherical-harmonic degrees.
  std::mt19937_64 rng(info.seed);
  for (int k = 0; k < o.random; ++k) {
    const double g = 6.0 * static_cast<double>(rng() >> 11) * 0x1p-53;
    const int N = 2 + static_cast<int>(rng() % 7);
    const double c = carleman_elliptic_constant(g, N);
    const double oracle = scan_constant(g, N);
    const bool ok = rep.error(std::abs(c - oracle), 1e-12 * std::max(1.0, oracle),
                              "constant mismatch gamma=" + num(g) + " N=" + std::to_string(N));
    rep.table.add("constant", "N=" + std::to_string(N), g, c, oracle, c, ok);
  }
  return rep;
}

// ---------------------------------------------------------------------------

namespace {

void check_row(Report& rep, const std::string& check, double param, int n, double value,
               double reference, double tol) {
  const double err = std::abs(value - reference);
  const bool ok = rep.error(err, tol, check + " at " + num(param));
  rep.table.add(check, param, n, value, reference, err, ok);
}

void bound_row(Report& rep, const std::string& check, double param, double slope, double bound,
               double slack) {
  const bool ok = slope >= bound - slack;
  if (!ok) rep.violation(bound - slack - slope, check + " at " + num(param));
  rep.table.add(check, param, 0, slope, bound, std::string(), ok);
}

}  // namespace

Report two_phase(const TwoPhaseOpts& o, RunInfo& info) {
  info.parameters = {{"N", o.N},         {"d", o.d},
                     {"delta", o.delta}, {"dipole_s0", o.dipole_s0},
                     {"r_grid", o.r_grid}, {"tau_grid", o.tau_grid},
                     {"n", o.n}};
  require(o.N >= 2 && o.d >= 1 && !o.n.empty(), "need --N >= 2, --d >= 1 and a non-empty --n");
  const auto rgrid = parse_grid(o.r_grid, false);
  const auto tgrid = parse_grid(o.tau_grid, true);
  Report rep;
  rep.table.header = {"check", "param", "n", "value", "reference", "error", "pass"};

  auto [p, m] = half_space_pair_elliptic(o.N);
  const double area = sphere_area(o.N);
  const double acf_ref = area * area / 16.0;
  const auto acf = par_map(rgrid, [&](double r) { return acf_phi(*p, *m, r).value; });
  for (std::size_t k = 0; k < rgrid.size(); ++k)
    check_row(rep, "acf-half-space", rgrid[k], 0, acf[k], acf_ref, 1e-8 * acf_ref);
  sweep(rep, rgrid, acf, 1e-8, "acf half-space");
  check_row(rep, "support-fraction", 1.0, 0, support_fraction(*p, 1.0), 0.5, 1e-12);
  for (auto [s, ref] : {std::pair{0.25, 1.5}, std::pair{0.5, 1.0}, std::pair{1.0, 0.0}})
    check_row(rep, "psi", s, 0, psi(s), ref, 0.0);

  auto [v1, v2] = perturbed_half_space_pair(o.N, o.delta);
  const auto h1 = NonhomTerm::constant(2 * o.delta);
  const auto pert = par_map(rgrid, [&](double r) {
    const double fd = central([&](double s) { return acf_phi(*v1, *v2, s).value; }, r, 1e-4);
    return std::pair{fd, acf_dphi_lower_bound(*v1, *v2, h1, NonhomTerm::zero(), r)};
  });
  for (std::size_t k = 0; k < rgrid.size(); ++k) {
    bound_row(rep, "perturbed-slope-vs-bound", rgrid[k], pert[k].first, pert[k].second, 1e-4);
    if (o.N == 2) {
      const double closed = 4 * kPi * o.delta / 3 + kPi * kPi * o.delta * o.delta * rgrid[k] / 2;
      check_row(rep, "perturbed-slope", rgrid[k], 0, pert[k].first, closed, 1e-6);
    }
  }

  auto [u1, u2] = half_space_pair(o.d);
  const auto caf = par_map(tgrid, [&](double t) { return caffarelli_Phi(*u1, *u2, t).value; });
  for (std::size_t k = 0; k < tgrid.size(); ++k)
    check_row(rep, "caffarelli-half-space", tgrid[k], 0, caf[k], 0.25, 1e-8);
  sweep(rep, tgrid, caf, 1e-8, "caffarelli half-space");
  const auto lifted = par_map_int(
      o.n, [&](int n) { return lifted_two_phase(*u1, *u2, LiftConfig(o.d, n), 1.0); });
  for (std::size_t k = 0; k < o.n.size(); ++k)
    check_row(rep, "lifted-half-space", 1.0, o.n[k], lifted[k], 0.25, 1e-8);

  auto [d1, d2] = heat_dipole_pair(o.d, o.dipole_s0);
  const double Phi = caffarelli_Phi(*d1, *d2, 1.0).value;
  const auto dip = par_map_int(
      o.n, [&](int n) { return lifted_two_phase(*d1, *d2, LiftConfig(o.d, n), 1.0); });
  std::vector<double> errs;
  for (std::size_t k = 0; k < o.n.size(); ++k) {
    errs.push_back(std::abs(dip[k] - Phi));
    rep.table.add("lifted-dipole", 1.0, o.n[k], dip[k], Phi, errs.back(), std::string());
  }
  convergence(rep, o.n, errs, Phi, "lifted dipole");
  return rep;
}

// ---------------------------------------------------------------------------

Report harmonic_map(const HarmonicMapOpts& o, RunInfo& info) {
  info.parameters = {{"N", o.N}, {"r_grid", o.r_grid}, {"t_grid", o.t_grid}, {"n", o.n}};
  require(!o.n.empty(), "--n must not be empty");
  for (int N : o.N) require(N >= 3, "--N entries must be >= 3");
  const auto rgrid = parse_grid(o.r_grid, false);
  const auto tgrid = parse_grid(o.t_grid, true);
  Report rep;
  rep.table.header = {"check", "param", "n", "value", "reference", "error", "pass"};

  for (int N : o.N) {
    auto eq = equator_map(N);
    const double ref = (N - 1.0) * sphere_area(N) / (N - 2.0);
    const auto vals = par_map(rgrid, [&](double r) { return hm_phi(*eq, Vector::Zero(N), r); });
    const std::string name = "equator-N" + std::to_string(N);
    for (std::size_t k = 0; k < rgrid.size(); ++k)
      check_row(rep, name, rgrid[k], 0, vals[k], ref, 1e-6 * ref);
    sweep(rep, rgrid, vals, 1e-8, name);
  }

  auto eq3 = equator_map(3);
  check_row(rep, "bound-harmonic", 1.0, 0,
            hm_dphi_lower_bound(*eq3, VectorNonhomTerm::zero(3), Vector::Zero(3), 1.0), 0.0, 0.0);
  QuadratureSpec zero_spec;
  zero_spec.abs_tol = 1e-12;
  check_row(rep, "bound-radial-term", 1.0, 0,
            hm_dphi_lower_bound(*eq3, radial_unit_term(3), Vector::Zero(3), 1.0, zero_spec), 0.0,
            1e-8);
  auto w = angle_map(AngleKind::HalfX1Sq, 2);
  const auto defect = harmonic_map_defect(w);
  const Vector y0 = (Vector(2) << 0.3, -0.2).finished();
  const auto bnd = par_map(rgrid, [&](double r) {
    const double fd = central([&](double s) { return hm_phi(*w, y0, s); }, r, 1e-4);
    return std::pair{fd, hm_dphi_lower_bound(*w, defect, y0, r)};
  });
  for (std::size_t k = 0; k < rgrid.size(); ++k)
    bound_row(rep, "half-x1sq-slope-vs-bound", rgrid[k], bnd[k].first, bnd[k].second, 1e-4);

  auto circle = angle_map(AngleKind::X1, 1);
  const auto st = par_map(tgrid, [&](double t) { return struwe_Phi(*circle, t); });
  for (std::size_t k = 0; k < tgrid.size(); ++k)
    check_row(rep, "struwe-circle", tgrid[k], 0, st[k], tgrid[k], 1e-9 * std::max(1.0, tgrid[k]));
  sweep(rep, tgrid, st, 1e-8, "struwe circle");

  const auto lc = par_map_int(o.n, [&](int n) { return lifted_hm_Phi(*circle, LiftConfig(1, n), 1.0); });
  for (std::size_t k = 0; k < o.n.size(); ++k)
    check_row(rep, "lifted-circle", 1.0, o.n[k], lc[k], 1.0, 1e-8);

  auto map = angle_map(AngleKind::X1X2, 2);
  const double Phi = struwe_Phi(*map, 1.0);
  const auto lx = par_map_int(o.n, [&](int n) { return lifted_hm_Phi(*map, LiftConfig(2, n), 1.0); });
  std::vector<double> errs;
  for (std::size_t k = 0; k < o.n.size(); ++k) {
    errs.push_back(std::abs(lx[k] - Phi));
    rep.table.add("lifted-x1x2", 1.0, o.n[k], lx[k], Phi, errs.back(), std::string());
  }
  convergence(rep, o.n, errs, Phi, "lifted x1x2");
  return rep;
}

// ---------------------------------------------------------------------------

Report mcf(const McfOpts& o, RunInfo& info) {
  info.parameters = {{"N", o.N},         {"d", o.d},           {"delta", o.delta},
                     {"c", o.c},         {"slope", o.slope},   {"r_grid", o.r_grid},
                     {"t_grid", o.t_grid}, {"n", o.n}};
  require(o.N >= 1 && o.d >= 1 && !o.n.empty(), "need --N >= 1, --d >= 1 and a non-empty --n");
  const auto rgrid = parse_grid(o.r_grid, false);
  const auto tgrid = parse_grid(o.t_grid, true);
  Report rep;
  rep.table.header = {"check", "param", "n", "value", "reference", "error", "pass"};

  const auto plane = graph_plane(o.N);
  const auto tilted = graph_linear(unit(o.N, o.slope));
  const Vector origin = Vector::Zero(o.N + 1);
  Vector w0 = origin;
  w0[o.N] = o.delta;
  const double dd = o.delta * o.delta;
  const auto ms = par_map(rgrid, [&](double r) {
    return std::array{ms_density(*plane, origin, r), ms_density(*tilted, origin, r),
                      ms_density(*plane, w0, r),
                      ms_density_tilde(*plane, NonhomTerm::zero(), w0, r).derivative_rhs};
  });
  std::vector<double> flat(rgrid.size()), offset(rgrid.size());
  for (std::size_t k = 0; k < rgrid.size(); ++k) {
    const double r = rgrid[k];
    const double q = 1.0 - dd / (r * r);
    check_row(rep, "ms-plane", r, 0, ms[k][0], 1.0, 1e-8);
    check_row(rep, "ms-tilted", r, 0, ms[k][1], 1.0, 1e-8);
    check_row(rep, "ms-offset", r, 0, ms[k][2], std::pow(q, 0.5 * o.N), 1e-6);
    const double slope = 0.5 * o.N * std::pow(q, 0.5 * o.N - 1) * 2 * dd / (r * r * r);
    check_row(rep, "ms-offset-derivative", r, 0, ms[k][3], slope, 1e-4);
    flat[k] = ms[k][0];
    offset[k] = ms[k][2];
  }
  sweep(rep, rgrid, flat, 1e-8, "ms plane");
  sweep(rep, rgrid, offset, 1e-8, "ms offset plane");

  auto par = graph_paraboloid(o.N, 0.3);
  const NonhomTerm hpar{[&](const Vector& y) { return graph_mean_curvature(*par, y); }, "H"};
  Vector z0 = origin;
  z0[o.N] = -0.1;
  for (double r : {0.5, 1.0}) {
    const double fd =
        central([&](double s) { return ms_density_tilde(*par, hpar, z0, s).theta_tilde; }, r, 1e-4);
    check_row(rep, "paraboloid-derivative", r, 0, ms_density_tilde(*par, hpar, z0, r).derivative_rhs,
              fd, 1e-4);
  }

  const double ref = std::pow(4 * kPi, 0.5 * o.d);
  const std::vector<std::pair<std::string, GraphSurfacePtr>> graphs = {
      {"plane", graph_plane(o.d)},
      {"constant", graph_plane(o.d, o.c)},
      {"tilted", graph_linear(unit(o.d, o.slope))}};
  for (const auto& [name, g] : graphs) {
    const auto hv = par_map(tgrid, [&](double t) { return huisken_density(*g, t); });
    for (std::size_t k = 0; k < tgrid.size(); ++k) {
      const double exact = name == "constant" ? ref * std::exp(-o.c * o.c / (4 * tgrid[k])) : ref;
      check_row(rep, "huisken-" + name, tgrid[k], 0, hv[k], exact, 1e-8 * ref);
    }
    sweep(rep, tgrid, hv, 1e-8, "huisken " + name);
    for (double x : {-1.3, 0.5, 2.0})
      for (double t : {0.5, 2.0})
        check_row(rep, "residual-" + name, x, 0, mcf_residual(*g, unit(o.d, x), t), 0.0, 1e-12);
  }

  for (const auto& [name, g] : graphs) {
    const double target = huisken_density(*g, 1.0);
    const auto lv =
        par_map_int(o.n, [&](int n) { return lifted_mcf_density(*g, LiftConfig(o.d, n), 1.0); });
    std::vector<double> errs;
    for (std::size_t k = 0; k < o.n.size(); ++k) {
      errs.push_back(std::abs(lv[k] - target));
      rep.table.add("lifted-" + name, 1.0, o.n[k], lv[k], target, errs.back(), std::string());
    }
    convergence(rep, o.n, errs, target, "lifted " + name);
  }
  return rep;
}

// ---------------------------------------------------------------------------

Report lift_demo(const LiftDemoOpts& o, RunInfo& info) {
  static const std::map<std::string, std::string> default_field = {
      {"frequency", "heat-kernel"},
      {"two-phase", "dipole"},
      {"harmonic-map", "circle"},
      {"mcf", "constant"}};
  auto it = default_field.find(o.which);
  require(it != default_field.end(), "--which must be frequency, two-phase, harmonic-map or mcf");
  const std::string field = o.field.empty() ? it->second : o.field;
  info.parameters = {{"which", o.which}, {"field", field}, {"d", o.d}, {"t", o.t}, {"n", o.n}};
  require(o.d >= 1 && !o.n.empty() && o.t > 0, "need --d >= 1, --t > 0 and a non-empty --n");

  double target = 0.0;
  std::function<double(int)> lifted;
  SpaceTimeFieldPtr u1, u2;
  SphereFieldPtr map;
  GraphSurfacePtr graph;
  if (o.which == "frequency") {
    u1 = caloric_field(field, o.d).u;
    target = 2.0 * poon(*u1, o.t).L;
    lifted = [&](int n) { return lifted_frequency(*u1, LiftConfig(o.d, n), o.t); };
  } else if (o.which == "two-phase") {
    if (field == "half-space")
      std::tie(u1, u2) = half_space_pair(o.d);
    else if (field == "dipole")
      std::tie(u1, u2) = heat_dipole_pair(o.d, 2.0);
    else
      throw UsageError("two-phase fields: half-space, dipole");
    target = caffarelli_Phi(*u1, *u2, o.t).value;
    lifted = [&](int n) { return lifted_two_phase(*u1, *u2, LiftConfig(o.d, n), o.t); };
  } else if (o.which == "harmonic-map") {
    if (field == "circle")
      map = angle_map(AngleKind::X1, o.d);
    else if (field == "x1x2" && o.d >= 2)
      map = angle_map(AngleKind::X1X2, o.d);
    else if (field == "constant")
      map = constant_map(o.d, 2);
    else
      throw UsageError("harmonic-map fields: circle, x1x2 (d >= 2), constant");
    target = struwe_Phi(*map, o.t);
    lifted = [&](int n) { return lifted_hm_Phi(*map, LiftConfig(o.d, n), o.t); };
  } else {
    if (field == "plane")
      graph = graph_plane(o.d);
    else if (field == "constant")
      graph = graph_plane(o.d, 0.5);
    else if (field == "tilted")
      graph = graph_linear(unit(o.d, 0.7));
    else
      throw UsageError("mcf fields: plane, constant, tilted");
    target = huisken_density(*graph, o.t);
    lifted = [&](int n) { return lifted_mcf_density(*graph, LiftConfig(o.d, n), o.t); };
  }

  const auto vals = par_map_int(o.n, lifted);
  Report rep;
  rep.table.header = {"n", "lifted", "target", "error"};
  std::vector<double> errs;
  for (std::size_t k = 0; k < o.n.size(); ++k) {
    errs.push_back(std::abs(vals[k] - target));
    rep.table.add(o.n[k], vals[k], target, errs.back());
  }
  convergence(rep, o.n, errs, target, o.which + " " + field);
  return rep;
}

}  // namespace dimlift::cli
