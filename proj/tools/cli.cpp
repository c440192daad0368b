#include "dimlift/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <functional>
#include <iostream>

#include "commands.hpp"
#include "dimlift/errors.hpp"
#include "dimlift/parallel.hpp"

namespace dimlift::cli {
namespace {

constexpr const char* kFooter =
    "Grids are written a:b:k, meaning k points from a to b inclusive; t- and tau-grids are\n"
    "geometric, r- and x-grids linear. Lists are comma separated.\n"
    "Outputs: <out>.csv (one row per grid/parameter point), <out>.json (status, worst_violation,\n"
    "max_error, manifest) and <out>.manifest.json (manifest plus wall time and threads).\n"
    "Exit status: 0 all checks passed, 2 a check failed, 1 usage or domain error.";

struct Common {
  std::string out;
  int threads = 0;
  std::uint64_t seed = 1;
};

void add_common(CLI::App* sub, Common& c) {
  sub->add_option("--out", c.out, "Output prefix (default: dimlift-<subcommand>)");
  sub->add_option("--threads", c.threads, "Worker threads (default: hardware concurrency)")
      ->check(CLI::NonNegativeNumber);
  sub->add_option("--seed", c.seed, "Base seed for random sampling")->capture_default_str();
}

}  // namespace

int run(const std::vector<std::string>& args) {
  CLI::App app{"Lifting-based verification of parabolic monotonicity formulas", "dimlift"};
  app.require_subcommand(1);
  app.footer(kFooter);

  Common common;
  GnLimitOpts gn;
  PushforwardOpts pf;
  FrequencyOpts fq;
  CarlemanOpts cm;
  TwoPhaseOpts tp;
  HarmonicMapOpts hm;
  McfOpts mc;
  LiftDemoOpts ld;

  std::vector<std::pair<CLI::App*, std::function<Report(RunInfo&)>>> subs;
  auto add = [&](const char* name, const char* help, std::function<Report(RunInfo&)> body) {
    CLI::App* s = app.add_subcommand(name, help);
    add_common(s, common);
    subs.emplace_back(s, std::move(body));
    return s;
  };

  auto* s = add("gn-limit", "Finite weight against the Gaussian on a tensor grid",
                [&](RunInfo& i) { return gn_limit(gn, i); });
  s->add_option("--d", gn.d, "Spatial dimension")->capture_default_str();
  s->add_option("--t", gn.t, "Time")->capture_default_str();
  s->add_option("--n", gn.n, "Lifting factors")->delimiter(',')->capture_default_str();
  s->add_option("--x-grid", gn.x_grid, "Per-axis grid (default -2:2:201, or -2:2:41 for d > 2)");

  s = add("pushforward", "Monte Carlo push-forward of sphere and ball measures against quadrature",
          [&](RunInfo& i) { return pushforward(pf, i); });
  s->add_option("--d", pf.d, "Spatial dimensions")->delimiter(',')->capture_default_str();
  s->add_option("--n", pf.n, "Lifting factors")->delimiter(',')->capture_default_str();
  s->add_option("--t", pf.t, "Times (ball radius parameter for the ball)")
      ->delimiter(',')
      ->capture_default_str();
  s->add_option("--measure", pf.measure, "sphere, ball or both")->capture_default_str();
  s->add_option("--phi", pf.phi, "Test functions: one, x1, x1sq, x1pow4, gauss")
      ->delimiter(',')
      ->capture_default_str();
  s->add_option("--samples", pf.samples, "Samples per run")->capture_default_str();
  s->add_option("--seeds", pf.seeds, "Independent seeds per configuration")->capture_default_str();
  s->add_option("--k-se", pf.k_se, "Accepted discrepancy in standard errors")->capture_default_str();
  s->add_option("--min-fraction", pf.min_fraction, "Required fraction of seeds within --k-se")
      ->capture_default_str();

  s = add("frequency", "Almgren (elliptic) or Poon (parabolic) frequency sweep",
          [&](RunInfo& i) { return frequency(fq, i); });
  s->add_flag("--parabolic", fq.parabolic, "Poon frequency in t (default)");
  s->add_flag("--elliptic", fq.elliptic, "Almgren frequency in r");
  s->add_option("--field", fq.field,
                "parabolic: one, x1, x1sq, x1cube, radial, heat-kernel (default), "
                "heat-kernel-derivative; elliptic: x1, x1x2 (default), rezk, one, radial-quadratic");
  s->add_option("--d", fq.d, "Spatial dimension (parabolic)")->capture_default_str();
  s->add_option("--N", fq.N, "Dimension (elliptic)")->capture_default_str();
  s->add_option("--k", fq.k, "Degree for rezk")->capture_default_str();
  s->add_option("--t-grid", fq.t_grid, "Geometric time grid")->capture_default_str();
  s->add_option("--r-grid", fq.r_grid, "Linear radius grid")->capture_default_str();
  s->add_option("--tol", fq.tol, "Monotonicity and constancy tolerance")->capture_default_str();

  s = add("carleman", "Elliptic and parabolic Carleman inequalities on bump functions",
          [&](RunInfo& i) { return carleman(cm, i); });
  s->add_option("--N", cm.N, "Elliptic dimension")->capture_default_str();
  s->add_option("--d", cm.d, "Parabolic spatial dimension")->capture_default_str();
  s->add_option("--gammas", cm.gammas, "Elliptic weights")->delimiter(',')->capture_default_str();
  s->add_option("--alphas", cm.alphas, "Parabolic weights")->delimiter(',')->capture_default_str();
  s->add_option("--random", cm.random, "Random constant checks")->capture_default_str();

  s = add("two-phase", "Two-phase monotonicity functionals and their lifted versions",
          [&](RunInfo& i) { return two_phase(tp, i); });
  s->add_option("--N", tp.N, "Elliptic dimension")->capture_default_str();
  s->add_option("--d", tp.d, "Parabolic spatial dimension")->capture_default_str();
  s->add_option("--delta", tp.delta, "Perturbation size")->capture_default_str();
  s->add_option("--dipole-s0", tp.dipole_s0, "Dipole time shift")->capture_default_str();
  s->add_option("--r-grid", tp.r_grid, "Linear radius grid")->capture_default_str();
  s->add_option("--tau-grid", tp.tau_grid, "Geometric time grid")->capture_default_str();
  s->add_option("--n", tp.n, "Lifting factors")->delimiter(',')->capture_default_str();

  s = add("harmonic-map", "Harmonic map and heat flow energies",
          [&](RunInfo& i) { return harmonic_map(hm, i); });
  s->add_option("--N", hm.N, "Equator map dimensions")->delimiter(',')->capture_default_str();
  s->add_option("--r-grid", hm.r_grid, "Linear radius grid")->capture_default_str();
  s->add_option("--t-grid", hm.t_grid, "Geometric time grid")->capture_default_str();
  s->add_option("--n", hm.n, "Lifting factors")->delimiter(',')->capture_default_str();

  s = add("mcf", "Minimal surface and mean curvature flow densities",
          [&](RunInfo& i) { return mcf(mc, i); });
  s->add_option("--N", mc.N, "Minimal surface dimension")->capture_default_str();
  s->add_option("--d", mc.d, "Flow dimension")->capture_default_str();
  s->add_option("--delta", mc.delta, "Centre offset")->capture_default_str();
  s->add_option("--c", mc.c, "Height of the constant graph")->capture_default_str();
  s->add_option("--slope", mc.slope, "Slope of the tilted plane")->capture_default_str();
  s->add_option("--r-grid", mc.r_grid, "Linear radius grid")->capture_default_str();
  s->add_option("--t-grid", mc.t_grid, "Geometric time grid")->capture_default_str();
  s->add_option("--n", mc.n, "Lifting factors")->delimiter(',')->capture_default_str();

  s = add("lift-demo", "Convergence of a lifted functional to its parabolic limit",
          [&](RunInfo& i) { return lift_demo(ld, i); });
  s->add_option("--which", ld.which, "frequency, two-phase, harmonic-map or mcf")
      ->capture_default_str();
  s->add_option("--field", ld.field,
                "frequency: caloric catalog (default heat-kernel); two-phase: half-space, dipole "
                "(default); harmonic-map: circle (default), x1x2, constant; mcf: plane, constant "
                "(default), tilted");
  s->add_option("--d", ld.d, "Spatial dimension")->capture_default_str();
  s->add_option("--t", ld.t, "Time")->capture_default_str();
  s->add_option("--n", ld.n, "Lifting factors")->delimiter(',')->capture_default_str();

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, std::cout, std::cerr);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, std::cout, std::cerr);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n\n" << app.help();
    return kUsageError;
  }

  for (auto& [sub, body] : subs) {
    if (!sub->parsed()) continue;
    RunInfo info;
    info.subcommand = sub->get_name();
    info.seed = common.seed;
    info.prefix = common.out.empty() ? "dimlift-" + info.subcommand : common.out;
    if (common.threads > 0) set_default_threads(common.threads);
    const auto start = std::chrono::steady_clock::now();
    try {
      const Report rep = body(info);
      const double wall =
          std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      write_outputs(info, rep, wall, default_threads());
      std::cout << info.subcommand << ": " << (rep.pass ? "pass" : "FAIL") << " (" << info.prefix
                << ".csv, " << info.prefix << ".json)\n";
      for (const auto& f : rep.failures) std::cerr << "  " << f << "\n";
      return rep.pass ? kPass : kCheckFailed;
    } catch (const UsageError& e) {
      std::cerr << "error: " << e.what() << "\n\n" << sub->help();
      return kUsageError;
    } catch (const AccuracyError& e) {
      std::cerr << "accuracy failure: " << e.what() << "\n";
      return kCheckFailed;
    } catch (const std::exception& e) {
      // DomainError, UnsupportedConfiguration and friends.
      std::cerr << "error: " << e.what() << "\n";
      return kUsageError;
    }
  }
  return kUsageError;
}

int run(int argc, const char* const* argv) {
  return run(std::vector<std::string>(argv, argv + argc));
}

}  // namespace dimlift::cli
