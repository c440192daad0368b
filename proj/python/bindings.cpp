#include <pybind11/eigen.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "dimlift/cli.hpp"
#include "dimlift/core_lift.hpp"
#include "dimlift/errors.hpp"
#include "dimlift/fields.hpp"
#include "dimlift/functionals.hpp"
#include "dimlift/montecarlo.hpp"
#include "dimlift/parallel.hpp"
#include "dimlift/weights.hpp"

namespace py = pybind11;
using namespace dimlift;

namespace {

using Release = py::call_guard<py::gil_scoped_release>;

const std::map<std::string, SpatialFn>& test_functions() {
  static const std::map<std::string, SpatialFn> fns = {
      {"one", [](const Vector&) { return 1.0; }},
      {"x1", [](const Vector& x) { return x[0]; }},
      {"x1sq", [](const Vector& x) { return x[0] * x[0]; }},
      {"x1pow4", [](const Vector& x) { return std::pow(x[0], 4); }},
      {"gauss", [](const Vector& x) { return std::exp(-x.squaredNorm()); }}};
  return fns;
}

// Monte Carlo reductions run on worker threads, so test functions come from a
// fixed native catalog rather than Python callables.
std::vector<SpatialFn> lookup(const std::vector<std::string>& names) {
  std::vector<SpatialFn> out;
  for (const auto& n : names) {
    auto it = test_functions().find(n);
    if (it == test_functions().end()) throw DomainError("unknown test function '" + n + "'");
    out.push_back(it->second);
  }
  return out;
}

py::dict as_dict(const PushforwardCheck& c) {
  py::dict d;
  d["mc_value"] = c.mc_value;
  d["mc_std_error"] = c.mc_std_error;
  d["quad_value"] = c.quad_value;
  d["z"] = c.discrepancy_in_std_errors;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Native core: lifting maps, weights, quadrature-backed functionals and the CLI.";

  auto base = py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<UnsupportedConfiguration>(m, "UnsupportedConfiguration", PyExc_ValueError);
  py::register_exception<AccuracyError>(m, "AccuracyError", PyExc_RuntimeError);
  py::register_exception<DegenerateDenominator>(m, "DegenerateDenominator", PyExc_ArithmeticError);
  (void)base;

  m.def("set_threads", &set_default_threads, py::arg("threads"));
  m.def("threads", &default_threads);

  // Lifting.
  m.def("sphere_area", &sphere_area, py::arg("N"));
  m.def(
      "lift_point",
      [](int d, int n, const Vector& y) { return lift_point(LiftConfig(d, n), y); },
      py::arg("d"), py::arg("n"), py::arg("y"));
  m.def(
      "lift_point_time",
      [](int d, int n, const Vector& y) {
        const auto p = lift_point_time(LiftConfig(d, n), y);
        return py::make_tuple(p.point.x, p.point.t);
      },
      py::arg("d"), py::arg("n"), py::arg("y"));

  // Weights.
  m.def("gaussian_weight", &gaussian_weight, py::arg("d"), py::arg("t"), py::arg("x"));
  m.def("finite_weight", &finite_weight, py::arg("d"), py::arg("n"), py::arg("t"), py::arg("x"));
  m.def("ratio_bound", &ratio_bound, py::arg("d"), py::arg("n"));
  m.def(
      "weight_limit_report",
      [](int d, double t, const std::vector<Vector>& grid, const std::vector<int>& ns) {
        const auto r = weight_limit_report(d, t, grid, ns);
        py::dict out;
        out["n"] = r.n_list;
        out["sup_rel_error"] = r.sup_rel_error;
        out["ratios"] = r.ratios;
        out["strictly_decreasing"] = r.strictly_decreasing;
        return out;
      },
      py::arg("d"), py::arg("t"), py::arg("grid"), py::arg("n_list"));

  // Push-forward checks against the native test-function catalog.
  m.def(
      "pushforward_sphere",
      [](const std::vector<std::string>& phis, int d, int n, double t, std::uint64_t seed,
         std::size_t samples) {
        MonteCarloSpec mc;
        mc.seed = seed;
        mc.samples = samples;
        std::vector<PushforwardCheck> res;
        {
          py::gil_scoped_release nogil;
          res = pushforward_check_sphere(lookup(phis), d, n, t, mc);
        }
        py::list out;
        for (const auto& c : res) out.append(as_dict(c));
        return out;
      },
      py::arg("phis"), py::arg("d"), py::arg("n"), py::arg("t"), py::arg("seed") = 0,
      py::arg("samples") = 100000);
  m.def(
      "pushforward_ball",
      [](const std::vector<std::string>& phis, int d, int n, double tau, std::uint64_t seed,
         std::size_t samples) {
        MonteCarloSpec mc;
        mc.seed = seed;
        mc.samples = samples;
        std::vector<SpaceTimeFn> fns;
        for (auto& f : lookup(phis)) fns.push_back([f](const Vector& x, double) { return f(x); });
        std::vector<PushforwardCheck> res;
        {
          py::gil_scoped_release nogil;
          res = pushforward_check_ball(fns, d, n, tau, mc);
        }
        py::list out;
        for (const auto& c : res) out.append(as_dict(c));
        return out;
      },
      py::arg("phis"), py::arg("d"), py::arg("n"), py::arg("tau"), py::arg("seed") = 0,
      py::arg("samples") = 100000);

  // Fields.
  py::class_<ScalarField, std::shared_ptr<ScalarField>>(m, "ScalarField")
      .def_property_readonly("dim", &ScalarField::dim)
      .def_property_readonly("name", &ScalarField::name)
      .def("value", &ScalarField::value)
      .def("gradient", &ScalarField::gradient)
      .def("hessian", &ScalarField::hessian);
  py::class_<SpaceTimeField, std::shared_ptr<SpaceTimeField>>(m, "SpaceTimeField")
      .def_property_readonly("dim", &SpaceTimeField::dim)
      .def_property_readonly("name", &SpaceTimeField::name)
      .def("value", &SpaceTimeField::value)
      .def("gradient", &SpaceTimeField::gradient)
      .def("dt", &SpaceTimeField::dt);
  py::class_<SphereField, std::shared_ptr<SphereField>>(m, "SphereField")
      .def_property_readonly("dim", &SphereField::dim)
      .def_property_readonly("name", &SphereField::name)
      .def("value", &SphereField::value);
  py::class_<GraphSurface, std::shared_ptr<GraphSurface>>(m, "GraphSurface")
      .def_property_readonly("dim", &GraphSurface::dim)
      .def_property_readonly("name", &GraphSurface::name)
      .def("value", &GraphSurface::value, py::arg("y"), py::arg("t") = 0.0);

  // shared_ptr<const T> does not convert implicitly; strip const at the boundary.
  auto mut = [](auto p) { return std::const_pointer_cast<std::remove_const_t<typename decltype(p)::element_type>>(p); };

  m.def("harmonic_polynomial", [mut](const std::string& kind, int N, int k) {
        static const std::map<std::string, HarmonicKind> kinds = {
            {"x1", HarmonicKind::X1}, {"x1x2", HarmonicKind::X1X2}, {"rezk", HarmonicKind::ReZk}};
        auto it = kinds.find(kind);
        if (it == kinds.end()) throw DomainError("harmonic kinds: x1, x1x2, rezk");
        return mut(harmonic_polynomial(it->second, N, k));
      }, py::arg("kind"), py::arg("N"), py::arg("k") = 3);
  m.def("caloric_polynomial", [mut](const std::string& kind, int d) {
        static const std::map<std::string, CaloricKind> kinds = {
            {"one", CaloricKind::One}, {"x1", CaloricKind::X1}, {"x1sq", CaloricKind::X1Sq},
            {"x1cube", CaloricKind::X1Cube}, {"radial", CaloricKind::Radial}};
        auto it = kinds.find(kind);
        if (it == kinds.end()) throw DomainError("caloric kinds: one, x1, x1sq, x1cube, radial");
        return mut(caloric_polynomial(it->second, d));
      }, py::arg("kind"), py::arg("d"));
  m.def("heat_kernel_translate", [mut](const Vector& x0, double s0) {
        return mut(heat_kernel_translate(x0, s0)); }, py::arg("x0"), py::arg("s0"));
  m.def("half_space_pair", [mut](int d) {
        auto [a, b] = half_space_pair(d);
        return py::make_tuple(mut(a), mut(b)); }, py::arg("d"));
  m.def("half_space_pair_elliptic", [mut](int N) {
        auto [a, b] = half_space_pair_elliptic(N);
        return py::make_tuple(mut(a), mut(b)); }, py::arg("N"));
  m.def("heat_dipole_pair", [mut](int d, double s0) {
        auto [a, b] = heat_dipole_pair(d, s0);
        return py::make_tuple(mut(a), mut(b)); }, py::arg("d"), py::arg("s0"));
  m.def("equator_map", [mut](int N) { return mut(equator_map(N)); }, py::arg("N"));
  m.def("angle_map", [mut](const std::string& kind, int N, double scale) {
        static const std::map<std::string, AngleKind> kinds = {
            {"x1", AngleKind::X1}, {"x1x2", AngleKind::X1X2}, {"half_x1sq", AngleKind::HalfX1Sq}};
        auto it = kinds.find(kind);
        if (it == kinds.end()) throw DomainError("angle kinds: x1, x1x2, half_x1sq");
        return mut(angle_map(it->second, N, scale));
      }, py::arg("kind"), py::arg("N"), py::arg("scale") = 1.0);
  m.def("graph_plane", [mut](int N, double c) { return mut(graph_plane(N, c)); },
        py::arg("N"), py::arg("c") = 0.0);
  m.def("graph_linear", [mut](const Vector& a, double c) { return mut(graph_linear(a, c)); },
        py::arg("a"), py::arg("c") = 0.0);

  // Functionals.
  auto freq = [](const FrequencyValues& f) {
    py::dict d;
    d["param"] = f.param;
    d["H"] = f.H;
    d["D"] = f.D;
    d["L"] = f.L;
    return d;
  };
  m.def("almgren", [freq](const ScalarField& v, double r) {
        FrequencyValues f;
        { py::gil_scoped_release nogil; f = almgren(v, r); }
        return freq(f); }, py::arg("v"), py::arg("r"));
  m.def("poon", [freq](const SpaceTimeField& u, double t) {
        FrequencyValues f;
        { py::gil_scoped_release nogil; f = poon(u, t); }
        return freq(f); }, py::arg("u"), py::arg("t"));
  m.def("lifted_frequency", [](const SpaceTimeField& u, int d, int n, double t) {
        return lifted_frequency(u, LiftConfig(d, n), t); },
        py::arg("u"), py::arg("d"), py::arg("n"), py::arg("t"), Release());
  m.def("carleman_elliptic_constant", &carleman_elliptic_constant, py::arg("gamma"), py::arg("N"));
  m.def("acf_phi", [](const ScalarField& a, const ScalarField& b, double r) {
        return acf_phi(a, b, r).value; }, py::arg("v1"), py::arg("v2"), py::arg("r"), Release());
  m.def("psi", &psi, py::arg("s"));
  m.def("caffarelli_Phi", [](const SpaceTimeField& a, const SpaceTimeField& b, double tau) {
        return caffarelli_Phi(a, b, tau).value; }, py::arg("u1"), py::arg("u2"), py::arg("tau"), Release());
  m.def("lifted_two_phase", [](const SpaceTimeField& a, const SpaceTimeField& b, int d, int n, double tau) {
        return lifted_two_phase(a, b, LiftConfig(d, n), tau); },
        py::arg("u1"), py::arg("u2"), py::arg("d"), py::arg("n"), py::arg("tau"), Release());
  m.def("hm_phi", [](const SphereField& v, const Vector& y0, double r) { return hm_phi(v, y0, r); },
        py::arg("v"), py::arg("y0"), py::arg("r"), Release());
  m.def("struwe_Phi", [](const SphereField& u, double t) { return struwe_Phi(u, t); },
        py::arg("u"), py::arg("t"), Release());
  m.def("lifted_hm_Phi", [](const SphereField& u, int d, int n, double t) {
        return lifted_hm_Phi(u, LiftConfig(d, n), t); },
        py::arg("u"), py::arg("d"), py::arg("n"), py::arg("t"), Release());
  m.def("ms_density", [](const GraphSurface& s, const Vector& w0, double r) {
        return ms_density(s, w0, r); }, py::arg("s"), py::arg("w0"), py::arg("r"), Release());
  m.def("huisken_density", [](const GraphSurface& s, double t) { return huisken_density(s, t); },
        py::arg("u"), py::arg("t"), Release());
  m.def("mcf_residual", &mcf_residual, py::arg("u"), py::arg("x"), py::arg("t"));
  m.def("lifted_mcf_density", [](const GraphSurface& s, int d, int n, double t) {
        return lifted_mcf_density(s, LiftConfig(d, n), t); },
        py::arg("u"), py::arg("d"), py::arg("n"), py::arg("t"), Release());

  m.def("monotonicity_sweep", [](const std::function<double(double)>& curve,
                                 const std::vector<double>& grid, double tol) {
        const auto r = monotonicity_sweep(curve, grid, tol, 1);
        py::dict d;
        d["values"] = r.values;
        d["fd_derivatives"] = r.fd_derivatives;
        d["min_slope"] = r.min_slope;
        d["violations"] = r.violations;
        return d;
      }, py::arg("curve"), py::arg("grid"), py::arg("tol"));
  m.def("linear_grid", &linear_grid, py::arg("a"), py::arg("b"), py::arg("k"));
  m.def("geometric_grid", &geometric_grid, py::arg("a"), py::arg("b"), py::arg("k"));

  m.def("cli_run", [](std::vector<std::string> args) {
        args.insert(args.begin(), "dimlift");
        return cli::run(args); }, py::arg("args"), Release(),
        "Run a CLI subcommand in-process; returns the exit code.");

  m.attr("__version__") = "0.1.0";
}
