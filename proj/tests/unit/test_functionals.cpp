#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "dimlift/errors.hpp"
#include "dimlift/fields.hpp"
#include "dimlift/functionals.hpp"

using namespace dimlift;

namespace {

constexpr double kPi = std::numbers::pi;

template <class F>
double central(F&& f, double x, double h) {
  return (f(x + h) - f(x - h)) / (2.0 * h);
}

}  // namespace

// ---- frequency --------------------------------------------------------------

TEST(Almgren, HomogeneousHarmonicsHaveConstantFrequency) {
  for (double r : {0.5, 1.0, 2.0}) {
    EXPECT_NEAR(almgren(*harmonic_polynomial(HarmonicKind::X1, 3), r).L, 1.0, 1e-8);
    EXPECT_NEAR(almgren(*harmonic_polynomial(HarmonicKind::X1X2, 3), r).L, 2.0, 1e-8);
    EXPECT_NEAR(almgren(*harmonic_polynomial(HarmonicKind::ReZk, 2, 4), r).L, 4.0, 1e-8);
    EXPECT_EQ(almgren(*constant_scalar(3, 2.0), r).L, 0.0);
  }
  EXPECT_THROW(almgren(*constant_scalar(2, 0.0), 1.0), DegenerateDenominator);
  EXPECT_THROW(almgren(*constant_scalar(2, 1.0), 0.0), DomainError);
}

TEST(Almgren, BoundVanishesForRadialQuadratic) {
  // v = |y|^2 / (2N), h = 1: the two terms cancel in closed form and L = 4 / (N + 2).
  for (int N : {2, 3}) {
    auto v = radial_quadratic(N);
    for (double r : {0.5, 1.5}) {
      EXPECT_NEAR(almgren_dL_lower_bound(*v, NonhomTerm::constant(1.0), r), 0.0, 1e-10);
      EXPECT_NEAR(almgren(*v, r).L, 4.0 / (N + 2.0), 1e-10);
    }
  }
  EXPECT_EQ(almgren_dL_lower_bound(*harmonic_polynomial(HarmonicKind::X1, 2), NonhomTerm::zero(), 1.0),
            0.0);
}

TEST(Almgren, BoundAgreesWithBruteForceAndFiniteDifference) {
  const double c = 0.4;
  auto v = poisson_quadratic(2, c);
  const NonhomTerm h = NonhomTerm::constant(c);
  const double r = 1.2;
  // Midpoint sums in polar coordinates.
  const int M = 2000, K = 800;
  double H = 0, bnd = 0, hv = 0, hr = 0;
  for (int j = 0; j < M; ++j) {
    const double th = (j + 0.5) * 2 * kPi / M;
    const Vector w = (Vector(2) << std::cos(th), std::sin(th)).finished();
    const Vector y = r * w;
    H += v->value(y) * v->value(y) * r * 2 * kPi / M;
    bnd += v->value(y) * y.dot(v->gradient(y)) * r * 2 * kPi / M;
    for (int k = 0; k < K; ++k) {
      const double s = (k + 0.5) * r / K;
      const Vector z = s * w;
      const double dA = s * (r / K) * (2 * kPi / M);
      hv += c * v->value(z) * dA;
      hr += c * z.dot(v->gradient(z)) * dA;
    }
  }
  const double brute = 2 * bnd * hv / (H * H) - 2 * hr / H;
  const double bound = almgren_dL_lower_bound(*v, h, r);
  EXPECT_NEAR(bound, brute, 1e-5 * std::max(1.0, std::abs(brute)));
  const double fd = central([&](double s) { return almgren(*v, s).L; }, r, 1e-4);
  EXPECT_GE(fd, bound - 1e-4);
}

TEST(Poon, CaloricPolynomials) {
  for (double t : {0.25, 1.0, 4.0}) {
    const auto a = poon(*caloric_polynomial(CaloricKind::X1, 1), t);
    EXPECT_NEAR(a.H, 2 * t, 1e-9 * t);
    EXPECT_NEAR(a.D, 1.0, 1e-9);
    EXPECT_NEAR(a.L, 0.5, 1e-9);
    const auto b = poon(*caloric_polynomial(CaloricKind::X1Sq, 2), t);
    EXPECT_NEAR(b.H, 8 * t * t, 1e-8 * t * t);
    EXPECT_NEAR(b.D, 8 * t, 1e-8 * t);
    EXPECT_NEAR(b.L, 1.0, 1e-8);
    EXPECT_EQ(poon(*caloric_polynomial(CaloricKind::One, 2), t).L, 0.0);
  }
}

TEST(LiftedFrequency, ExactCasesAndConvergence) {
  for (int n : {2, 5, 40}) {
    EXPECT_NEAR(lifted_frequency(*caloric_polynomial(CaloricKind::X1, 1), LiftConfig(1, n), 0.7), 1.0,
                1e-10);
    EXPECT_EQ(lifted_frequency(*caloric_polynomial(CaloricKind::One, 2), LiftConfig(2, n), 1.0), 0.0);
  }
  EXPECT_NEAR(lifted_frequency(*caloric_polynomial(CaloricKind::X1Sq, 1), LiftConfig(1, 100), 1.0),
              2.0, 0.05);
  auto u = heat_kernel_translate(Vector::Constant(1, 0.7), 3.0);
  const double target = 2 * poon(*u, 1.0).L;
  double prev = INFINITY;
  for (int n : {10, 40, 160}) {
    const double err = std::abs(lifted_frequency(*u, LiftConfig(1, n), 1.0) - target);
    EXPECT_LT(err, prev) << n;
    prev = err;
  }
  EXPECT_LT(prev, 0.05 * target);
  EXPECT_THROW(lifted_frequency(*caloric_polynomial(CaloricKind::X1, 1), LiftConfig(1, 1), 1.0),
               UnsupportedConfiguration);
}

// ---- Carleman ---------------------------------------------------------------

TEST(Carleman, EllipticConstantMatchesScan) {
  EXPECT_DOUBLE_EQ(carleman_elliptic_constant(1.0, 3), 0.25);
  EXPECT_DOUBLE_EQ(carleman_elliptic_constant(1.0, 4), 1.0);
  EXPECT_EQ(carleman_elliptic_constant(2.5, 5), 0.0);
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> g(-6.0, 6.0);
  std::uniform_int_distribution<int> n(1, 9);
  for (int k = 0; k < 50; ++k) {
    const double gamma = g(rng);
    const int N = n(rng);
    double best = INFINITY;
    for (int l = 0; l <= 10000; ++l) {
      best = std::min(best, std::abs((0.5 * N + l + gamma - 2.0) * (0.5 * N + l - gamma)));
    }
    EXPECT_EQ(carleman_elliptic_constant(gamma, N), best) << gamma << " " << N;
  }
}

TEST(Carleman, EllipticInequalityOnBumps) {
  for (BumpFactor f : {BumpFactor::One, BumpFactor::Y1, BumpFactor::Y1Y2}) {
    auto v = radial_bump(3, 1.0, 2.0, 4, f);
    for (double gamma : {0.5, 1.0, 2.3}) {
      const auto rep = carleman_elliptic_check(*v, gamma);
      EXPECT_TRUE(rep.satisfied);
      const auto twice = carleman_elliptic_check(*scaled(v, 2.0), gamma);
      EXPECT_NEAR(twice.lhs, 2 * rep.lhs, 1e-9 * rep.lhs);
      EXPECT_NEAR(twice.rhs, 2 * rep.rhs, 1e-9 * std::max(1.0, rep.rhs));
    }
  }
  const auto trivial = carleman_elliptic_check(*radial_bump(3, 1.0, 2.0, 4), 1.5);
  EXPECT_EQ(trivial.rhs, 0.0);
  EXPECT_TRUE(trivial.satisfied);
  EXPECT_THROW(carleman_elliptic_check(*harmonic_polynomial(HarmonicKind::X1, 3), 1.0), DomainError);
}

TEST(Carleman, ParabolicInequalityOnBumps) {
  auto u = bump_spacetime(1, 1.0, 2.0, 1.0, 2.0, 4);
  // beta = 2 alpha - 3/2 in {0.5, 0.25, 1.1}: eps = 0.5, 0.25, 0.1.
  for (double alpha : {1.0, 0.875, 1.3}) {
    const auto rep = carleman_parabolic_check(*u, alpha);
    EXPECT_TRUE(rep.satisfied);
    EXPECT_NEAR(rep.constant_used, 8.0 / (rep.epsilon * rep.epsilon), 1e-12);
    EXPECT_LE(rep.lhs / rep.rhs_integral, rep.constant_used);
  }
  EXPECT_NEAR(carleman_parabolic_check(*u, 1.3).epsilon, 0.1, 1e-12);
  const auto zero = carleman_parabolic_check(*scaled(u, 0.0), 1.0);
  EXPECT_EQ(zero.lhs, 0.0);
  EXPECT_EQ(zero.rhs_integral, 0.0);
  EXPECT_TRUE(zero.satisfied);
  EXPECT_THROW(carleman_parabolic_check(*u, 1.25), DomainError);  // beta = 1
  EXPECT_THROW(carleman_parabolic_check(*u, 0.5), DomainError);   // beta < 0
}

// ---- two-phase --------------------------------------------------------------

TEST(TwoPhase, Psi) {
  EXPECT_EQ(psi(0.5), 1.0);
  EXPECT_EQ(psi(0.25), 1.5);
  EXPECT_NEAR(psi(std::nextafter(0.25, 0.0)), 1.5, 1e-15);
  EXPECT_EQ(psi(1.0), 0.0);
  EXPECT_THROW(psi(0.0), DomainError);
  EXPECT_THROW(psi(1.5), DomainError);
}

TEST(TwoPhase, SupportFractions) {
  auto [p, m] = half_space_pair_elliptic(3);
  EXPECT_NEAR(support_fraction(*p, 0.7), 0.5, 1e-14);
  EXPECT_NEAR(support_fraction(*constant_scalar(2, 1.0), 1.0), 1.0, 1e-14);
  EXPECT_NEAR(support_fraction(*quadrant_field(2), 1.0), 0.25, 1e-14);
}

TEST(TwoPhase, AcfHalfSpacePairs) {
  auto [p2, m2] = half_space_pair_elliptic(2);
  auto [p3, m3] = half_space_pair_elliptic(3);
  const double phi3 = acf_phi(*p3, *m3, 1.0).value;
  for (double r : {0.5, 1.0, 2.0}) {
    const auto rep = acf_phi(*p2, *m2, r);
    EXPECT_NEAR(rep.value, kPi * kPi / 4, 1e-6);
    EXPECT_NEAR(rep.factor1, kPi * r * r / 2, 1e-9);
    EXPECT_NEAR(rep.s1, 0.5, 1e-14);
    EXPECT_NEAR(acf_phi(*p3, *m3, r).value, phi3, 1e-6);
  }
  EXPECT_EQ(acf_phi(*p2, *constant_scalar(2, 0.0), 1.0).value, 0.0);
  EXPECT_EQ(acf_dphi_lower_bound(*p2, *m2, NonhomTerm::zero(), NonhomTerm::zero(), 1.0), 0.0);
}

TEST(TwoPhase, PerturbedPairBoundBelowDerivative) {
  const double delta = 0.1;
  auto [v1, v2] = perturbed_half_space_pair(2, delta);
  for (double r : {0.5, 1.0, 2.0, 4.0}) {
    const double fd = central([&](double s) { return acf_phi(*v1, *v2, s).value; }, r, 1e-4);
    // phi = pi^2/4 + (4 pi/3) delta r + (pi^2/4) delta^2 r^2.
    EXPECT_NEAR(fd, 4 * kPi * delta / 3 + kPi * kPi * delta * delta * r / 2, 1e-6);
    const double bound =
        acf_dphi_lower_bound(*v1, *v2, NonhomTerm::constant(2 * delta), NonhomTerm::zero(), r);
    EXPECT_TRUE(std::isfinite(bound));
    EXPECT_GE(fd, bound - 1e-4) << r;
  }
}

TEST(TwoPhase, CaffarelliAndLifted) {
  auto [u1, u2] = half_space_pair(2);
  for (double tau : {0.3, 1.0, 2.5}) {
    EXPECT_NEAR(caffarelli_Phi(*u1, *u2, tau).value, 0.25, 1e-8);
    EXPECT_NEAR(caffarelli_Phi(*scaled(u1, 3.0), *u2, tau).value, 9 * 0.25, 1e-8);
    for (int n : {2, 5, 40}) EXPECT_NEAR(lifted_two_phase(*u1, *u2, LiftConfig(2, n), tau), 0.25, 1e-8);
  }
  auto zero = caloric_polynomial(CaloricKind::One, 2);
  EXPECT_EQ(caffarelli_Phi(*u1, *zero, 1.0).value, 0.0);
  EXPECT_EQ(lifted_two_phase(*u1, *zero, LiftConfig(2, 3), 1.0), 0.0);
  EXPECT_THROW(caffarelli_Phi(*u1, *u2, 0.0), DomainError);

  auto [d1, d2] = heat_dipole_pair(1, 2.0);
  const double Phi = caffarelli_Phi(*d1, *d2, 1.0).value;
  double prev = INFINITY;
  for (int n : {5, 20, 80}) {
    const double err = std::abs(lifted_two_phase(*d1, *d2, LiftConfig(1, n), 1.0) - Phi);
    EXPECT_LT(err, prev);
    prev = err;
  }
}

// ---- harmonic maps ----------------------------------------------------------

TEST(HarmonicMaps, EquatorMapDensity) {
  for (double r : {0.25, 1.0, 3.0}) {
    EXPECT_NEAR(hm_phi(*equator_map(3), Vector::Zero(3), r), 8 * kPi, 1e-6);
    EXPECT_NEAR(hm_phi(*equator_map(4), Vector::Zero(4), r), 3 * kPi * kPi, 1e-6);
    EXPECT_EQ(hm_phi(*constant_map(3, 3), Vector::Zero(3), r), 0.0);
  }
  EXPECT_THROW(hm_phi(*equator_map(3), Vector::Zero(3), 0.0), DomainError);
}

TEST(HarmonicMaps, DerivativeBound) {
  auto v = equator_map(3);
  EXPECT_EQ(hm_dphi_lower_bound(*v, VectorNonhomTerm::zero(3), Vector::Zero(3), 1.0), 0.0);
  QuadratureSpec zero_spec;
  zero_spec.abs_tol = 1e-12;
  EXPECT_NEAR(hm_dphi_lower_bound(*v, radial_unit_term(3), Vector::Zero(3), 1.0, zero_spec), 0.0,
              1e-8);
  // theta = x1^2 / 2 solves the equation with H = harmonic_map_defect; the bound
  // must sit below the measured slope.
  auto w = angle_map(AngleKind::HalfX1Sq, 2);
  const Vector y0 = (Vector(2) << 0.3, -0.2).finished();
  for (double r : {0.5, 1.0}) {
    const double fd = central([&](double s) { return hm_phi(*w, y0, s); }, r, 1e-4);
    EXPECT_GE(fd, hm_dphi_lower_bound(*w, harmonic_map_defect(w), y0, r) - 1e-4);
  }
}

TEST(HarmonicMaps, StruweAndLifted) {
  auto circle = angle_map(AngleKind::X1, 1);
  for (double t : {0.5, 1.0, 2.0}) EXPECT_NEAR(struwe_Phi(*circle, t), t, 1e-10);
  EXPECT_EQ(struwe_Phi(*constant_map(2, 2), 1.0), 0.0);
  // Dilation x -> lambda x multiplies the energy density by lambda^2.
  EXPECT_NEAR(struwe_Phi(*angle_map(AngleKind::X1X2, 2, 1.5), 1.0),
              1.5 * 1.5 * struwe_Phi(*angle_map(AngleKind::X1X2, 2), 1.0), 1e-9);
  EXPECT_NEAR(lifted_hm_Phi(*circle, LiftConfig(1, 100), 1.0), 1.0, 0.05);
  EXPECT_EQ(lifted_hm_Phi(*constant_map(1, 2), LiftConfig(1, 10), 1.0), 0.0);
  auto map = angle_map(AngleKind::X1X2, 2);
  const double Phi = struwe_Phi(*map, 1.0);
  double prev = INFINITY;
  for (int n : {10, 40, 160}) {
    const double err = std::abs(lifted_hm_Phi(*map, LiftConfig(2, n), 1.0) - Phi);
    EXPECT_LT(err, prev);
    prev = err;
  }
  EXPECT_THROW(lifted_hm_Phi(*circle, LiftConfig(1, 2), 1.0), UnsupportedConfiguration);
}

// ---- surfaces ---------------------------------------------------------------

TEST(Surfaces, MeanCurvatureAndResidual) {
  const Vector y = (Vector(2) << 0.4, -1.1).finished();
  EXPECT_EQ(graph_mean_curvature(*graph_plane(2, 1.0), y), 0.0);
  EXPECT_EQ(graph_mean_curvature(*graph_linear(y), y), 0.0);
  EXPECT_NEAR(graph_mean_curvature(*graph_paraboloid(3, 0.3), Vector::Zero(3)), 0.9, 1e-15);
  // Divergence form: H = div(grad v / sqrt(1 + |grad v|^2)).
  auto par = graph_paraboloid(2, 0.7);
  const double h = 1e-5;
  double div = 0;
  for (int k = 0; k < 2; ++k) {
    Vector p = y, m = y;
    p[k] += h;
    m[k] -= h;
    auto flux = [&](const Vector& z) {
      const Vector g = par->gradient(z);
      return g[k] / std::sqrt(1 + g.squaredNorm());
    };
    div += (flux(p) - flux(m)) / (2 * h);
  }
  EXPECT_NEAR(graph_mean_curvature(*par, y), div, 1e-8);
  EXPECT_EQ(mcf_residual(*graph_plane(2), y, 0.5), 0.0);
  EXPECT_EQ(mcf_residual(*graph_plane(2, 3.0), y, 0.5), 0.0);
  EXPECT_EQ(mcf_residual(*graph_linear(y), y, 0.5), 0.0);
}

TEST(Surfaces, MinimalSurfaceDensity) {
  const Vector a = (Vector(2) << 0.3, -0.8).finished();
  for (double r : {0.5, 1.0, 2.0}) {
    EXPECT_NEAR(ms_density(*graph_plane(2), Vector::Zero(3), r), 1.0, 1e-8);
    EXPECT_NEAR(ms_density(*graph_linear(a), Vector::Zero(3), r), 1.0, 1e-8);
    for (int N : {2, 3}) {
      Vector w0 = Vector::Zero(N + 1);
      w0[N] = 0.4;
      EXPECT_NEAR(ms_density(*graph_plane(N), w0, r), std::pow(1 - 0.16 / (r * r), 0.5 * N), 1e-6);
    }
  }
  Vector far = Vector::Zero(3);
  far[2] = 5.0;
  EXPECT_THROW(ms_density(*graph_plane(2), far, 1.0), DomainError);
}

TEST(Surfaces, DensityTildeDerivativeIdentity) {
  const Vector origin = Vector::Zero(3);
  const auto flat = ms_density_tilde(*graph_plane(2), NonhomTerm::zero(), origin, 1.0);
  EXPECT_NEAR(flat.theta_tilde, 1.0, 1e-10);
  EXPECT_NEAR(flat.derivative_rhs, 0.0, 1e-12);

  Vector w0 = origin;
  w0[2] = 0.4;
  for (double r : {0.6, 1.0, 2.0}) {
    const auto rep = ms_density_tilde(*graph_plane(2), NonhomTerm::zero(), w0, r);
    EXPECT_NEAR(rep.theta_tilde, ms_density(*graph_plane(2), w0, r), 1e-12);
    const double slope = 2 * 0.16 / (r * r * r);  // d/dr (1 - delta^2/r^2)
    EXPECT_GT(rep.derivative_rhs, 0.0);
    EXPECT_NEAR(rep.derivative_rhs, slope, 1e-4);
  }

  auto par = graph_paraboloid(2, 0.3);
  const NonhomTerm hpar{[&](const Vector& y) { return graph_mean_curvature(*par, y); }, "H"};
  Vector z0 = origin;
  z0[2] = -0.1;
  for (double r : {0.5, 1.0}) {
    const double fd = central(
        [&](double s) { return ms_density_tilde(*par, hpar, z0, s).theta_tilde; }, r, 1e-4);
    EXPECT_NEAR(ms_density_tilde(*par, hpar, z0, r).derivative_rhs, fd, 1e-4);
  }
}

TEST(Surfaces, HuiskenDensity) {
  for (int d : {1, 2}) {
    const double plane = std::pow(4 * kPi, 0.5 * d);
    for (double t : {0.25, 1.0, 3.0}) {
      EXPECT_NEAR(huisken_density(*graph_plane(d), t), plane, 1e-8);
      EXPECT_NEAR(huisken_density(*graph_plane(d, 0.5), t), plane * std::exp(-0.25 / (4 * t)), 1e-8);
      EXPECT_NEAR(huisken_density(*graph_linear(Vector::Constant(d, 0.7)), t), plane, 1e-8);
    }
  }
  EXPECT_THROW(huisken_density(*graph_plane(1), 0.0), DomainError);
}

TEST(Surfaces, LiftedMcfDensity) {
  for (int n : {3, 10, 160}) {
    EXPECT_NEAR(lifted_mcf_density(*graph_plane(1), LiftConfig(1, n), 1.0), std::sqrt(4 * kPi), 1e-8);
  }
  EXPECT_NEAR(lifted_mcf_density(*graph_plane(2), LiftConfig(2, 4), 0.5), 4 * kPi, 1e-8);
  const auto c = graph_plane(1, 0.5);
  const double target = huisken_density(*c, 1.0);
  double prev = INFINITY;
  for (int n : {10, 40, 160}) {
    const double err = std::abs(lifted_mcf_density(*c, LiftConfig(1, n), 1.0) - target);
    EXPECT_LT(err, prev);
    prev = err;
  }
  const auto tilted = graph_linear(Vector::Constant(1, 0.7));
  const double theta = huisken_density(*tilted, 1.0);
  EXPECT_LT(std::abs(lifted_mcf_density(*tilted, LiftConfig(1, 100), 1.0) - theta), 0.05 * theta);
  EXPECT_THROW(lifted_mcf_density(*graph_plane(1), LiftConfig(1, 2), 1.0), UnsupportedConfiguration);
}

// ---- sweeps -----------------------------------------------------------------

TEST(Monotonicity, Basics) {
  const auto grid = linear_grid(0.0, 1.0, 10);
  const auto flat = monotonicity_sweep([](double) { return 3.0; }, grid, 0.0);
  EXPECT_EQ(flat.violations, 0);
  EXPECT_EQ(flat.fd_derivatives.size(), 9u);
  const auto down = monotonicity_sweep([](double x) { return -x; }, grid, 0.0);
  EXPECT_EQ(down.violations, 9);
  EXPECT_DOUBLE_EQ(down.min_slope, -1.0);
  EXPECT_THROW(monotonicity_sweep([](double) { return 0.0; }, linear_grid(0, 1, 5), 0.0), DomainError);
  std::vector<double> bad = grid;
  bad[3] = bad[2];
  EXPECT_THROW(monotonicity_sweep([](double) { return 0.0; }, bad, 0.0), DomainError);
  try {
    monotonicity_sweep([](double x) { return x > 0.5 ? throw DomainError("boom") : x; }, grid, 0.0);
    FAIL();
  } catch (const DomainError& e) {
    EXPECT_NE(std::string(e.what()).find("0.555"), std::string::npos) << e.what();
  }
  const auto g = geometric_grid(0.25, 4.0, 16);
  EXPECT_DOUBLE_EQ(g.front(), 0.25);
  EXPECT_DOUBLE_EQ(g.back(), 4.0);
  EXPECT_NEAR(g[1] / g[0], g[15] / g[14], 1e-12);
}

TEST(Monotonicity, ThreadCountDoesNotChangeReport) {
  auto u = heat_kernel_translate(Vector::Constant(1, 0.7), 3.0);
  const auto grid = linear_grid(0.1, 1.0, 16);
  auto curve = [&](double t) { return poon(*u, t).L; };
  const auto one = monotonicity_sweep(curve, grid, 1e-8, 1);
  const auto four = monotonicity_sweep(curve, grid, 1e-8, 4);
  EXPECT_EQ(one.violations, 0);
  EXPECT_EQ(one.values, four.values);
}

TEST(Monotonicity, ClaimedMonotoneFunctionals) {
  const auto rgrid = linear_grid(0.25, 2.0, 8);
  const auto tgrid = linear_grid(0.1, 1.0, 8);
  auto check = [](const MonotonicityReport& r, const char* what) {
    EXPECT_EQ(r.violations, 0) << what << " min slope " << r.min_slope;
  };
  auto x1x2 = harmonic_polynomial(HarmonicKind::X1X2, 3);
  check(monotonicity_sweep([&](double r) { return almgren(*x1x2, r).L; }, rgrid, 1e-8), "almgren");
  for (CaloricKind k : {CaloricKind::X1, CaloricKind::X1Sq, CaloricKind::X1Cube, CaloricKind::Radial}) {
    auto u = caloric_polynomial(k, 2);
    check(monotonicity_sweep([&](double t) { return poon(*u, t).L; }, tgrid, 1e-8), "poon");
  }
  check(monotonicity_sweep([&](double t) { return poon(*heat_kernel_derivative(Vector::Zero(2), 2.0, {1, 1}), t).L; },
                           tgrid, 1e-8),
        "poon derivative");
  auto [p, m] = half_space_pair_elliptic(2);
  check(monotonicity_sweep([&](double r) { return acf_phi(*p, *m, r).value; }, rgrid, 1e-8), "acf");
  auto [u1, u2] = half_space_pair(2);
  check(monotonicity_sweep([&](double t) { return caffarelli_Phi(*u1, *u2, t).value; }, tgrid, 1e-8),
        "caffarelli");
  check(monotonicity_sweep([&](double r) { return hm_phi(*equator_map(3), Vector::Zero(3), r); }, rgrid,
                           1e-8),
        "hm");
  check(monotonicity_sweep([&](double r) { return ms_density(*graph_plane(2), Vector::Zero(3), r); },
                           rgrid, 1e-8),
        "ms");
  for (auto g : {graph_plane(1), graph_plane(1, 0.5), graph_linear(Vector::Constant(1, 0.7))}) {
    check(monotonicity_sweep([&](double t) { return huisken_density(*g, t); }, tgrid, 1e-8), "huisken");
  }
}
