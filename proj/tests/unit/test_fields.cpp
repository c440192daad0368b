#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "dimlift/errors.hpp"
#include "dimlift/fields.hpp"
#include "dimlift/self_check.hpp"
#include "dimlift/weights.hpp"

using namespace dimlift;

namespace {

std::vector<Vector> random_points(int N, int count, double lo, double hi, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(lo, hi);
  std::vector<Vector> out;
  for (int k = 0; k < count; ++k) {
    Vector y(N);
    for (auto& c : y) c = u(rng);
    out.push_back(y);
  }
  return out;
}

std::vector<SpaceTimePoint> random_st(int d, int count, double t_lo, double t_hi, double xr, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> ux(-xr, xr), ut(t_lo, t_hi);
  std::vector<SpaceTimePoint> out;
  for (int k = 0; k < count; ++k) {
    Vector x(d);
    for (auto& c : x) c = ux(rng);
    out.push_back({x, ut(rng)});
  }
  return out;
}

// Points avoiding a band around x1 = 0 where positive parts have a kink.
std::vector<SpaceTimePoint> away_from_kink(std::vector<SpaceTimePoint> pts) {
  std::vector<SpaceTimePoint> out;
  for (auto& p : pts)
    if (std::abs(p.x[0]) > 1e-3) out.push_back(p);
  return out;
}

}  // namespace

TEST(HarmonicPolynomials, LaplacianAndDegree) {
  const auto pts = random_points(3, 100, -2, 2, 1);
  struct Case {
    ScalarFieldPtr v;
    int degree;
  };
  for (const Case& c : {Case{harmonic_polynomial(HarmonicKind::X1, 3), 1},
                        Case{harmonic_polynomial(HarmonicKind::X1X2, 3), 2},
                        Case{harmonic_polynomial(HarmonicKind::ReZk, 3, 3), 3},
                        Case{harmonic_polynomial(HarmonicKind::ReZk, 3, 5), 5}}) {
    EXPECT_EQ(c.v->degree().value(), c.degree);
    for (const Vector& y : pts) EXPECT_NEAR(c.v->hessian(y).trace(), 0.0, 1e-12);
    EXPECT_LT(self_check(*c.v, pts).worst_derivative(), 1e-6) << c.v->name();
  }
  Vector y(3);
  y << 2.0, 1.0, 0.5;
  EXPECT_NEAR(harmonic_polynomial(HarmonicKind::ReZk, 3, 3)->value(y), 8.0 - 3 * 2.0 * 1.0, 1e-14);
  EXPECT_THROW(harmonic_polynomial(HarmonicKind::X1, 1), DomainError);
}

TEST(CaloricPolynomials, ResidualAndDerivatives) {
  for (int d : {1, 2, 3}) {
    const auto pts = random_st(d, 100, 0.1, 2.0, 2.0, 2 + d);
    for (CaloricKind k : {CaloricKind::One, CaloricKind::X1, CaloricKind::X1Sq, CaloricKind::X1Cube,
                          CaloricKind::Radial}) {
      auto u = caloric_polynomial(k, d);
      const auto rep = self_check(*u, pts);
      EXPECT_LT(rep.worst_derivative(), 1e-6) << u->name();
      EXPECT_EQ(rep.residual, 0.0) << u->name();
    }
  }
  Vector x(3);
  x << 1.0, 2.0, 3.0;
  EXPECT_DOUBLE_EQ(caloric_polynomial(CaloricKind::Radial, 3)->value(x, 0.5), 14.0 - 3.0);
  EXPECT_DOUBLE_EQ(caloric_polynomial(CaloricKind::X1Cube, 3)->laplacian(x, 0.5), 6.0);
  EXPECT_DOUBLE_EQ(caloric_polynomial(CaloricKind::X1Cube, 3)->dt(x, 0.5), -6.0);
}

TEST(HeatKernel, TranslateValuesAndSelfCheck) {
  for (int d : {1, 2, 3}) {
    auto u = heat_kernel_translate(Vector::Zero(d), 2.0);
    EXPECT_NEAR(u->value(Vector::Zero(d), 1.0), std::pow(4 * std::numbers::pi, -0.5 * d), 1e-15);
    Vector x0 = Vector::Constant(d, 0.3);
    auto v = heat_kernel_translate(x0, 3.0);
    const auto rep = self_check(*v, random_st(d, 100, 0.1, 2.0, 2.0, 10 + d));
    EXPECT_LT(rep.worst_derivative(), 1e-6);
    EXPECT_LT(rep.residual, 1e-10);
    // Matches the heat kernel itself.
    Vector x = Vector::Constant(d, -0.4);
    EXPECT_NEAR(v->value(x, 1.0), gaussian_weight(d, 2.0, x - x0), 1e-15);
  }
  auto u = heat_kernel_translate(Vector::Zero(1), 2.0);
  EXPECT_THROW(u->value(Vector::Zero(1), 2.0), DomainError);
}

TEST(HeatKernel, DerivativeFieldsAreCaloric) {
  for (int d : {1, 2}) {
    std::vector<int> alpha(d, 0);
    alpha[0] = 2;
    auto u = heat_kernel_derivative(Vector::Zero(d), 2.5, alpha, -1.0);
    const auto rep = self_check(*u, random_st(d, 100, 0.1, 2.0, 2.0, 20 + d));
    EXPECT_LT(rep.worst_derivative(), 1e-6);
    EXPECT_LT(rep.residual, 1e-10);
  }
  auto [p, m] = heat_dipole_pair(2, 3.0);
  Vector x(2);
  x << 0.5, -0.2;
  const double s = 3.0 - 1.0;
  EXPECT_NEAR(p->value(x, 1.0), 0.5 / (2 * s) * gaussian_weight(2, s, x), 1e-15);
  EXPECT_EQ(m->value(x, 1.0), 0.0);
}

TEST(HalfSpacePair, Basics) {
  auto [u1, u2] = half_space_pair(2);
  Vector x(2);
  x << 1.0, 0.3;
  EXPECT_EQ(u1->value(x, 0.4), 1.0);
  EXPECT_EQ(u2->value(x, 0.4), 0.0);
  EXPECT_EQ(u1->value(Vector::Zero(2), 0.0), 0.0);
  for (const auto& p : random_st(2, 10000, 0.1, 2, 3, 99)) {
    EXPECT_EQ(u1->value(p.x, p.t) * u2->value(p.x, p.t), 0.0);
    const double g = u1->gradient(p.x, p.t).squaredNorm();
    EXPECT_EQ(g, p.x[0] > 0 ? 1.0 : 0.0);
  }
  const auto rep = self_check(*u2, away_from_kink(random_st(2, 100, 0.1, 2, 2, 5)));
  EXPECT_LT(rep.worst_derivative(), 1e-6);
}

TEST(EquatorMap, EnergyAndUnitNorm) {
  auto v = equator_map(3);
  Vector y(3);
  y << 2.0, 0.0, 0.0;
  EXPECT_NEAR(v->energy_density(y), 0.5, 1e-15);
  const auto pts = random_points(3, 100, 0.2, 2.0, 4);
  const auto rep = self_check(*v, pts);
  EXPECT_LT(rep.gradient, 1e-6);
  EXPECT_LT(rep.laplacian, 1e-4);
  EXPECT_LT(rep.hessian, 1e-12);
  EXPECT_LT(rep.unit_norm, 1e-12);
  EXPECT_THROW(v->value(Vector::Zero(3)), DomainError);
  EXPECT_THROW(equator_map(2), DomainError);
}

TEST(AngleMaps, SelfCheckAndDefect) {
  for (AngleKind k : {AngleKind::X1, AngleKind::X1X2, AngleKind::HalfX1Sq}) {
    auto v = angle_map(k, 2, 1.3);
    const auto pts = random_points(2, 100, -2, 2, 6);
    const auto rep = self_check(*v, pts);
    EXPECT_LT(rep.gradient, 1e-6);
    EXPECT_LT(rep.laplacian, 1e-4);
    EXPECT_LT(rep.unit_norm, 1e-12);
  }
  // The circle map solves the harmonic map equation.
  auto circle = angle_map(AngleKind::X1, 1);
  const auto H = harmonic_map_defect(circle);
  EXPECT_LT(H(Vector::Constant(1, 0.7)).norm(), 1e-15);
  // x1^2/2 has Laplacian 1: H = (sin th, -cos th).
  auto half = angle_map(AngleKind::HalfX1Sq, 2);
  Vector y(2);
  y << 0.9, 0.1;
  const double th = 0.5 * 0.81;
  const Vector h = harmonic_map_defect(half)(y);
  EXPECT_NEAR(h[0], std::sin(th), 1e-14);
  EXPECT_NEAR(h[1], -std::cos(th), 1e-14);
}

TEST(Bumps, SupportNormalisationAndSelfCheck) {
  auto u = bump_spacetime(2, 1.0, 2.0, 1.0, 2.0, 4);
  Vector c(2);
  c << 1.5, 0.0;
  EXPECT_NEAR(u->value(c, 1.5), 1.0, 1e-15);
  Vector out(2);
  out << 0.5, 0.0;
  EXPECT_EQ(u->value(out, 1.5), 0.0);
  EXPECT_EQ(u->laplacian(out, 1.5) + u->dt(out, 1.5), 0.0);
  EXPECT_EQ(u->value(c, 2.5), 0.0);
  const auto rep = self_check(*u, random_st(2, 100, 0.9, 2.1, 2.2, 12));
  EXPECT_LT(rep.worst_derivative(), 1e-6);
  EXPECT_THROW(bump_spacetime(1, 2.0, 1.0, 1.0, 2.0, 4), DomainError);
  EXPECT_THROW(bump_spacetime(1, 1.0, 2.0, 1.0, 2.0, 2), DomainError);

  for (BumpFactor f : {BumpFactor::One, BumpFactor::Y1, BumpFactor::Y1Y2}) {
    auto v = radial_bump(3, 1.0, 2.0, 4, f);
    EXPECT_LT(self_check(*v, random_points(3, 100, -2.2, 2.2, 13)).worst_derivative(), 1e-6);
    EXPECT_TRUE(v->support().has_value());
  }
}

TEST(CaloricFromData, ConstantAndLinearData) {
  GridData ones, lin;
  for (int i = 0; i <= 640; ++i) {
    const double xi = -16.0 + 32.0 * i / 640;
    ones.points.push_back(Vector::Constant(1, xi));
    ones.values.push_back(1.0);
    lin.points.push_back(Vector::Constant(1, xi));
    lin.values.push_back(xi);
  }
  auto u = caloric_from_data(ones, 1.0);
  auto v = caloric_from_data(lin, 1.0);
  for (double t : {0.0, 0.5, 0.9}) {
    for (double x : {-1.0, 0.0, 0.7}) {
      const Vector p = Vector::Constant(1, x);
      EXPECT_NEAR(u->value(p, t), 1.0, 1e-10);
      EXPECT_NEAR(v->value(p, t), x, 1e-10);
      EXPECT_LT(std::abs(u->laplacian(p, t) + u->dt(p, t)), 1e-6);
    }
  }
  EXPECT_THROW(u->value(Vector::Zero(1), 0.9995), AccuracyError);
  const auto rep = self_check(*v, random_st(1, 100, 0.0, 0.8, 2.0, 3));
  EXPECT_LT(rep.worst_derivative(), 1e-6);
}

TEST(CaloricFromData, ReadsCsvWithHeader) {
  std::stringstream ss("x1,x2,value\n0,0,1\n1,0,2\n0,1,3\n1,1,4\n");
  const GridData g = read_grid_csv(ss);
  ASSERT_EQ(g.points.size(), 4u);
  EXPECT_EQ(g.points[2][1], 1.0);
  EXPECT_EQ(g.values[3], 4.0);
  std::stringstream ragged("0,0,1\n1,0\n");
  EXPECT_THROW(read_grid_csv(ragged), DomainError);
  GridData holes;
  holes.points = {Vector::Zero(2), Vector::Ones(2)};
  holes.values = {1.0, 1.0};
  EXPECT_THROW(caloric_from_data(holes, 1.0), DomainError);
}

TEST(Graphs, CatalogDerivatives) {
  Vector a(2);
  a << 0.3, -0.8;
  for (auto g : {graph_plane(2, 1.0), graph_linear(a), graph_paraboloid(2, 0.4)}) {
    EXPECT_LT(self_check(*g, random_points(2, 100, -2, 2, 8)).worst_derivative(), 1e-6);
  }
}

TEST(NonhomTerms, Basics) {
  EXPECT_EQ(NonhomTerm::zero()(Vector::Ones(3)), 0.0);
  EXPECT_EQ(NonhomTerm::constant(2.5)(Vector::Ones(3)), 2.5);
  Vector y(3);
  y << 0, 3, 4;
  EXPECT_NEAR(radial_unit_term(3)(y)[2], 0.8, 1e-15);
}

TEST(LiftCheck, CatalogFieldsMatchFiniteDifferences) {
  const std::vector<std::pair<int, int>> configs = {{1, 2}, {1, 5}, {1, 12}, {2, 3}, {2, 6}, {3, 4}};
  for (const auto& [d, n] : configs) {
    const LiftConfig cfg(d, n);
    std::vector<int> alpha(d, 0);
    alpha[0] = 1;
    const std::vector<SpaceTimeFieldPtr> fields = {
        caloric_polynomial(CaloricKind::X1, d),
        caloric_polynomial(CaloricKind::X1Sq, d),
        caloric_polynomial(CaloricKind::X1Cube, d),
        caloric_polynomial(CaloricKind::Radial, d),
        heat_kernel_translate(Vector::Constant(d, 0.3), 4.0),
        heat_kernel_derivative(Vector::Zero(d), 4.0, alpha),
    };
    const auto ys = random_points(cfg.lifted_dim(), 100, -0.6, 0.6, 100 + 10 * d + n);
    for (const auto& u : fields) {
      const LiftCheckReport rep = lift_check(cfg, *u, ys);
      EXPECT_EQ(rep.points, 100);
      EXPECT_LT(rep.grad_v, 1e-6) << u->name() << " d=" << d << " n=" << n;
      EXPECT_LT(rep.radial_v, 1e-6) << u->name();
      EXPECT_LT(rep.gradsq_v, 1e-6) << u->name();
      EXPECT_LT(rep.laplacian_v, 1e-4) << u->name();
    }
  }
}
