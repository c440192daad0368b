#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "dimlift/core_lift.hpp"
#include "dimlift/errors.hpp"
#include "dimlift/fields.hpp"

using namespace dimlift;

namespace {

Vector vec(std::initializer_list<double> v) {
  Vector out(static_cast<Eigen::Index>(v.size()));
  Eigen::Index k = 0;
  for (double x : v) out[k++] = x;
  return out;
}

}  // namespace

TEST(SphereArea, KnownValues) {
  EXPECT_NEAR(sphere_area(2), 2 * std::numbers::pi, 1e-14);
  EXPECT_NEAR(sphere_area(3), 4 * std::numbers::pi, 1e-13);
  EXPECT_NEAR(sphere_area(4), 19.7392088021787172376689819998, 1e-13);
  EXPECT_NEAR(sphere_area(10), 25.5016403987734544385617758369, 1e-12);
  EXPECT_NEAR(sphere_area(1), 2.0, 1e-15);
}

TEST(SphereArea, LogSpaceStaysFiniteForLargeDimension) {
  EXPECT_NEAR(log_sphere_area(1000), -2032.05776025647386027754336577, 1e-9);
  EXPECT_TRUE(std::isfinite(log_sphere_area(10000)));
  EXPECT_GT(sphere_area(300), 0.0);
  EXPECT_NEAR(std::log(sphere_area(300)), log_sphere_area(300), 1e-10);
}

TEST(SphereArea, RejectsZero) { EXPECT_THROW(sphere_area(0), DomainError); }

TEST(LiftPoint, Examples) {
  EXPECT_TRUE(lift_point(LiftConfig(2, 1), vec({3, -1})).isApprox(vec({3, -1})));
  EXPECT_TRUE(lift_point(LiftConfig(1, 3), vec({1, 2, 3})).isApprox(vec({6})));
  EXPECT_TRUE(lift_point(LiftConfig(2, 2), vec({1, 1, 2, -2})).isApprox(vec({2, 0})));
}

TEST(LiftPoint, LengthMismatchIsDomainError) {
  EXPECT_THROW(lift_point(LiftConfig(2, 2), vec({1, 2, 3})), DomainError);
  EXPECT_THROW(HighDimPoint(LiftConfig(2, 2), vec({1, 2, 3})), DomainError);
}

TEST(LiftPoint, RowMajorIndexing) {
  const LiftConfig cfg(3, 4);
  const HighDimPoint y(cfg, Vector::LinSpaced(12, 0, 11));
  EXPECT_EQ(y.at(1, 2), 6.0);
  EXPECT_EQ(cfg.flat_index(2, 3), 11);
}

TEST(LiftPointTime, Examples) {
  auto a = lift_point_time(LiftConfig(1, 1), vec({2}));
  EXPECT_DOUBLE_EQ(a.point.x[0], 2.0);
  EXPECT_DOUBLE_EQ(a.point.t, 2.0);
  auto b = lift_point_time(LiftConfig(2, 1), vec({1, 1}));
  EXPECT_DOUBLE_EQ(b.point.t, 0.5);
  const LiftConfig cfg(1, 2);
  auto c = lift_point_time(cfg, vec({1, 1}));
  EXPECT_DOUBLE_EQ(c.point.x[0], 2.0);
  EXPECT_DOUBLE_EQ(c.point.t, 1.0);
  EXPECT_DOUBLE_EQ(c.point.x.squaredNorm(), 2.0 * cfg.lifted_dim() * c.point.t);
  EXPECT_FALSE(c.boundary);
}

TEST(LiftPointTime, OriginIsBoundary) {
  auto p = lift_point_time(LiftConfig(2, 3), Vector::Zero(6));
  EXPECT_TRUE(p.boundary);
  EXPECT_EQ(p.point.t, 0.0);
}

TEST(LiftPointTime, CauchySchwarzBoundWithEqualityForConstantRows) {
  std::mt19937_64 rng(7);
  std::normal_distribution<double> g;
  for (int trial = 0; trial < 200; ++trial) {
    const LiftConfig cfg(1 + trial % 3, 1 + trial % 5);
    Vector y(cfg.lifted_dim());
    for (auto& c : y) c = g(rng);
    const auto p = lift_point_time(cfg, y);
    EXPECT_LE(p.point.x.squaredNorm(), 2.0 * cfg.lifted_dim() * p.point.t * (1 + 1e-12));
    Vector rows(cfg.lifted_dim());
    for (int i = 0; i < cfg.d(); ++i)
      for (int j = 0; j < cfg.n(); ++j) rows[cfg.flat_index(i, j)] = y[i];
    const auto q = lift_point_time(cfg, rows);
    EXPECT_NEAR(q.point.x.squaredNorm(), 2.0 * cfg.lifted_dim() * q.point.t,
                1e-12 * q.point.x.squaredNorm());
  }
}

TEST(LiftPoint, SingleStepIsIdentity) {
  const LiftConfig cfg(4, 1);
  const Vector y = vec({0.3, -1.2, 5.0, 2.5});
  EXPECT_TRUE(lift_point(cfg, y).isApprox(y));
}

TEST(Domains, RadiiAndMembership) {
  const LiftConfig cfg(2, 3);
  EXPECT_NEAR(DomainSpec(DomainKind::SphereStn, cfg, 1.5).radius(), std::sqrt(6.0), 1e-15);
  EXPECT_NEAR(DomainSpec(DomainKind::BallBnt, cfg, 1.5).radius(), std::sqrt(18.0), 1e-15);
  EXPECT_NEAR(DomainSpec(DomainKind::BallBtn, cfg, 2.0).radius(), std::sqrt(8.0), 1e-15);
  const DomainSpec cone(DomainKind::ConeKnt, cfg, 1.0);
  EXPECT_TRUE(cone.contains(SpaceTimePoint{vec({1.0, 1.0}), 0.5}));
  EXPECT_FALSE(cone.contains(SpaceTimePoint{vec({3.0, 3.0}), 0.5}));
  EXPECT_FALSE(cone.contains(SpaceTimePoint{vec({0.0, 0.0}), 1.5}));
  const DomainSpec sphere(DomainKind::SphereStn, cfg, 1.0);
  Vector y = Vector::Zero(6);
  y[2] = 2.0;
  EXPECT_TRUE(sphere.contains(y));
  y[2] = 2.1;
  EXPECT_FALSE(sphere.contains(y));
}

TEST(LiftedDerivatives, LinearFieldExample) {
  const LiftConfig cfg(2, 3);
  auto u = caloric_polynomial(CaloricKind::X1, 2);
  const HighDimPoint y(cfg, Vector::LinSpaced(6, 0.1, 0.6));
  const auto D = lifted_derivatives(cfg, *u, y);
  for (int j = 0; j < 3; ++j) {
    EXPECT_DOUBLE_EQ(D.grad_v[cfg.flat_index(0, j)], 1.0);
    EXPECT_DOUBLE_EQ(D.grad_v[cfg.flat_index(1, j)], 0.0);
  }
  EXPECT_DOUBLE_EQ(D.laplacian_v, 0.0);
}

TEST(LiftedDerivatives, QuadraticRadialExample) {
  const LiftConfig cfg(1, 2);
  auto u = caloric_polynomial(CaloricKind::X1Sq, 1);
  const auto D = lifted_derivatives(cfg, *u, HighDimPoint(cfg, vec({1, 1})));
  EXPECT_DOUBLE_EQ(D.radial_v, 4.0);
}

TEST(LiftedDerivatives, CaloricLaplacianReducesToTimeTerm) {
  const LiftConfig cfg(2, 2);
  Vector x0 = vec({0.2, -0.1});
  auto u = heat_kernel_translate(x0, 5.0);
  const HighDimPoint y(cfg, vec({0.4, -0.3, 0.8, 0.5}));
  const auto p = lift_point_time(cfg, y).point;
  const auto D = lifted_derivatives(cfg, *u, y);
  const double expected = (2.0 / 2) * (p.x.dot(u->grad_dt(p.x, p.t)) + p.t * u->dtt(p.x, p.t));
  EXPECT_NEAR(D.laplacian_v, expected, 1e-14);
}

TEST(LiftedDerivatives, OriginRejected) {
  const LiftConfig cfg(1, 2);
  auto u = caloric_polynomial(CaloricKind::X1, 1);
  EXPECT_THROW(lifted_derivatives(cfg, *u, HighDimPoint(cfg, Vector::Zero(2))), DomainError);
}
