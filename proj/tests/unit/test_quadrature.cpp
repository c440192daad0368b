#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "dimlift/core_lift.hpp"
#include "dimlift/errors.hpp"
#include "dimlift/quadrature.hpp"

using namespace dimlift;

namespace {

double apply(const Rule1D& r, const std::function<double(double)>& f) {
  double s = 0.0;
  for (std::size_t k = 0; k < r.nodes.size(); ++k) s += r.weights[k] * f(r.nodes[k]);
  return s;
}

double apply(const SphereRule& r, const std::function<double(const Vector&)>& f) {
  double s = 0.0;
  for (std::size_t k = 0; k < r.nodes.size(); ++k) s += r.weights[k] * f(r.nodes[k]);
  return s;
}

}  // namespace

TEST(GaussLegendre, PolynomialExactness) {
  const Rule1D r = gauss_legendre(5, 0.0, 2.0);
  EXPECT_NEAR(apply(r, [](double x) { return std::pow(x, 9); }), 102.4, 1e-12);
  EXPECT_NEAR(r.weight_sum(), 2.0, 1e-14);
}

TEST(GaussJacobi, MomentsOnUnitInterval) {
  // int_0^1 (1-s)^a s^b ds = B(a+1, b+1).
  for (double a : {-0.5, 0.0, 1.5, 30.0}) {
    for (double b : {-0.5, 0.0, 0.5}) {
      const Rule1D r = gauss_jacobi01(8, a, b);
      const double beta = std::exp(std::lgamma(a + 1) + std::lgamma(b + 1) - std::lgamma(a + b + 2));
      EXPECT_NEAR(r.weight_sum(), beta, 1e-13 * beta);
      const double m3 = beta * (b + 1) * (b + 2) * (b + 3) / ((a + b + 2) * (a + b + 3) * (a + b + 4));
      EXPECT_NEAR(apply(r, [](double s) { return s * s * s; }), m3, 1e-13 * beta);
    }
  }
}

TEST(GaussJacobi, ChebyshevCase) {
  // alpha = beta = -1/2 gives Chebyshev nodes cos((2k-1) pi / 2q).
  const Rule1D r = gauss_jacobi(6, -0.5, -0.5);
  for (double w : r.weights) EXPECT_NEAR(w, std::numbers::pi / 6, 1e-13);
}

TEST(GaussLaguerre, GammaMoments) {
  for (double a : {-0.5, 0.0, 0.5}) {
    const Rule1D r = gauss_laguerre(10, a);
    EXPECT_NEAR(r.weight_sum(), std::tgamma(a + 1), 1e-12);
    EXPECT_NEAR(apply(r, [](double s) { return s * s; }), std::tgamma(a + 3), 1e-11);
  }
}

TEST(GaussRules, InvalidParameters) {
  EXPECT_THROW(gauss_jacobi(4, -1.0, 0.0), DomainError);
  EXPECT_THROW(gauss_laguerre(0, 0.0), DomainError);
}

class SphereRuleMoments : public ::testing::TestWithParam<std::tuple<int, AngularRule>> {};

TEST_P(SphereRuleMoments, LowOrderMoments) {
  const auto [N, kind] = GetParam();
  const SphereRule r = sphere_rule(N, kind, 8);
  double total = 0.0;
  for (double w : r.weights) total += w;
  EXPECT_NEAR(total, 1.0, 1e-13);
  for (const Vector& y : r.nodes) EXPECT_NEAR(y.norm(), 1.0, 1e-14);
  const double tol = kind == AngularRule::TensorTrapezoid ? 1e-2
                   : kind == AngularRule::SplitGauss    ? 1e-10
                                                        : 1e-13;
  EXPECT_NEAR(apply(r, [](const Vector& y) { return y[0] * y[0]; }), 1.0 / N, tol);
  EXPECT_NEAR(apply(r, [](const Vector& y) { return y[0]; }), 0.0, 1e-14);
  // E[y1^4] = 3 / (N (N + 2)).
  EXPECT_NEAR(apply(r, [](const Vector& y) { return std::pow(y[0], 4); }), 3.0 / (N * (N + 2.0)), tol);
  // Half-space indicator integrates to one half exactly: no node on y1 = 0.
  EXPECT_NEAR(apply(r, [](const Vector& y) { return y[0] > 0 ? 1.0 : 0.0; }), 0.5, 1e-13);
}

INSTANTIATE_TEST_SUITE_P(
    Rules, SphereRuleMoments,
    ::testing::Combine(::testing::Values(2, 3, 4, 5),
                       ::testing::Values(AngularRule::ProductGauss, AngularRule::TensorTrapezoid,
                                         AngularRule::SplitGauss)),
    [](const auto& info) {
      const int N = std::get<0>(info.param);
      const AngularRule kind = std::get<1>(info.param);
      const char* name = kind == AngularRule::ProductGauss      ? "Product"
                         : kind == AngularRule::TensorTrapezoid ? "Trapezoid"
                                                                : "Split";
      return std::string(name) + "N" + std::to_string(N);
    });

TEST(SphereRule, TabulatedOctahedral) {
  for (int res : {2, 4, 8}) {
    const SphereRule r = sphere_rule(3, AngularRule::Tabulated, res);
    EXPECT_NEAR(apply(r, [](const Vector& y) { return y[0] * y[0]; }), 1.0 / 3, 1e-14);
  }
  for (int res : {4, 8}) {
    const SphereRule r = sphere_rule(3, AngularRule::Tabulated, res);
    EXPECT_NEAR(apply(r, [](const Vector& y) { return y[0] * y[0] * y[1] * y[1]; }), 1.0 / 15, 1e-14);
  }
  EXPECT_EQ(sphere_rule(3, AngularRule::Tabulated, 8).nodes.size(), 26u);
}

TEST(SphereRule, QuadrantFractionIsExactInThePlane) {
  const SphereRule r = sphere_rule(2, AngularRule::ProductGauss, 5);
  EXPECT_DOUBLE_EQ(apply(r, [](const Vector& y) { return y[0] > 0 && y[1] > 0 ? 1.0 : 0.0; }), 0.25);
}

TEST(SphereRule, ZeroSphere) {
  const SphereRule r = sphere_rule(1, AngularRule::ProductGauss, 4);
  ASSERT_EQ(r.nodes.size(), 2u);
  EXPECT_EQ(r.nodes[0][0] + r.nodes[1][0], 0.0);
}

TEST(SphereRule, SplitRuleIntegratesHalfSpaceRestrictionsSpectrally) {
  // E[y1^2 ; y1 > 0] = 1 / (2N), E[y1 ; y1 > 0] = |S^{N-2}| / ((N-1) |S^{N-1}|).
  for (int N : {2, 3, 4}) {
    const SphereRule r = sphere_rule(N, AngularRule::SplitGauss, 8);
    const double half_mean = sphere_area(N - 1) / ((N - 1) * sphere_area(N));
    EXPECT_NEAR(apply(r, [](const Vector& y) { return y[0] > 0 ? y[0] : 0.0; }), half_mean, 1e-13);
    EXPECT_NEAR(apply(r, [](const Vector& y) { return y[0] > 0 ? y[0] * y[0] : 0.0; }), 0.5 / N, 1e-13);
  }
  const SphereRule q = sphere_rule(2, AngularRule::SplitGauss, 8);
  // Quarter circle: int_0^{pi/2} cos(phi) dphi / (2 pi).
  EXPECT_NEAR(apply(q, [](const Vector& y) { return y[0] > 0 && y[1] > 0 ? y[0] : 0.0; }),
              0.5 / std::numbers::pi, 1e-14);
}
