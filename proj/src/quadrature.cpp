#include "dimlift/quadrature.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <numbers>
#include <numeric>

#include "dimlift/errors.hpp"

namespace dimlift {
namespace {

// Golub-Welsch: nodes are eigenvalues of the Jacobi matrix, weights mu0 times the
// squared first eigenvector components. offdiag_sq[k] couples rows k and k+1.
Rule1D golub_welsch(const Vector& diag, const Vector& offdiag_sq, double mu0) {
  const int q = static_cast<int>(diag.size());
  Rule1D rule;
  if (q == 1) {
    rule.nodes = {diag[0]};
    rule.weights = {mu0};
    return rule;
  }
  Eigen::SelfAdjointEigenSolver<Matrix> solver;
  solver.computeFromTridiagonal(diag, offdiag_sq.cwiseSqrt(), Eigen::ComputeEigenvectors);
  if (solver.info() != Eigen::Success) throw AccuracyError("Golub-Welsch eigensolver failed", 0, 0);
  rule.nodes.resize(q);
  rule.weights.resize(q);
  for (int k = 0; k < q; ++k) {
    rule.nodes[k] = solver.eigenvalues()[k];
    const double v0 = solver.eigenvectors()(0, k);
    rule.weights[k] = mu0 * v0 * v0;
  }
  return rule;
}

void check_count(int q) {
  if (q < 1) throw DomainError("quadrature needs at least one node");
}

}  // namespace

double Rule1D::weight_sum() const { return std::accumulate(weights.begin(), weights.end(), 0.0); }

Rule1D Rule1D::normalized() const {
  Rule1D out = *this;
  const double s = weight_sum();
  for (double& w : out.weights) w /= s;
  return out;
}

Rule1D gauss_jacobi(int q, double alpha, double beta) {
  check_count(q);
  if (!(alpha > -1.0) || !(beta > -1.0)) throw DomainError("Gauss-Jacobi needs alpha, beta > -1");
  const double ab = alpha + beta;
  Vector diag(q);
  Vector off(q > 1 ? q - 1 : 0);
  diag[0] = (beta - alpha) / (ab + 2.0);
  for (int k = 1; k < q; ++k) {
    const double s = 2.0 * k + ab;
    diag[k] = (beta * beta - alpha * alpha) / (s * (s + 2.0));
  }
  if (q > 1) {
    off[0] = 4.0 * (alpha + 1.0) * (beta + 1.0) / ((ab + 2.0) * (ab + 2.0) * (ab + 3.0));
    for (int k = 2; k < q; ++k) {
      const double s = 2.0 * k + ab;
      off[k - 1] = 4.0 * k * (k + alpha) * (k + beta) * (k + ab) / (s * s * (s + 1.0) * (s - 1.0));
    }
  }
  const double log_mu0 = (ab + 1.0) * std::log(2.0) + std::lgamma(alpha + 1.0) +
                         std::lgamma(beta + 1.0) - std::lgamma(ab + 2.0);
  return golub_welsch(diag, off, std::exp(log_mu0));
}

Rule1D gauss_jacobi01(int q, double alpha, double beta) {
  Rule1D rule = gauss_jacobi(q, alpha, beta);
  const double scale = std::pow(2.0, -(alpha + beta + 1.0));
  for (std::size_t k = 0; k < rule.nodes.size(); ++k) {
    rule.nodes[k] = 0.5 * (1.0 + rule.nodes[k]);
    rule.weights[k] *= scale;
  }
  return rule;
}

Rule1D gauss_laguerre(int q, double alpha) {
  check_count(q);
  if (!(alpha > -1.0)) throw DomainError("Gauss-Laguerre needs alpha > -1");
  Vector diag(q);
  Vector off(q > 1 ? q - 1 : 0);
  for (int k = 0; k < q; ++k) diag[k] = 2.0 * k + alpha + 1.0;
  for (int k = 1; k < q; ++k) off[k - 1] = k * (k + alpha);
  return golub_welsch(diag, off, std::exp(std::lgamma(alpha + 1.0)));
}

Rule1D gauss_legendre(int q, double a, double b) {
  Rule1D rule = gauss_jacobi(q, 0.0, 0.0);
  const double half = 0.5 * (b - a);
  for (std::size_t k = 0; k < rule.nodes.size(); ++k) {
    rule.nodes[k] = a + half * (rule.nodes[k] + 1.0);
    rule.weights[k] *= half;
  }
  return rule;
}

namespace {

int even(int q) { return q + (q % 2); }

int azimuth_count(int resolution) {
  const int m = 2 * resolution;
  return ((m + 3) / 4) * 4;
}

// Polar-angle factor for sin^m(theta) d theta, returned as (cos, sin, weight).
struct PolarNode {
  double c;
  double s;
  double w;
};

std::vector<PolarNode> polar_nodes(int m, AngularRule rule, int q, bool split) {
  std::vector<PolarNode> out;
  if (split) {
    // Gauss-Jacobi for (1 - |c|)^a on each half, times the smooth (1 + |c|)^a.
    const double a = 0.5 * (m - 1);
    const Rule1D r = gauss_jacobi01(q, a, 0.0);
    for (double sign : {1.0, -1.0}) {
      for (std::size_t k = 0; k < r.nodes.size(); ++k) {
        const double c = r.nodes[k];
        out.push_back({sign * c, std::sqrt(std::max(0.0, 1.0 - c * c)),
                       r.weights[k] * std::pow(1.0 + c, a)});
      }
    }
  } else if (rule == AngularRule::TensorTrapezoid) {
    for (int k = 0; k < q; ++k) {
      const double theta = (k + 0.5) * std::numbers::pi / q;
      out.push_back({std::cos(theta), std::sin(theta), std::pow(std::sin(theta), m)});
    }
  } else {
    const double a = 0.5 * (m - 1);
    const Rule1D r = gauss_jacobi(q, a, a);
    for (std::size_t k = 0; k < r.nodes.size(); ++k) {
      const double c = r.nodes[k];
      out.push_back({c, std::sqrt(std::max(0.0, 1.0 - c * c)), r.weights[k]});
    }
  }
  return out;
}

SphereRule octahedral_rule(int resolution) {
  SphereRule rule;
  auto add_orbit = [&](const std::vector<Vector>& pts, double w) {
    for (const Vector& p : pts) {
      rule.nodes.push_back(p);
      rule.weights.push_back(w);
    }
  };
  std::vector<Vector> axes;
  for (int k = 0; k < 3; ++k) {
    for (double s : {1.0, -1.0}) {
      Vector p = Vector::Zero(3);
      p[k] = s;
      axes.push_back(p);
    }
  }
  std::vector<Vector> corners;
  const double c = 1.0 / std::sqrt(3.0);
  for (double a : {1.0, -1.0})
    for (double b : {1.0, -1.0})
      for (double e : {1.0, -1.0}) corners.push_back((Vector(3) << a * c, b * c, e * c).finished());
  std::vector<Vector> edges;
  const double h = 1.0 / std::sqrt(2.0);
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) {
      for (double a : {1.0, -1.0}) {
        for (double b : {1.0, -1.0}) {
          Vector p = Vector::Zero(3);
          p[i] = a * h;
          p[j] = b * h;
          edges.push_back(p);
        }
      }
    }
  }
  if (resolution <= 2) {
    add_orbit(axes, 1.0 / 6.0);
  } else if (resolution <= 4) {
    add_orbit(axes, 1.0 / 15.0);
    add_orbit(corners, 3.0 / 40.0);
  } else {
    add_orbit(axes, 1.0 / 21.0);
    add_orbit(edges, 4.0 / 105.0);
    add_orbit(corners, 9.0 / 280.0);
  }
  return rule;
}

}  // namespace

SphereRule sphere_rule(int N, AngularRule rule, int resolution) {
  if (N < 1) throw DomainError("sphere rule needs N >= 1");
  if (resolution < 1) throw DomainError("sphere rule needs resolution >= 1");
  SphereRule out;
  if (N == 1) {
    out.nodes = {Vector::Constant(1, 1.0), Vector::Constant(1, -1.0)};
    out.weights = {0.5, 0.5};
    return out;
  }
  if (rule == AngularRule::Tabulated && N == 3) return octahedral_rule(resolution);

  const int M = azimuth_count(resolution);
  // Coordinates: y_1 = cos th_1, y_2 = sin th_1 cos th_2, ..., the last two
  // carry the azimuth. Polar angle k carries the factor sin^{N-1-k}.
  std::vector<std::vector<PolarNode>> polar;
  const bool split = rule == AngularRule::SplitGauss;
  for (int k = 1; k <= N - 2; ++k) {
    polar.push_back(polar_nodes(N - 1 - k, rule, even(resolution), split && k == 1));
  }
  // Azimuth: midpoint nodes, or Gauss-Legendre on each quadrant for the split rule.
  std::vector<double> phis, phi_w;
  if (split) {
    const Rule1D q = gauss_legendre(std::max(2, M / 2), 0.0, 0.5 * std::numbers::pi);
    for (int quadrant = 0; quadrant < 4; ++quadrant) {
      for (std::size_t j = 0; j < q.nodes.size(); ++j) {
        phis.push_back(q.nodes[j] + quadrant * 0.5 * std::numbers::pi);
        phi_w.push_back(q.weights[j]);
      }
    }
  } else {
    for (int j = 0; j < M; ++j) {
      phis.push_back((j + 0.5) * 2.0 * std::numbers::pi / M);
      phi_w.push_back(1.0);
    }
  }

  std::vector<std::size_t> index(polar.size(), 0);
  for (;;) {
    double w = 1.0;
    double prefix = 1.0;
    Vector base(N);
    for (std::size_t k = 0; k < polar.size(); ++k) {
      const PolarNode& p = polar[k][index[k]];
      base[k] = prefix * p.c;
      prefix *= p.s;
      w *= p.w;
    }
    for (std::size_t j = 0; j < phis.size(); ++j) {
      Vector y = base;
      y[N - 2] = prefix * std::cos(phis[j]);
      y[N - 1] = prefix * std::sin(phis[j]);
      out.nodes.push_back(std::move(y));
      out.weights.push_back(w * phi_w[j]);
    }
    std::size_t k = 0;
    while (k < polar.size() && ++index[k] == polar[k].size()) index[k++] = 0;
    if (k == polar.size()) break;
  }
  const double total = std::accumulate(out.weights.begin(), out.weights.end(), 0.0);
  for (double& w : out.weights) w /= total;
  return out;
}

}  // namespace dimlift
