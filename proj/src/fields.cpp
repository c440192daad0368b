#include "dimlift/fields.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <fstream>
#include <map>
#include <numbers>
#include <sstream>
#include <string>

#include "dimlift/errors.hpp"

namespace dimlift {

NonhomTerm NonhomTerm::zero() {
  return {[](const Vector&) { return 0.0; }, "0"};
}

NonhomTerm NonhomTerm::constant(double c) {
  return {[c](const Vector&) { return c; }, std::to_string(c)};
}

VectorNonhomTerm VectorNonhomTerm::zero(int m) {
  return {[m](const Vector&) { return Vector::Zero(m).eval(); }, "0"};
}

namespace {

void check_point(const Vector& y, int N) {
  if (y.size() != N) throw DomainError("point dimension does not match the field");
}

void check_dim(int N, int min_dim, const char* what) {
  if (N < min_dim) throw DomainError(std::string(what) + " needs dimension >= " + std::to_string(min_dim));
}

Vector unit(int N, int k) {
  Vector e = Vector::Zero(N);
  e[k] = 1.0;
  return e;
}

// (1 - s^2)^k on (lo, hi) with s the affine image onto (-1, 1); zero outside.
struct Profile {
  double lo;
  double hi;
  int k;

  double scale() const { return 2.0 / (hi - lo); }
  double s(double x) const { return (2.0 * x - lo - hi) / (hi - lo); }
  bool inside(double x) const { return x > lo && x < hi; }

  double f(double x) const {
    if (!inside(x)) return 0.0;
    const double q = 1.0 - s(x) * s(x);
    return std::pow(q, k);
  }
  double f1(double x) const {
    if (!inside(x)) return 0.0;
    const double z = s(x);
    const double q = 1.0 - z * z;
    return k * std::pow(q, k - 1) * (-2.0 * z) * scale();
  }
  double f2(double x) const {
    if (!inside(x)) return 0.0;
    const double z = s(x);
    const double q = 1.0 - z * z;
    const double a = scale();
    return (k * (k - 1.0) * std::pow(q, k - 2) * 4.0 * z * z - 2.0 * k * std::pow(q, k - 1)) * a * a;
  }
};

Profile make_profile(double lo, double hi, int k) {
  if (!(lo < hi)) throw DomainError("bump window must satisfy lo < hi");
  if (k < 3) throw DomainError("bump smoothness k must be at least 3");
  return Profile{lo, hi, k};
}

// ---- elliptic ---------------------------------------------------------------

class ReZkField final : public ScalarField {
 public:
  ReZkField(int N, int k) : N_(N), k_(k) {
    check_dim(N, 2, "Re z^k");
    if (k < 1) throw DomainError("Re z^k needs k >= 1");
  }
  int dim() const override { return N_; }
  double value(const Vector& y) const override {
    check_point(y, N_);
    return power(z(y), k_).real();
  }
  Vector gradient(const Vector& y) const override {
    check_point(y, N_);
    const std::complex<double> p = static_cast<double>(k_) * power(z(y), k_ - 1);
    Vector g = Vector::Zero(N_);
    g[0] = p.real();
    g[1] = -p.imag();
    return g;
  }
  Matrix hessian(const Vector& y) const override {
    check_point(y, N_);
    Matrix H = Matrix::Zero(N_, N_);
    if (k_ < 2) return H;
    const std::complex<double> p = static_cast<double>(k_ * (k_ - 1)) * power(z(y), k_ - 2);
    H(0, 0) = p.real();
    H(1, 1) = -p.real();
    H(0, 1) = H(1, 0) = -p.imag();
    return H;
  }
  double laplacian(const Vector&) const override { return 0.0; }
  std::optional<int> degree() const override { return k_; }
  std::string name() const override { return "re_z" + std::to_string(k_); }

 private:
  static std::complex<double> z(const Vector& y) { return {y[0], y[1]}; }
  static std::complex<double> power(std::complex<double> z, int k) {
    std::complex<double> out = 1.0;
    for (int i = 0; i < k; ++i) out *= z;
    return out;
  }
  int N_;
  int k_;
};

class PositivePartScalar final : public ScalarField {
 public:
  PositivePartScalar(ScalarFieldPtr v, double sign) : v_(std::move(v)), sign_(sign) {
    if (sign != 1.0 && sign != -1.0) throw DomainError("positive part sign must be +1 or -1");
  }
  int dim() const override { return v_->dim(); }
  double value(const Vector& y) const override { return std::max(sign_ * v_->value(y), 0.0); }
  Vector gradient(const Vector& y) const override {
    return active(y) ? Vector(sign_ * v_->gradient(y)) : Vector::Zero(dim()).eval();
  }
  Matrix hessian(const Vector& y) const override {
    return active(y) ? Matrix(sign_ * v_->hessian(y)) : Matrix::Zero(dim(), dim()).eval();
  }
  double laplacian(const Vector& y) const override {
    return active(y) ? sign_ * v_->laplacian(y) : 0.0;
  }
  Smoothness smoothness() const override { return Smoothness::LipschitzAe; }
  std::string name() const override {
    return "(" + v_->name() + (sign_ > 0 ? ")+" : ")-");
  }

 private:
  bool active(const Vector& y) const { return sign_ * v_->value(y) > 0.0; }
  ScalarFieldPtr v_;
  double sign_;
};

class QuadrantField final : public ScalarField {
 public:
  explicit QuadrantField(int N) : N_(N) { check_dim(N, 2, "quadrant field"); }
  int dim() const override { return N_; }
  double value(const Vector& y) const override {
    check_point(y, N_);
    return std::max(y[0], 0.0) * std::max(y[1], 0.0);
  }
  Vector gradient(const Vector& y) const override {
    check_point(y, N_);
    Vector g = Vector::Zero(N_);
    if (y[0] > 0.0 && y[1] > 0.0) {
      g[0] = y[1];
      g[1] = y[0];
    }
    return g;
  }
  Matrix hessian(const Vector& y) const override {
    check_point(y, N_);
    Matrix H = Matrix::Zero(N_, N_);
    if (y[0] > 0.0 && y[1] > 0.0) H(0, 1) = H(1, 0) = 1.0;
    return H;
  }
  Smoothness smoothness() const override { return Smoothness::LipschitzAe; }
  std::string name() const override { return "quadrant"; }

 private:
  int N_;
};

class RadialBump final : public ScalarField {
 public:
  RadialBump(int N, double r_in, double r_out, int k, BumpFactor factor)
      : N_(N), profile_(make_profile(r_in, r_out, k)), factor_(factor) {
    check_dim(N, 1, "radial bump");
    if (!(r_in > 0.0)) throw DomainError("radial bump needs r_in > 0");
    if (factor == BumpFactor::Y1Y2) check_dim(N, 2, "y1 y2 bump factor");
  }
  int dim() const override { return N_; }
  double value(const Vector& y) const override {
    check_point(y, N_);
    return profile_.f(y.norm()) * p(y);
  }
  Vector gradient(const Vector& y) const override {
    check_point(y, N_);
    const double rho = y.norm();
    if (!profile_.inside(rho)) return Vector::Zero(N_);
    const Vector gR = profile_.f1(rho) * y / rho;
    return p(y) * gR + profile_.f(rho) * grad_p(y);
  }
  Matrix hessian(const Vector& y) const override {
    check_point(y, N_);
    const double rho = y.norm();
    if (!profile_.inside(rho)) return Matrix::Zero(N_, N_);
    const Vector u = y / rho;
    const Matrix uu = u * u.transpose();
    const Matrix HR = profile_.f2(rho) * uu +
                      (profile_.f1(rho) / rho) * (Matrix::Identity(N_, N_) - uu);
    const Vector gR = profile_.f1(rho) * u;
    const Vector gp = grad_p(y);
    return p(y) * HR + gR * gp.transpose() + gp * gR.transpose() + profile_.f(rho) * hess_p();
  }
  std::optional<Annulus> support() const override { return Annulus{profile_.lo, profile_.hi}; }
  std::string name() const override {
    static const char* names[] = {"bump", "bump_y1", "bump_y1y2"};
    return names[static_cast<int>(factor_)];
  }

 private:
  double p(const Vector& y) const {
    switch (factor_) {
      case BumpFactor::One:
        return 1.0;
      case BumpFactor::Y1:
        return y[0];
      case BumpFactor::Y1Y2:
        return y[0] * y[1];
    }
    return 0.0;
  }
  Vector grad_p(const Vector& y) const {
    Vector g = Vector::Zero(N_);
    if (factor_ == BumpFactor::Y1) g[0] = 1.0;
    if (factor_ == BumpFactor::Y1Y2) {
      g[0] = y[1];
      g[1] = y[0];
    }
    return g;
  }
  Matrix hess_p() const {
    Matrix H = Matrix::Zero(N_, N_);
    if (factor_ == BumpFactor::Y1Y2) H(0, 1) = H(1, 0) = 1.0;
    return H;
  }
  int N_;
  Profile profile_;
  BumpFactor factor_;
};

class ScaledScalar final : public ScalarField {
 public:
  ScaledScalar(ScalarFieldPtr v, double c) : v_(std::move(v)), c_(c) {}
  int dim() const override { return v_->dim(); }
  double value(const Vector& y) const override { return c_ * v_->value(y); }
  Vector gradient(const Vector& y) const override { return c_ * v_->gradient(y); }
  Matrix hessian(const Vector& y) const override { return c_ * v_->hessian(y); }
  double laplacian(const Vector& y) const override { return c_ * v_->laplacian(y); }
  Smoothness smoothness() const override { return v_->smoothness(); }
  std::optional<int> degree() const override { return v_->degree(); }
  std::optional<Annulus> support() const override { return v_->support(); }
  std::string name() const override { return std::to_string(c_) + "*" + v_->name(); }

 private:
  ScalarFieldPtr v_;
  double c_;
};

}  // namespace

QuadraticField::QuadraticField(double c, Vector a, Matrix A, std::string name,
                               std::optional<int> degree)
    : c_(c), a_(std::move(a)), A_(std::move(A)), name_(std::move(name)), degree_(degree) {
  if (a_.size() < 1) throw DomainError("quadratic field needs dimension >= 1");
  if (A_.rows() != a_.size() || A_.cols() != a_.size()) throw DomainError("quadratic form has the wrong shape");
  A_ = 0.5 * (A_ + A_.transpose()).eval();
}

double QuadraticField::value(const Vector& y) const {
  check_point(y, dim());
  return c_ + a_.dot(y) + 0.5 * y.dot(A_ * y);
}

Vector QuadraticField::gradient(const Vector& y) const {
  check_point(y, dim());
  return a_ + A_ * y;
}

Matrix QuadraticField::hessian(const Vector& y) const {
  check_point(y, dim());
  return A_;
}

ScalarFieldPtr harmonic_polynomial(HarmonicKind kind, int N, int k) {
  check_dim(N, 2, "harmonic polynomial");
  switch (kind) {
    case HarmonicKind::X1:
      return std::make_shared<QuadraticField>(0.0, unit(N, 0), Matrix::Zero(N, N), "x1", 1);
    case HarmonicKind::X1X2: {
      Matrix A = Matrix::Zero(N, N);
      A(0, 1) = A(1, 0) = 1.0;
      return std::make_shared<QuadraticField>(0.0, Vector::Zero(N), A, "x1x2", 2);
    }
    case HarmonicKind::ReZk:
      return std::make_shared<ReZkField>(N, k);
  }
  throw DomainError("unsupported harmonic polynomial kind");
}

ScalarFieldPtr constant_scalar(int N, double c) {
  check_dim(N, 1, "constant field");
  return std::make_shared<QuadraticField>(c, Vector::Zero(N), Matrix::Zero(N, N), "const", 0);
}

ScalarFieldPtr poisson_quadratic(int N, double c) {
  check_dim(N, 2, "poisson quadratic");
  Matrix A = Matrix::Zero(N, N);
  A(1, 1) = c;
  return std::make_shared<QuadraticField>(0.0, unit(N, 0), A, "y1+c/2*y2^2");
}

ScalarFieldPtr radial_quadratic(int N) {
  check_dim(N, 1, "radial quadratic");
  return std::make_shared<QuadraticField>(0.0, Vector::Zero(N),
                                          Matrix::Identity(N, N) / static_cast<double>(N),
                                          "|y|^2/(2N)", 2);
}

ScalarFieldPtr positive_part(ScalarFieldPtr v, double sign) {
  return std::make_shared<PositivePartScalar>(std::move(v), sign);
}

std::pair<ScalarFieldPtr, ScalarFieldPtr> half_space_pair_elliptic(int N) {
  check_dim(N, 1, "half-space pair");
  auto y1 = std::make_shared<QuadraticField>(0.0, unit(N, 0), Matrix::Zero(N, N), "y1", 1);
  return {positive_part(y1, 1.0), positive_part(y1, -1.0)};
}

std::pair<ScalarFieldPtr, ScalarFieldPtr> perturbed_half_space_pair(int N, double delta) {
  check_dim(N, 1, "perturbed half-space pair");
  if (!(delta >= 0.0)) throw DomainError("perturbation must be non-negative");
  Matrix A = Matrix::Zero(N, N);
  A(0, 0) = 2.0 * delta;
  auto q = std::make_shared<QuadraticField>(0.0, unit(N, 0), A, "y1+delta*y1^2");
  auto y1 = std::make_shared<QuadraticField>(0.0, unit(N, 0), Matrix::Zero(N, N), "y1", 1);
  return {positive_part(q, 1.0), positive_part(y1, -1.0)};
}

ScalarFieldPtr quadrant_field(int N) { return std::make_shared<QuadrantField>(N); }

ScalarFieldPtr radial_bump(int N, double r_in, double r_out, int k, BumpFactor factor) {
  return std::make_shared<RadialBump>(N, r_in, r_out, k, factor);
}

ScalarFieldPtr scaled(ScalarFieldPtr v, double c) {
  return std::make_shared<ScaledScalar>(std::move(v), c);
}

// ---- parabolic ----------------------------------------------------------------

namespace {

class CaloricPolynomial final : public SpaceTimeField {
 public:
  CaloricPolynomial(CaloricKind kind, int d) : kind_(kind), d_(d) { check_dim(d, 1, "caloric polynomial"); }
  int dim() const override { return d_; }
  double value(const Vector& x, double t) const override {
    check_point(x, d_);
    switch (kind_) {
      case CaloricKind::One:
        return 1.0;
      case CaloricKind::X1:
        return x[0];
      case CaloricKind::X1Sq:
        return x[0] * x[0] - 2.0 * t;
      case CaloricKind::X1Cube:
        return x[0] * x[0] * x[0] - 6.0 * x[0] * t;
      case CaloricKind::Radial:
        return x.squaredNorm() - 2.0 * d_ * t;
    }
    return 0.0;
  }
  Vector gradient(const Vector& x, double t) const override {
    check_point(x, d_);
    Vector g = Vector::Zero(d_);
    switch (kind_) {
      case CaloricKind::One:
        break;
      case CaloricKind::X1:
        g[0] = 1.0;
        break;
      case CaloricKind::X1Sq:
        g[0] = 2.0 * x[0];
        break;
      case CaloricKind::X1Cube:
        g[0] = 3.0 * x[0] * x[0] - 6.0 * t;
        break;
      case CaloricKind::Radial:
        g = 2.0 * x;
        break;
    }
    return g;
  }
  Matrix hessian(const Vector& x, double) const override {
    check_point(x, d_);
    Matrix H = Matrix::Zero(d_, d_);
    if (kind_ == CaloricKind::X1Sq) H(0, 0) = 2.0;
    if (kind_ == CaloricKind::X1Cube) H(0, 0) = 6.0 * x[0];
    if (kind_ == CaloricKind::Radial) H = 2.0 * Matrix::Identity(d_, d_);
    return H;
  }
  double dt(const Vector& x, double) const override {
    check_point(x, d_);
    switch (kind_) {
      case CaloricKind::X1Sq:
        return -2.0;
      case CaloricKind::X1Cube:
        return -6.0 * x[0];
      case CaloricKind::Radial:
        return -2.0 * d_;
      default:
        return 0.0;
    }
  }
  Vector grad_dt(const Vector& x, double) const override {
    check_point(x, d_);
    Vector g = Vector::Zero(d_);
    if (kind_ == CaloricKind::X1Cube) g[0] = -6.0;
    return g;
  }
  double dtt(const Vector& x, double) const override {
    check_point(x, d_);
    return 0.0;
  }
  bool caloric() const override { return true; }
  std::string name() const override {
    static const char* names[] = {"one", "x1", "x1sq", "x1cube", "radial"};
    return names[static_cast<int>(kind_)];
  }

 private:
  CaloricKind kind_;
  int d_;
};

// Derivatives of sign * d^alpha G(r, s) at a point, with G the heat kernel in
// its own time s. Axis derivatives use d_r^k g = (-1)^k (2 sqrt s)^{-k} H_k(z) g,
// z = r / (2 sqrt s); d_s acts as the spatial Laplacian.
class KernelJet {
 public:
  KernelJet(const Vector& r, double s, const std::vector<int>& alpha) : alpha_(alpha) {
    const int d = static_cast<int>(r.size());
    const int max_extra = 4;
    table_.resize(d);
    const double sq = std::sqrt(s);
    for (int i = 0; i < d; ++i) {
      const int top = alpha[i] + max_extra;
      const double z = r[i] / (2.0 * sq);
      const double g = std::exp(-z * z) / std::sqrt(4.0 * std::numbers::pi * s);
      std::vector<double> H(top + 1);
      H[0] = 1.0;
      if (top >= 1) H[1] = 2.0 * z;
      for (int k = 1; k < top; ++k) H[k + 1] = 2.0 * z * H[k] - 2.0 * k * H[k - 1];
      table_[i].resize(top + 1);
      double factor = 1.0;
      for (int k = 0; k <= top; ++k) {
        table_[i][k] = factor * H[k] * g;
        factor *= -1.0 / (2.0 * sq);
      }
    }
  }

  // Product over axes with the multi-index alpha + extra.
  double at(const std::vector<int>& extra) const {
    double p = 1.0;
    for (std::size_t i = 0; i < table_.size(); ++i) p *= table_[i][alpha_[i] + extra[i]];
    return p;
  }

  int dim() const { return static_cast<int>(table_.size()); }

  double value() const { return at(std::vector<int>(dim(), 0)); }
  Vector gradient() const {
    Vector g(dim());
    for (int j = 0; j < dim(); ++j) g[j] = at(bump({j}));
    return g;
  }
  Matrix hessian() const {
    Matrix H(dim(), dim());
    for (int j = 0; j < dim(); ++j)
      for (int k = j; k < dim(); ++k) H(j, k) = H(k, j) = at(bump({j, k}));
    return H;
  }
  double laplacian() const {
    double s = 0.0;
    for (int k = 0; k < dim(); ++k) s += at(bump({k, k}));
    return s;
  }
  Vector grad_laplacian() const {
    Vector g = Vector::Zero(dim());
    for (int j = 0; j < dim(); ++j)
      for (int k = 0; k < dim(); ++k) g[j] += at(bump({j, k, k}));
    return g;
  }
  double bilaplacian() const {
    double s = 0.0;
    for (int k = 0; k < dim(); ++k)
      for (int l = 0; l < dim(); ++l) s += at(bump({k, k, l, l}));
    return s;
  }

 private:
  std::vector<int> bump(std::initializer_list<int> axes) const {
    std::vector<int> e(dim(), 0);
    for (int a : axes) ++e[a];
    return e;
  }
  std::vector<int> alpha_;
  std::vector<std::vector<double>> table_;
};

class HeatKernelDerivative final : public SpaceTimeField {
 public:
  HeatKernelDerivative(Vector x0, double s0, std::vector<int> alpha, double sign)
      : x0_(std::move(x0)), s0_(s0), alpha_(std::move(alpha)), sign_(sign) {
    check_dim(static_cast<int>(x0_.size()), 1, "heat kernel");
    if (static_cast<Eigen::Index>(alpha_.size()) != x0_.size()) {
      throw DomainError("multi-index length does not match the dimension");
    }
    for (int a : alpha_)
      if (a < 0) throw DomainError("multi-index entries must be non-negative");
  }
  int dim() const override { return static_cast<int>(x0_.size()); }
  double value(const Vector& x, double t) const override { return sign_ * jet(x, t).value(); }
  Vector gradient(const Vector& x, double t) const override { return sign_ * jet(x, t).gradient(); }
  Matrix hessian(const Vector& x, double t) const override { return sign_ * jet(x, t).hessian(); }
  double laplacian(const Vector& x, double t) const override { return sign_ * jet(x, t).laplacian(); }
  double dt(const Vector& x, double t) const override { return -sign_ * jet(x, t).laplacian(); }
  Vector grad_dt(const Vector& x, double t) const override {
    return -sign_ * jet(x, t).grad_laplacian();
  }
  double dtt(const Vector& x, double t) const override { return sign_ * jet(x, t).bilaplacian(); }
  bool caloric() const override { return true; }
  std::string name() const override {
    int order = 0;
    for (int a : alpha_) order += a;
    return order == 0 ? "heat_kernel_translate" : "heat_kernel_derivative";
  }

 private:
  KernelJet jet(const Vector& x, double t) const {
    check_point(x, dim());
    const double s = s0_ - t;
    if (!(s > 0.0)) throw DomainError("heat kernel translate evaluated at t >= s0");
    return KernelJet(x - x0_, s, alpha_);
  }
  Vector x0_;
  double s0_;
  std::vector<int> alpha_;
  double sign_;
};

class PositivePartST final : public SpaceTimeField {
 public:
  PositivePartST(SpaceTimeFieldPtr u, double sign) : u_(std::move(u)), sign_(sign) {
    if (sign != 1.0 && sign != -1.0) throw DomainError("positive part sign must be +1 or -1");
  }
  int dim() const override { return u_->dim(); }
  double value(const Vector& x, double t) const override {
    return std::max(sign_ * u_->value(x, t), 0.0);
  }
  Vector gradient(const Vector& x, double t) const override {
    return active(x, t) ? Vector(sign_ * u_->gradient(x, t)) : Vector::Zero(dim()).eval();
  }
  Matrix hessian(const Vector& x, double t) const override {
    return active(x, t) ? Matrix(sign_ * u_->hessian(x, t)) : Matrix::Zero(dim(), dim()).eval();
  }
  double laplacian(const Vector& x, double t) const override {
    return active(x, t) ? sign_ * u_->laplacian(x, t) : 0.0;
  }
  double dt(const Vector& x, double t) const override {
    return active(x, t) ? sign_ * u_->dt(x, t) : 0.0;
  }
  Vector grad_dt(const Vector& x, double t) const override {
    return active(x, t) ? Vector(sign_ * u_->grad_dt(x, t)) : Vector::Zero(dim()).eval();
  }
  double dtt(const Vector& x, double t) const override {
    return active(x, t) ? sign_ * u_->dtt(x, t) : 0.0;
  }
  bool caloric() const override { return u_->caloric(); }
  Smoothness smoothness() const override { return Smoothness::LipschitzAe; }
  std::optional<SpaceTimeWindow> support() const override { return u_->support(); }
  std::string name() const override { return "(" + u_->name() + (sign_ > 0 ? ")+" : ")-"); }

 private:
  bool active(const Vector& x, double t) const { return sign_ * u_->value(x, t) > 0.0; }
  SpaceTimeFieldPtr u_;
  double sign_;
};

class BumpSpaceTime final : public SpaceTimeField {
 public:
  BumpSpaceTime(int d, double r_in, double r_out, double t_in, double t_out, int k)
      : d_(d), space_(make_profile(r_in, r_out, k)), time_(make_profile(t_in, t_out, k)) {
    check_dim(d, 1, "space-time bump");
    if (!(r_in > 0.0) || !(t_in > 0.0)) throw DomainError("space-time bump needs r_in > 0 and t_in > 0");
  }
  int dim() const override { return d_; }
  double value(const Vector& x, double t) const override {
    check_point(x, d_);
    return space_.f(x.norm()) * time_.f(t);
  }
  Vector gradient(const Vector& x, double t) const override {
    return radial_gradient(x) * time_.f(t);
  }
  Matrix hessian(const Vector& x, double t) const override {
    check_point(x, d_);
    const double rho = x.norm();
    if (!space_.inside(rho)) return Matrix::Zero(d_, d_);
    const Vector u = x / rho;
    const Matrix uu = u * u.transpose();
    return (space_.f2(rho) * uu + (space_.f1(rho) / rho) * (Matrix::Identity(d_, d_) - uu)) *
           time_.f(t);
  }
  double laplacian(const Vector& x, double t) const override {
    check_point(x, d_);
    const double rho = x.norm();
    if (!space_.inside(rho)) return 0.0;
    return (space_.f2(rho) + (d_ - 1.0) * space_.f1(rho) / rho) * time_.f(t);
  }
  double dt(const Vector& x, double t) const override {
    check_point(x, d_);
    return space_.f(x.norm()) * time_.f1(t);
  }
  Vector grad_dt(const Vector& x, double t) const override {
    return radial_gradient(x) * time_.f1(t);
  }
  double dtt(const Vector& x, double t) const override {
    check_point(x, d_);
    return space_.f(x.norm()) * time_.f2(t);
  }
  std::optional<SpaceTimeWindow> support() const override {
    return SpaceTimeWindow{space_.lo, space_.hi, time_.lo, time_.hi};
  }
  std::string name() const override { return "bump_spacetime"; }

 private:
  Vector radial_gradient(const Vector& x) const {
    check_point(x, d_);
    const double rho = x.norm();
    if (!space_.inside(rho)) return Vector::Zero(d_);
    return space_.f1(rho) * x / rho;
  }
  int d_;
  Profile space_;
  Profile time_;
};

class ScaledST final : public SpaceTimeField {
 public:
  ScaledST(SpaceTimeFieldPtr u, double c) : u_(std::move(u)), c_(c) {}
  int dim() const override { return u_->dim(); }
  double value(const Vector& x, double t) const override { return c_ * u_->value(x, t); }
  Vector gradient(const Vector& x, double t) const override { return c_ * u_->gradient(x, t); }
  Matrix hessian(const Vector& x, double t) const override { return c_ * u_->hessian(x, t); }
  double laplacian(const Vector& x, double t) const override { return c_ * u_->laplacian(x, t); }
  double dt(const Vector& x, double t) const override { return c_ * u_->dt(x, t); }
  Vector grad_dt(const Vector& x, double t) const override { return c_ * u_->grad_dt(x, t); }
  double dtt(const Vector& x, double t) const override { return c_ * u_->dtt(x, t); }
  bool caloric() const override { return u_->caloric(); }
  Smoothness smoothness() const override { return u_->smoothness(); }
  std::optional<SpaceTimeWindow> support() const override { return u_->support(); }
  std::string name() const override { return std::to_string(c_) + "*" + u_->name(); }

 private:
  SpaceTimeFieldPtr u_;
  double c_;
};

class CaloricFromData final : public SpaceTimeField {
 public:
  CaloricFromData(const GridData& g, double T) : T_(T) {
    if (g.points.empty() || g.points.size() != g.values.size()) {
      throw DomainError("grid data must be non-empty with one value per point");
    }
    d_ = static_cast<int>(g.points.front().size());
    check_dim(d_, 1, "grid data");
    // Per-axis trapezoid weights on a uniform tensor grid.
    std::vector<std::map<double, double>> axis_weight(d_);
    std::size_t expected = 1;
    for (int i = 0; i < d_; ++i) {
      std::vector<double> coords;
      for (const Vector& p : g.points) {
        if (p.size() != d_) throw DomainError("grid points have inconsistent dimension");
        coords.push_back(p[i]);
      }
      std::sort(coords.begin(), coords.end());
      coords.erase(std::unique(coords.begin(), coords.end()), coords.end());
      if (coords.size() < 2) throw DomainError("grid needs at least two values per axis");
      const double h = (coords.back() - coords.front()) / (coords.size() - 1.0);
      for (std::size_t k = 0; k < coords.size(); ++k) {
        if (std::abs(coords[k] - (coords.front() + k * h)) > 1e-9 * std::max(1.0, std::abs(h))) {
          throw DomainError("grid spacing must be uniform");
        }
        const bool end = k == 0 || k + 1 == coords.size();
        axis_weight[i][coords[k]] = end ? 0.5 * h : h;
      }
      expected *= coords.size();
    }
    if (expected != g.points.size()) throw DomainError("grid data is not a full tensor grid");
    for (std::size_t k = 0; k < g.points.size(); ++k) {
      double w = 1.0;
      for (int i = 0; i < d_; ++i) w *= axis_weight[i].at(g.points[k][i]);
      if (g.values[k] != 0.0) {
        nodes_.push_back(g.points[k]);
        coef_.push_back(w * g.values[k]);
      }
    }
  }

  int dim() const override { return d_; }
  double value(const Vector& x, double t) const override {
    return sum(x, t, [](const KernelJet& j) { return j.value(); });
  }
  Vector gradient(const Vector& x, double t) const override {
    return sum_vec(x, t, [](const KernelJet& j) { return j.gradient(); });
  }
  Matrix hessian(const Vector& x, double t) const override {
    check(x, t);
    Matrix H = Matrix::Zero(d_, d_);
    for (std::size_t k = 0; k < nodes_.size(); ++k) H += coef_[k] * jet(x, t, k).hessian();
    return H;
  }
  double laplacian(const Vector& x, double t) const override {
    return sum(x, t, [](const KernelJet& j) { return j.laplacian(); });
  }
  double dt(const Vector& x, double t) const override { return -laplacian(x, t); }
  Vector grad_dt(const Vector& x, double t) const override {
    return -sum_vec(x, t, [](const KernelJet& j) { return j.grad_laplacian(); });
  }
  double dtt(const Vector& x, double t) const override {
    return sum(x, t, [](const KernelJet& j) { return j.bilaplacian(); });
  }
  bool caloric() const override { return true; }
  std::string name() const override { return "caloric_from_data"; }

 private:
  void check(const Vector& x, double t) const {
    check_point(x, d_);
    if (T_ - t < 1e-3) {
      throw AccuracyError("caloric_from_data evaluated within 1e-3 of the data time", T_, t);
    }
  }
  KernelJet jet(const Vector& x, double t, std::size_t k) const {
    return KernelJet(x - nodes_[k], T_ - t, std::vector<int>(d_, 0));
  }
  template <class F>
  double sum(const Vector& x, double t, F&& f) const {
    check(x, t);
    double s = 0.0;
    for (std::size_t k = 0; k < nodes_.size(); ++k) s += coef_[k] * f(jet(x, t, k));
    return s;
  }
  template <class F>
  Vector sum_vec(const Vector& x, double t, F&& f) const {
    check(x, t);
    Vector s = Vector::Zero(d_);
    for (std::size_t k = 0; k < nodes_.size(); ++k) s += coef_[k] * f(jet(x, t, k));
    return s;
  }
  int d_ = 0;
  double T_;
  std::vector<Vector> nodes_;
  std::vector<double> coef_;
};

}  // namespace

SpaceTimeFieldPtr caloric_polynomial(CaloricKind kind, int d) {
  return std::make_shared<CaloricPolynomial>(kind, d);
}

SpaceTimeFieldPtr heat_kernel_translate(const Vector& x0, double s0) {
  return std::make_shared<HeatKernelDerivative>(x0, s0, std::vector<int>(x0.size(), 0), 1.0);
}

SpaceTimeFieldPtr heat_kernel_derivative(const Vector& x0, double s0, std::vector<int> alpha,
                                         double sign) {
  return std::make_shared<HeatKernelDerivative>(x0, s0, std::move(alpha), sign);
}

std::pair<SpaceTimeFieldPtr, SpaceTimeFieldPtr> heat_dipole_pair(int d, double s0) {
  check_dim(d, 1, "heat dipole");
  std::vector<int> alpha(d, 0);
  alpha[0] = 1;
  auto u = heat_kernel_derivative(Vector::Zero(d), s0, alpha, -1.0);
  return {positive_part(u, 1.0), positive_part(u, -1.0)};
}

SpaceTimeFieldPtr positive_part(SpaceTimeFieldPtr u, double sign) {
  return std::make_shared<PositivePartST>(std::move(u), sign);
}

std::pair<SpaceTimeFieldPtr, SpaceTimeFieldPtr> half_space_pair(int d) {
  auto x1 = caloric_polynomial(CaloricKind::X1, d);
  return {positive_part(x1, 1.0), positive_part(x1, -1.0)};
}

SpaceTimeFieldPtr bump_spacetime(int d, double r_in, double r_out, double t_in, double t_out,
                                 int k) {
  return std::make_shared<BumpSpaceTime>(d, r_in, r_out, t_in, t_out, k);
}

SpaceTimeFieldPtr scaled(SpaceTimeFieldPtr u, double c) {
  return std::make_shared<ScaledST>(std::move(u), c);
}

GridData read_grid_csv(std::istream& in) {
  GridData g;
  std::string line;
  bool first = true;
  std::size_t width = 0;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    std::vector<double> row;
    std::stringstream ss(line);
    std::string cell;
    bool numeric = true;
    while (std::getline(ss, cell, ',')) {
      try {
        std::size_t used = 0;
        row.push_back(std::stod(cell, &used));
        if (cell.find_first_not_of(" \t", used) != std::string::npos) numeric = false;
      } catch (const std::exception&) {
        numeric = false;
      }
    }
    if (!numeric) {
      if (first) {
        first = false;
        continue;
      }
      throw DomainError("non-numeric grid row: " + line);
    }
    first = false;
    if (row.size() < 2) throw DomainError("grid rows need coordinates and a value");
    if (width == 0) width = row.size();
    if (row.size() != width) throw DomainError("grid rows have inconsistent length");
    g.points.push_back(Eigen::Map<const Vector>(row.data(), static_cast<Eigen::Index>(width - 1)));
    g.values.push_back(row.back());
  }
  if (g.points.empty()) throw DomainError("grid file has no data rows");
  return g;
}

GridData read_grid_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open grid file " + path);
  return read_grid_csv(in);
}

SpaceTimeFieldPtr caloric_from_data(const GridData& g, double T) {
  return std::make_shared<CaloricFromData>(g, T);
}

// ---- sphere-valued maps ---------------------------------------------------------

namespace {

class EquatorMap final : public SphereField {
 public:
  explicit EquatorMap(int N) : N_(N) { check_dim(N, 3, "equator map"); }
  int dim() const override { return N_; }
  int target_dim() const override { return N_; }
  Vector value(const Vector& y) const override { return y / radius(y); }
  Matrix jacobian(const Vector& y) const override {
    const double r = radius(y);
    const Vector u = y / r;
    return (Matrix::Identity(N_, N_) - u * u.transpose()) / r;
  }
  Vector laplacian(const Vector& y) const override {
    const double r = radius(y);
    return -(N_ - 1.0) * y / (r * r * r);
  }
  double energy_density(const Vector& y) const override {
    const double r = radius(y);
    return (N_ - 1.0) / (r * r);
  }
  std::string name() const override { return "equator"; }

 private:
  double radius(const Vector& y) const {
    check_point(y, N_);
    const double r = y.norm();
    if (r == 0.0) throw DomainError("equator map is undefined at the origin");
    return r;
  }
  int N_;
};

class ConstantMap final : public SphereField {
 public:
  ConstantMap(int N, int m) : N_(N), m_(m) {
    check_dim(N, 1, "constant map");
    check_dim(m, 1, "constant map target");
  }
  int dim() const override { return N_; }
  int target_dim() const override { return m_; }
  Vector value(const Vector& y) const override {
    check_point(y, N_);
    return unit(m_, 0);
  }
  Matrix jacobian(const Vector& y) const override {
    check_point(y, N_);
    return Matrix::Zero(m_, N_);
  }
  Vector laplacian(const Vector& y) const override {
    check_point(y, N_);
    return Vector::Zero(m_);
  }
  std::string name() const override { return "constant"; }

 private:
  int N_;
  int m_;
};

class AngleMap final : public SphereField {
 public:
  AngleMap(AngleKind kind, int N, double scale) : theta_(make_theta(kind, N, scale)), kind_(kind) {}
  int dim() const override { return theta_.dim(); }
  int target_dim() const override { return 2; }
  Vector value(const Vector& y) const override {
    const double th = theta_.value(y);
    return (Vector(2) << std::cos(th), std::sin(th)).finished();
  }
  Matrix jacobian(const Vector& y) const override {
    const double th = theta_.value(y);
    const Vector g = theta_.gradient(y);
    Matrix J(2, dim());
    J.row(0) = -std::sin(th) * g.transpose();
    J.row(1) = std::cos(th) * g.transpose();
    return J;
  }
  Vector laplacian(const Vector& y) const override {
    const double th = theta_.value(y);
    const double g2 = theta_.gradient(y).squaredNorm();
    const double lap = theta_.laplacian(y);
    return (Vector(2) << -std::cos(th) * g2 - std::sin(th) * lap,
            -std::sin(th) * g2 + std::cos(th) * lap)
        .finished();
  }
  double energy_density(const Vector& y) const override { return theta_.gradient(y).squaredNorm(); }
  std::string name() const override {
    static const char* names[] = {"circle", "angle_x1x2", "angle_half_x1sq"};
    return names[static_cast<int>(kind_)];
  }

 private:
  static QuadraticField make_theta(AngleKind kind, int N, double scale) {
    check_dim(N, 1, "angle map");
    Matrix A = Matrix::Zero(N, N);
    switch (kind) {
      case AngleKind::X1:
        return QuadraticField(0.0, scale * unit(N, 0), A, "theta");
      case AngleKind::X1X2:
        check_dim(N, 2, "x1 x2 angle map");
        A(0, 1) = A(1, 0) = scale;
        return QuadraticField(0.0, Vector::Zero(N), A, "theta");
      case AngleKind::HalfX1Sq:
        A(0, 0) = scale;
        return QuadraticField(0.0, Vector::Zero(N), A, "theta");
    }
    throw DomainError("unsupported angle map kind");
  }
  QuadraticField theta_;
  AngleKind kind_;
};

}  // namespace

SphereFieldPtr equator_map(int N) { return std::make_shared<EquatorMap>(N); }

SphereFieldPtr constant_map(int N, int m) { return std::make_shared<ConstantMap>(N, m); }

SphereFieldPtr angle_map(AngleKind kind, int N, double scale) {
  return std::make_shared<AngleMap>(kind, N, scale);
}

VectorNonhomTerm harmonic_map_defect(SphereFieldPtr v) {
  return {[v](const Vector& y) -> Vector {
            return -v->laplacian(y) - v->energy_density(y) * v->value(y);
          },
          "defect(" + v->name() + ")"};
}

VectorNonhomTerm radial_unit_term(int N) {
  return {[N](const Vector& y) -> Vector {
            check_point(y, N);
            const double r = y.norm();
            if (r == 0.0) throw DomainError("y/|y| is undefined at the origin");
            return y / r;
          },
          "y/|y|"};
}

// ---- graphs -------------------------------------------------------------------------

QuadraticGraph::QuadraticGraph(double c, Vector a, Matrix A, std::string name)
    : c_(c), a_(std::move(a)), A_(std::move(A)), name_(std::move(name)) {
  if (a_.size() < 1) throw DomainError("graph needs dimension >= 1");
  if (A_.rows() != a_.size() || A_.cols() != a_.size()) throw DomainError("quadratic form has the wrong shape");
  A_ = 0.5 * (A_ + A_.transpose()).eval();
}

double QuadraticGraph::value(const Vector& y, double) const {
  check_point(y, dim());
  return c_ + a_.dot(y) + 0.5 * y.dot(A_ * y);
}

Vector QuadraticGraph::gradient(const Vector& y, double) const {
  check_point(y, dim());
  return a_ + A_ * y;
}

Matrix QuadraticGraph::hessian(const Vector& y, double) const {
  check_point(y, dim());
  return A_;
}

GraphSurfacePtr graph_plane(int N, double c) {
  check_dim(N, 1, "plane");
  return std::make_shared<QuadraticGraph>(c, Vector::Zero(N), Matrix::Zero(N, N), "plane");
}

GraphSurfacePtr graph_linear(const Vector& a, double c) {
  const int N = static_cast<int>(a.size());
  check_dim(N, 1, "linear graph");
  return std::make_shared<QuadraticGraph>(c, a, Matrix::Zero(N, N), "linear");
}

GraphSurfacePtr graph_paraboloid(int N, double eps) {
  check_dim(N, 1, "paraboloid");
  return std::make_shared<QuadraticGraph>(0.0, Vector::Zero(N), eps * Matrix::Identity(N, N),
                                          "paraboloid");
}

}  // namespace dimlift
