#include "dimlift/montecarlo.hpp"

#include <cmath>
#include <limits>
#include <random>

#include "dimlift/core_lift.hpp"
#include "dimlift/errors.hpp"
#include "dimlift/parallel.hpp"

namespace dimlift {
namespace {

std::mt19937_64 batch_engine(std::uint64_t seed, std::size_t b) {
  const std::uint64_t index = b;
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  return std::mt19937_64(seq);
}

void draw_direction(std::mt19937_64& eng, std::normal_distribution<double>& normal, Vector& g) {
  for (;;) {
    for (Eigen::Index k = 0; k < g.size(); ++k) g[k] = normal(eng);
    const double norm = g.norm();
    if (norm > std::numeric_limits<double>::min()) {
      g /= norm;
      return;
    }
  }
}

// Calls sample(engine, y) to fill each sample of a batch.
using SampleFn = std::function<void(std::mt19937_64&, Vector&)>;

std::size_t batch_size(const MonteCarloSpec& mc, std::size_t b) {
  return std::min(mc.batch, mc.samples - b * mc.batch);
}

ChannelMeans reduce_batches(int N, const MonteCarloSpec& mc, const SampleFn& sample,
                            const std::function<Vector(const Vector&)>& f, int channels,
                            int threads) {
  mc.validate();
  if (channels < 1) throw DomainError("Monte Carlo integrand needs at least one channel");
  const std::size_t batches = mc.batch_count();
  // Per-batch Welford mean and centred sum of squares, merged in batch order.
  std::vector<Vector> means(batches), m2(batches);
  parallel_for(
      batches,
      [&](std::size_t b) {
        std::mt19937_64 eng = batch_engine(mc.seed, b);
        Vector y(N);
        Vector mean = Vector::Zero(channels);
        Vector sq = Vector::Zero(channels);
        const std::size_t m = batch_size(mc, b);
        for (std::size_t i = 0; i < m; ++i) {
          sample(eng, y);
          const Vector v = f(y);
          if (v.size() != channels) throw DomainError("integrand returned the wrong number of channels");
          const Vector delta = v - mean;
          mean += delta / static_cast<double>(i + 1);
          sq += delta.cwiseProduct(v - mean);
        }
        means[b] = std::move(mean);
        m2[b] = std::move(sq);
      },
      threads);
  Vector mean = Vector::Zero(channels);
  Vector sq = Vector::Zero(channels);
  double count = 0.0;
  for (std::size_t b = 0; b < batches; ++b) {
    const double nb = static_cast<double>(batch_size(mc, b));
    const double total = count + nb;
    const Vector delta = means[b] - mean;
    mean += delta * (nb / total);
    sq += m2[b] + delta.cwiseProduct(delta) * (count * nb / total);
    count = total;
  }
  ChannelMeans out;
  out.samples = mc.samples;
  out.mean = mean;
  out.std_error = (sq.cwiseMax(0.0) / ((count - 1.0) * count)).cwiseSqrt();
  return out;
}

SampleFn sphere_sampler(int N, double radius) {
  if (N < 1) throw DomainError("sphere sampling needs N >= 1");
  if (!(radius > 0.0)) throw DomainError("sphere sampling needs a positive radius");
  return [radius](std::mt19937_64& eng, Vector& y) {
    std::normal_distribution<double> normal;
    draw_direction(eng, normal, y);
    y *= radius;
  };
}

SampleFn mu_ball_sampler(int N, double tau, int d) {
  if (N < 1 || d < 1) throw DomainError("ball sampling needs N >= 1 and d >= 1");
  if (!(tau > 0.0)) throw DomainError("ball sampling needs tau > 0");
  const double R = std::sqrt(2.0 * d * tau);
  return [R](std::mt19937_64& eng, Vector& y) {
    std::normal_distribution<double> normal;
    std::uniform_real_distribution<double> uniform;
    draw_direction(eng, normal, y);
    y *= R * std::sqrt(uniform(eng));
  };
}

std::vector<Vector> collect(int N, const MonteCarloSpec& mc, const SampleFn& sample) {
  mc.validate();
  std::vector<Vector> out;
  out.reserve(mc.samples);
  for (std::size_t b = 0; b < mc.batch_count(); ++b) {
    std::mt19937_64 eng = batch_engine(mc.seed, b);
    for (std::size_t i = 0; i < batch_size(mc, b); ++i) {
      Vector y(N);
      sample(eng, y);
      out.push_back(std::move(y));
    }
  }
  return out;
}

double discrepancy(double mc, double se, double quad) {
  // Agreement at roundoff level counts as exact; the standard error of a
  // constant integrand is itself roundoff and must not inflate the ratio.
  const double diff = std::abs(mc - quad);
  if (diff <= 1e-12 * std::max(1.0, std::abs(quad))) return 0.0;
  return se > 0.0 ? diff / se : std::numeric_limits<double>::infinity();
}

}  // namespace

void MonteCarloSpec::validate() const {
  if (samples < 2) throw DomainError("Monte Carlo needs at least two samples");
  if (batch < 1) throw DomainError("Monte Carlo batch size must be positive");
}

std::vector<Vector> sample_sphere_uniform(int N, double radius, const MonteCarloSpec& mc) {
  return collect(N, mc, sphere_sampler(N, radius));
}

std::vector<Vector> sample_mu_ball(int N, double tau, int d, const MonteCarloSpec& mc) {
  return collect(N, mc, mu_ball_sampler(N, tau, d));
}

ChannelMeans mc_sphere_means(int N, double radius, const MonteCarloSpec& mc,
                             const std::function<Vector(const Vector&)>& f, int channels,
                             int threads) {
  return reduce_batches(N, mc, sphere_sampler(N, radius), f, channels, threads);
}

ChannelMeans mc_mu_ball_means(int N, double tau, int d, const MonteCarloSpec& mc,
                              const std::function<Vector(const Vector&)>& f, int channels,
                              int threads) {
  return reduce_batches(N, mc, mu_ball_sampler(N, tau, d), f, channels, threads);
}

std::vector<PushforwardCheck> pushforward_check_sphere(const std::vector<SpatialFn>& phis, int d,
                                                       int n, double t, const MonteCarloSpec& mc,
                                                       const QuadratureSpec& spec) {
  const LiftConfig cfg(d, n);
  if (!(t > 0.0)) throw DomainError("push-forward check needs t > 0");
  const int K = static_cast<int>(phis.size());
  const ChannelMeans means = mc_sphere_means(
      cfg.lifted_dim(), std::sqrt(2.0 * d * t), mc,
      [&](const Vector& y) {
        const Vector x = lift_point(cfg, y);
        Vector v(K);
        for (int k = 0; k < K; ++k) v[k] = phis[k](x);
        return v;
      },
      K, default_threads());
  std::vector<PushforwardCheck> out;
  for (int k = 0; k < K; ++k) {
    PushforwardCheck c;
    c.mc_value = means.mean[k];
    c.mc_std_error = means.std_error[k];
    c.quad_value = integrate_weighted(phis[k], Weight::finite(n), d, t, spec).value;
    c.discrepancy_in_std_errors = discrepancy(c.mc_value, c.mc_std_error, c.quad_value);
    out.push_back(c);
  }
  return out;
}

PushforwardCheck pushforward_check_sphere(const SpatialFn& phi, int d, int n, double t,
                                          const MonteCarloSpec& mc, const QuadratureSpec& spec) {
  return pushforward_check_sphere(std::vector<SpatialFn>{phi}, d, n, t, mc, spec).front();
}

std::vector<PushforwardCheck> pushforward_check_ball(const std::vector<SpaceTimeFn>& phis, int d,
                                                     int n, double tau, const MonteCarloSpec& mc,
                                                     const QuadratureSpec& spec) {
  const LiftConfig cfg(d, n);
  if (!(tau > 0.0)) throw DomainError("push-forward check needs tau > 0");
  const int K = static_cast<int>(phis.size());
  const ChannelMeans means = mc_mu_ball_means(
      cfg.lifted_dim(), tau, d, mc,
      [&](const Vector& y) {
        const LiftedPoint p = lift_point_time(cfg, y);
        Vector v(K);
        for (int k = 0; k < K; ++k) v[k] = phis[k](p.point.x, p.point.t);
        return v;
      },
      K, default_threads());
  std::vector<PushforwardCheck> out;
  for (int k = 0; k < K; ++k) {
    PushforwardCheck c;
    c.mc_value = tau * means.mean[k];
    c.mc_std_error = tau * means.std_error[k];
    c.quad_value = integrate_spacetime(phis[k], Weight::finite(n), d, tau, spec).value;
    c.discrepancy_in_std_errors = discrepancy(c.mc_value, c.mc_std_error, c.quad_value);
    out.push_back(c);
  }
  return out;
}

PushforwardCheck pushforward_check_ball(const SpaceTimeFn& phi, int d, int n, double tau,
                                        const MonteCarloSpec& mc, const QuadratureSpec& spec) {
  return pushforward_check_ball(std::vector<SpaceTimeFn>{phi}, d, n, tau, mc, spec).front();
}

}  // namespace dimlift
