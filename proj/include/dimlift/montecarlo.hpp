#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "dimlift/integrate.hpp"
#include "dimlift/types.hpp"

namespace dimlift {

/// Samples are produced in batches; batch b draws from a generator seeded by
/// (seed, b), so results depend only on (seed, samples, batch).
struct MonteCarloSpec {
  std::uint64_t seed = 0;
  std::size_t samples = 100000;
  std::size_t batch = 4096;

  void validate() const;
  std::size_t batch_count() const { return (samples + batch - 1) / batch; }
};

/// Uniform samples on the sphere of the given radius in R^N.
std::vector<Vector> sample_sphere_uniform(int N, double radius, const MonteCarloSpec& mc);

/// Samples of mu_{n,d} restricted to B_tau^n, normalised to a probability
/// (|y| has density proportional to r on [0, sqrt(2 d tau)]).
std::vector<Vector> sample_mu_ball(int N, double tau, int d, const MonteCarloSpec& mc);

/// Mean and standard error of each channel of f over a sample stream.
struct ChannelMeans {
  Vector mean;
  Vector std_error;
  std::size_t samples = 0;
};

/// f is evaluated on every sample; batches are reduced in batch order so the
/// result does not depend on the thread count.
ChannelMeans mc_sphere_means(int N, double radius, const MonteCarloSpec& mc,
                             const std::function<Vector(const Vector&)>& f, int channels,
                             int threads);
ChannelMeans mc_mu_ball_means(int N, double tau, int d, const MonteCarloSpec& mc,
                              const std::function<Vector(const Vector&)>& f, int channels,
                              int threads);

struct PushforwardCheck {
  double mc_value = 0.0;
  double mc_std_error = 0.0;
  double quad_value = 0.0;
  /// |mc - quad| / std_error; 0 when both sides agree exactly.
  double discrepancy_in_std_errors = 0.0;
};

/// Compares the sphere average of phi(f(Y)) with int phi G_{t,n}.
PushforwardCheck pushforward_check_sphere(const SpatialFn& phi, int d, int n, double t,
                                          const MonteCarloSpec& mc,
                                          const QuadratureSpec& spec = {});
/// Same for several test functions on one sample set.
std::vector<PushforwardCheck> pushforward_check_sphere(const std::vector<SpatialFn>& phis, int d,
                                                       int n, double t, const MonteCarloSpec& mc,
                                                       const QuadratureSpec& spec = {});

/// Compares tau * E[phi(F(Y))] over mu_{n,d} on B_tau^n with int_0^tau int phi G_{t,n}.
PushforwardCheck pushforward_check_ball(const SpaceTimeFn& phi, int d, int n, double tau,
                                        const MonteCarloSpec& mc, const QuadratureSpec& spec = {});
std::vector<PushforwardCheck> pushforward_check_ball(const std::vector<SpaceTimeFn>& phis, int d,
                                                     int n, double tau, const MonteCarloSpec& mc,
                                                     const QuadratureSpec& spec = {});

}  // namespace dimlift
