#pragma once

#include <string>
#include <vector>

#include "report.hpp"

namespace dimlift::cli {

struct GnLimitOpts {
  int d = 1;
  double t = 1.0;
  std::vector<int> n{8, 16, 32, 64, 128};
  std::string x_grid;  // empty: -2:2:201 for d <= 2, -2:2:41 otherwise
};

struct PushforwardOpts {
  std::vector<int> d{1};
  std::vector<int> n{1, 2, 5, 20};
  std::vector<double> t{1.0};
  std::string measure = "both";
  std::vector<std::string> phi{"one", "x1", "x1sq", "x1pow4", "gauss"};
  long long samples = 100000;
  int seeds = 1;
  double k_se = 3.0;
  double min_fraction = 0.95;
};

struct FrequencyOpts {
  bool parabolic = false;
  bool elliptic = false;
  std::string field;  // default: heat-kernel / x1x2
  int d = 1;
  int N = 3;
  int k = 3;
  std::string t_grid = "0.1:1:16";
  std::string r_grid = "0.5:2:16";
  double tol = 1e-8;
};

struct CarlemanOpts {
  int N = 3;
  int d = 1;
  std::vector<double> gammas{0.5, 1.0, 2.3};
  std::vector<double> alphas{1.0, 0.875, 1.3};
  int random = 50;
};

struct TwoPhaseOpts {
  int N = 2;
  int d = 2;
  double delta = 0.1;
  double dipole_s0 = 2.0;
  std::string r_grid = "0.25:2:8";
  std::string tau_grid = "0.1:1:8";
  std::vector<int> n{5, 20, 80};
};

struct HarmonicMapOpts {
  std::vector<int> N{3, 4};
  std::string r_grid = "0.25:2:8";
  std::string t_grid = "0.25:4:8";
  std::vector<int> n{10, 40, 160};
};

struct McfOpts {
  int N = 2;
  int d = 1;
  double delta = 0.4;
  double c = 0.5;
  double slope = 0.7;
  std::string r_grid = "0.5:2:8";
  std::string t_grid = "0.25:4:8";
  std::vector<int> n{10, 40, 160};
};

struct LiftDemoOpts {
  std::string which = "frequency";
  std::string field;  // default depends on --which
  int d = 1;
  double t = 1.0;
  std::vector<int> n{10, 40, 160};
};

Report gn_limit(const GnLimitOpts& o, RunInfo& info);
Report pushforward(const PushforwardOpts& o, RunInfo& info);
Report frequency(const FrequencyOpts& o, RunInfo& info);
Report carleman(const CarlemanOpts& o, RunInfo& info);
Report two_phase(const TwoPhaseOpts& o, RunInfo& info);
Report harmonic_map(const HarmonicMapOpts& o, RunInfo& info);
Report mcf(const McfOpts& o, RunInfo& info);
Report lift_demo(const LiftDemoOpts& o, RunInfo& info);

}  // namespace dimlift::cli
