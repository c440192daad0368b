#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace dimlift::cli {

using Json = nlohmann::ordered_json;

/// Bad flag values detected after CLI11 parsing; mapped to exit code 1.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Shortest round-trip decimal form.
std::string num(double v);
std::string num(long long v);
inline std::string num(int v) { return num(static_cast<long long>(v)); }
inline std::string num(std::uint64_t v) { return std::to_string(v); }
inline std::string num(bool v) { return v ? "true" : "false"; }
inline std::string num(const std::string& s) { return s; }
inline std::string num(const char* s) { return s; }

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  template <class... Cells>
  void add(const Cells&... cells) {
    rows.push_back({num(cells)...});
  }
  std::string csv() const;
};

/// Outcome of one subcommand. worst_violation is the largest amount by which a
/// claimed inequality or monotonicity fails (0 when none); max_error is the
/// largest |computed - reference| over rows that carry a reference.
struct Report {
  Table table;
  bool pass = true;
  double worst_violation = 0.0;
  double max_error = 0.0;
  std::vector<std::string> failures;

  void fail(const std::string& why);
  /// Records `amount` of violation; fails if positive.
  void violation(double amount, const std::string& what);
  /// Records an error against a reference; fails if above tol.
  bool error(double err, double tol, const std::string& what);
};

/// "a:b:k" -> k points from a to b inclusive.
std::vector<double> parse_grid(const std::string& text, bool geometric);

struct RunInfo {
  std::string subcommand;
  Json parameters = Json::object();
  std::uint64_t seed = 0;
  std::string prefix;
};

/// Writes <prefix>.csv, <prefix>.json and <prefix>.manifest.json. The first two
/// depend only on `info` and `report`.
void write_outputs(const RunInfo& info, const Report& report, double wall_time, int threads);

}  // namespace dimlift::cli
