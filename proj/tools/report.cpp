#include "report.hpp"

#include <charconv>
#include <cmath>
#include <fstream>

#include "dimlift/functionals/monotonicity.hpp"

namespace dimlift::cli {

std::string num(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::string num(long long v) { return std::to_string(v); }

std::string Table::csv() const {
  std::string out;
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t k = 0; k < cells.size(); ++k) {
      if (k) out += ',';
      out += cells[k];
    }
    out += '\n';
  };
  line(header);
  for (const auto& r : rows) line(r);
  return out;
}

void Report::fail(const std::string& why) {
  pass = false;
  failures.push_back(why);
}

void Report::violation(double amount, const std::string& what) {
  if (std::isnan(amount)) {
    fail(what + ": not a number");
    return;
  }
  if (amount > 0.0) {
    worst_violation = std::max(worst_violation, amount);
    fail(what);
  }
}

bool Report::error(double err, double tol, const std::string& what) {
  if (std::isnan(err)) {
    fail(what + ": not a number");
    return false;
  }
  max_error = std::max(max_error, err);
  if (err > tol) {
    fail(what);
    return false;
  }
  return true;
}

std::vector<double> parse_grid(const std::string& text, bool geometric) {
  const auto c1 = text.find(':');
  const auto c2 = c1 == std::string::npos ? c1 : text.find(':', c1 + 1);
  if (c2 == std::string::npos) throw UsageError("grid '" + text + "' is not of the form a:b:k");
  auto parse = [&](std::string_view s, auto& out) {
    const auto res = std::from_chars(s.data(), s.data() + s.size(), out);
    if (res.ec != std::errc() || res.ptr != s.data() + s.size())
      throw UsageError("grid '" + text + "': cannot parse '" + std::string(s) + "'");
  };
  const std::string_view all(text);
  double a = 0, b = 0;
  int k = 0;
  parse(all.substr(0, c1), a);
  parse(all.substr(c1 + 1, c2 - c1 - 1), b);
  parse(all.substr(c2 + 1), k);
  if (k < 2 || !(b > a)) throw UsageError("grid '" + text + "' needs a < b and k >= 2");
  if (geometric && !(a > 0)) throw UsageError("geometric grid '" + text + "' needs a > 0");
  return geometric ? geometric_grid(a, b, k) : linear_grid(a, b, k);
}

namespace {

void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw UsageError("cannot write " + path);
  f << content;
  if (!f) throw UsageError("failed writing " + path);
}

Json manifest(const RunInfo& info) {
  Json m;
  m["subcommand"] = info.subcommand;
  m["parameters"] = info.parameters;
  m["seed"] = info.seed;
  m["outputs"] = Json::array({info.prefix + ".csv", info.prefix + ".json"});
  return m;
}

}  // namespace

void write_outputs(const RunInfo& info, const Report& report, double wall_time, int threads) {
  write_file(info.prefix + ".csv", report.table.csv());

  Json summary;
  summary["status"] = report.pass ? "pass" : "fail";
  summary["worst_violation"] = report.worst_violation;
  summary["max_error"] = report.max_error;
  summary["failures"] = report.failures;
  summary["manifest"] = manifest(info);
  write_file(info.prefix + ".json", summary.dump(2) + "\n");

  Json full = manifest(info);
  full["outputs"].push_back(info.prefix + ".manifest.json");
  full["wall_time"] = wall_time;
  full["threads"] = threads;
  write_file(info.prefix + ".manifest.json", full.dump(2) + "\n");
}

}  // namespace dimlift::cli
