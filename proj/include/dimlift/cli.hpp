#pragma once

#include <string>
#include <vector>

namespace dimlift::cli {

/// Exit codes of run().
inline constexpr int kPass = 0;
inline constexpr int kUsageError = 1;
inline constexpr int kCheckFailed = 2;

/// Runs one subcommand. args[0] is the program name. Writes <out>.csv,
/// <out>.json and <out>.manifest.json; the first two are byte-identical for
/// identical parameters, independent of the thread count.
int run(const std::vector<std::string>& args);
int run(int argc, const char* const* argv);

}  // namespace dimlift::cli
