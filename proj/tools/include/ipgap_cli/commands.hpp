#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace ipgap::cli {

enum ExitCode : int { kPass = 0, kFail = 1, kInvalidInput = 2 };

enum class Format { kJson, kCsv };

struct RunConfig {
  double tolerance = 1e-9;
  int n_cap = 8;
  std::uint64_t seed = 0;
  Format format = Format::kJson;
  std::int64_t budget = 100000;
};

/// Parses `args` (without the program name) and runs one subcommand.
/// Output is buffered and written to `out` only on success or a completed
/// check; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ipgap::cli
