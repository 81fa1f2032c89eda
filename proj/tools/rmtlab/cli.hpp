#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace rmtlab {

/// Process exit codes.
enum ExitCode : int {
  kOk = 0,
  kInvalidArguments = 2,
  kSolverFailure = 3,
  kInsufficientData = 4,
  kIoFailure = 5,
  kParseFailure = 6,
  kUnfoldingFailure = 7,
};

struct RunConfig {
  std::uint64_t seed = 0;
  unsigned threads = 0;  // 0 = auto
  std::string output_dir;  // empty: write to stdout
  std::map<std::string, double> tolerances;
};

/// Reads key=value lines (seed, threads, out, tol.<name>); '#' starts a comment.
/// Values already present in `config` are overwritten.
void apply_config_file(const std::string& path, RunConfig& config);

/// Runs one invocation; `args` excludes the program name. Data goes to `out`
/// (or files under --out), human messages to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

std::string version();

}  // namespace rmtlab
