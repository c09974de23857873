#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "ehrtensor/tensor.hpp"

namespace ehrtensor {

inline constexpr int kMaxEhrhartRank = 12;
inline constexpr int kMaxSurveyRank = 20;
inline constexpr int kMaxPrismDim = 8;

enum ExitCode : int { kExitOk = 0, kExitFailed = 1, kExitBadInput = 2 };

struct RunConfig {
  std::string subcommand;
  std::string input = "-";  // "-" reads stdin
  int r = 0;
  int n = 0;
  std::string filter = "all";
  int parity = 1;
  bool relint = false;
  bool kernel = false;
  bool survey = false;
  std::vector<int> survey_ranks{9, 11, 13, 15, 17, 19};
  IntVec shift;
  std::optional<IntMatrix> matrix;
  std::uint64_t seed = 1;
  int steps = 20;
  int independence_trials = 0;
  std::string format = "json";
  int verbosity = 0;
  unsigned threads = 1;  // from EHRTENSOR_THREADS
};

// Parses argv-style arguments (without the program name). Help output and
// parse errors are written to `out` / `err`; the returned code is set when the
// caller should exit right away.
std::optional<int> parse_args(const std::vector<std::string>& args, RunConfig& config, std::ostream& out,
                              std::ostream& err);

// Exit status 0 on success, 1 on a failed verification (with the
// counterexample on stdout), 2 on malformed input.
int run(const RunConfig& config, std::istream& in, std::ostream& out, std::ostream& err);

int run_command_line(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace ehrtensor
