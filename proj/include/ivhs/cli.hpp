#pragma once

#include "ivhs/report.hpp"

#include <string>
#include <vector>

namespace ivhs {

namespace exit_code {
inline constexpr int kOk = 0;
inline constexpr int kFailure = 1;  // fixture suite found a mismatch
inline constexpr int kValidation = 2;
inline constexpr int kUsage = 64;
}  // namespace exit_code

struct CommandResult {
  int exit_code = exit_code::kOk;
  std::string output;       // stdout
  std::string diagnostics;  // stderr
};

/// Runs one CLI invocation. `args` excludes the program name, e.g.
/// {"mu", "plane", "--poly", "x^4+y^4+z^4", "--json"}.
///
///   mu plane --poly F [--sing k,...] [--vars a,b,c]
///   mu ci --q Q --c C [--vars ...]
///   mu hyperelliptic --genus g
///   jacobian --poly F [--xi X] [--budget N]     (alias: ivhs jacobian)
///   class --genus g --class C
///   invariants (--pa N | --poly F) [--sing k,...] [--genus g --rho r:d]
///   degenerate (--pa N --step a:b ... | --spec file) [--yukawa-nodes n]
///   fixtures [--dir path]
///
/// Every report command accepts --json.
CommandResult run_command(const std::vector<std::string>& args);

}  // namespace ivhs
