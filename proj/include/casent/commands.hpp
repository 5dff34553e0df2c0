#pragma once

#include <iosfwd>
#include <string>

#include "casent/config.hpp"

namespace casent {

/// Exit codes shared by the CLI and the command layer.
///   0 success, 1 usage/config error, 2 numerical non-convergence,
///   3 verification failure.
enum ExitCode : int {
  exit_ok = 0,
  exit_usage = 1,
  exit_numeric = 2,
  exit_verify_failed = 3,
};

/// Each command renders its complete output before anything is written, so a
/// failure never leaves a partial file behind. `diag` receives progress and
/// error text (stderr in the CLI).
int cmd_nu(const RunConfig& cfg, std::ostream& out, std::ostream& diag);
int cmd_regimes(const RunConfig& cfg, std::ostream& out, std::ostream& diag);
int cmd_free_energy(const RunConfig& cfg, std::ostream& out, std::ostream& diag);
int cmd_entropy(const RunConfig& cfg, std::ostream& out, std::ostream& diag);
int cmd_fit(const RunConfig& cfg, std::ostream& out, std::ostream& diag);
int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& diag);

/// Dispatch by subcommand name; handles --output redirection.
int run_command(const std::string& name, const RunConfig& cfg, std::ostream& diag);

}  // namespace casent
