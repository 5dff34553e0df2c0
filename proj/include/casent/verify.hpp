#pragma once

#include <string>
#include <vector>

namespace casent {

struct VerifyOptions {
  bool slow = true;  // include the physical-nu0 deep-low-T checks
  int threads = 1;
};

struct CheckResult {
  std::string name;
  bool passed = false;
  bool skipped = false;    // slow check not enabled on this run
  std::string detail;      // deterministic: measured vs expected values
  double elapsed_s = 0.0;  // not part of the byte-compared report
  double budget_s = 0.0;
};

/// Golden suite over built-in Au defaults (omega_p = 9 eV, T_D = 165 K,
/// nu(300 K) = 34.5 meV, a = 1 um). One entry per acceptance criterion.
std::vector<CheckResult> run_verify(const VerifyOptions& options);

/// Deterministic pass/fail report (no timings). Repeated runs and runs at
/// different thread counts produce identical bytes.
std::string render_verify_report(const std::vector<CheckResult>& results);

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace casent
