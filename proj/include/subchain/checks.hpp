#pragma once

#include <string>
#include <vector>

namespace subchain {

/// One validation check: the measured metric and the threshold it was
/// compared against.
struct CheckResult {
  std::string name;
  bool pass = false;
  double measured = 0.0;
  double tolerance = 0.0;
  std::string detail;
};

struct CheckOptions {
  bool quick = false;              // subset that runs in a few seconds
  bool mutate_kernel_sign = false; // flip the off-diagonal decay sign in
                                   // the energy-balance run (test hook;
                                   // the suite must then report failure)
};

/// Oracle/property suite: magic-angle kernel equality, angular-average
/// quadrature identity, Plancherel and density normalization, l-space
/// rhs identity, energy balance with dt-halving, step-halving
/// convergence.
std::vector<CheckResult> run_validation(const CheckOptions& opts);

bool all_pass(const std::vector<CheckResult>& results);

}  // namespace subchain
