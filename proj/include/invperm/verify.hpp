#pragma once

#include <string>

namespace invperm {

enum class VerifySuite { all, bijections, counts };

struct VerifyResult {
  std::string report;  // deterministic, one check per line
  int checks = 0;
  int mismatches = 0;
  int errata = 0;  // printed-formula deviations; informational only
};

/// Runs every fast path and bijection against the oracle for k = 0..kmax.
VerifyResult run_verification(int kmax, VerifySuite suite = VerifySuite::all);

}  // namespace invperm
