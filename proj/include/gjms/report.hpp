#pragma once

#include <string>
#include <vector>

namespace gjms {

/// One verification check: an observed quantity against its expected value
/// at a stated tolerance. `paper_anchor` names the theorem under test so a
/// failure points back to the identity it breaks.
struct CheckResult {
  std::string name;
  std::string paper_anchor;
  double expected = 0.0;
  double observed = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  double wall_ms = 0.0;
};

struct VerificationReport {
  std::vector<CheckResult> checks;

  bool pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
  void append(const VerificationReport& other) {
    checks.insert(checks.end(), other.checks.begin(), other.checks.end());
  }
};

}  // namespace gjms
