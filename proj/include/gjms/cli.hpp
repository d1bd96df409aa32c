#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "gjms/report.hpp"

namespace gjms::cli {

/// Raised for unknown flags, malformed specs, or violated preconditions;
/// the driver maps it to exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A parsed and validated invocation.
struct CommandPlan {
  std::string subcommand;      // constants | mass | mass-limit | hj-scan | verify | report
  std::string verify_target;   // moebius | dirac | covariance | prop21 | covering | thm51
  int n = 5;
  int k = 1;
  std::string space;           // lens spec "L(p;q1,...,qm)" or "trivial"
  std::string sub_space;       // subgroup spec for covering checks
  int samples = 100;
  int trials = 1000;
  int points = 20;
  std::uint64_t seed = 42;
  double tolerance = 1e-6;
  std::vector<double> radii;   // flux or chart radii, subcommand-dependent
  std::string field;           // named test field, e.g. "bump(0.8)"
  std::string csv_path;
  bool timings = false;
};

/// Parses argv (without the program name). Throws UsageError on unknown
/// flags, malformed lens specs, or non-free actions.
CommandPlan parse_args(const std::vector<std::string>& argv);

struct RunResult {
  VerificationReport report;
  std::string json;   // rendered report, newline-terminated
  int exit_code = 0;  // 0 all pass, 1 check failure
};

/// Executes the plan, writes any requested CSV, and renders the JSON report.
/// Execution errors surface as failed checks, never as exceptions.
RunResult run_plan(const CommandPlan& plan);

/// parse_args + run_plan + stdout/stderr plumbing; returns the exit code.
int main_entry(const std::vector<std::string>& argv);

}  // namespace gjms::cli
