// Acceptance gate: every numbered criterion prints one PASS/FAIL line with
// its observed worst value and runtime. Exit code 0 iff all pass.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "gjms/report.hpp"
#include "gjms/suites.hpp"

namespace {

struct Criterion {
  int number;
  std::string title;
  double budget_s;
  std::function<gjms::VerificationReport()> run;
};

}  // namespace

int main() {
  using gjms::VerificationReport;
  const std::uint64_t seed = 42;

  const std::vector<Criterion> criteria{
      {1, "Moebius distance identity (1000 seeded compositions)", 1.0,
       [&] { return gjms::suite_moebius(1000, seed); }},
      {2, "Dirac constant via distributional pairing, 4 dimension pairs",
       120.0, [&] { return gjms::suite_dirac(seed); }},
      {3, "mass cross-validation: limit extraction vs closed form", 30.0,
       [&] { return gjms::suite_mass_cross_validation(seed); }},
      {4, "sphere mass vanishes; quotient masses strictly positive", 30.0,
       [&] { return gjms::suite_sphere_mass(seed); }},
      {5, "covering identity on lens subgroup chains", 30.0,
       [&] { return gjms::suite_covering(seed); }},
      {6, "conformal covariance of P1 and P2 (order and residual)", 60.0,
       [&] { return gjms::suite_covariance(20, seed); }},
      {7, "fourth-order operator vs truncation is zeroth order", 120.0,
       [&] { return gjms::suite_prop21(10, seed); }},
      {8, "asymptotic-mass identity on RP3 and RP5", 300.0,
       [&] { return gjms::suite_thm51(); }},
      {9, "mixed blow-up of RP5 has vanishing second-order mass", 300.0,
       [&] { return gjms::suite_mixed_blowup(); }},
      {10, "canonical-metric scalar curvature: L(7;1,2) sign change, RP3 constant",
       60.0, [&] { return gjms::suite_hj(2000, seed); }},
  };

  bool all_pass = true;
  for (const Criterion& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    const VerificationReport rep = c.run();
    const double secs = std::chrono::duration<double>(
                            std::chrono::steady_clock::now() - t0)
                            .count();
    const bool in_budget = secs < c.budget_s;
    const bool pass = rep.pass() && in_budget;
    all_pass = all_pass && pass;
    std::printf("[%s] criterion %2d: %s (%.2f s, budget %.0f s)\n",
                pass ? "PASS" : "FAIL", c.number, c.title.c_str(), secs,
                c.budget_s);
    for (const gjms::CheckResult& check : rep.checks) {
      if (!check.pass || !in_budget) {
        std::printf("       %s %s [%s]: expected %.6g, observed %.6g, tol %.6g\n",
                    check.pass ? "ok  " : "FAIL", check.name.c_str(),
                    check.paper_anchor.c_str(), check.expected, check.observed,
                    check.tolerance);
      }
    }
  }
  std::printf("%s\n", all_pass ? "ALL CRITERIA PASS" : "CRITERIA FAILED");
  return all_pass ? 0 : 1;
}
