#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "gjms/cli.hpp"

using namespace gjms::cli;

TEST_CASE("parse_args: mass plan") {
  const CommandPlan plan = parse_args({"mass", "--space", "L(7;1,2)", "--k", "1"});
  CHECK(plan.subcommand == "mass");
  CHECK(plan.space == "L(7;1,2)");
  CHECK(plan.k == 1);
  CHECK(plan.n == 3);
  CHECK(plan.seed == 42);
}

TEST_CASE("parse_args: thm51 plan with radii") {
  const CommandPlan plan = parse_args({"verify", "thm51", "--space", "L(2;1,1)",
                                       "--k", "1", "--radii", "20,40,80"});
  CHECK(plan.subcommand == "verify");
  CHECK(plan.verify_target == "thm51");
  CHECK(plan.n == 3);  // inferred from the space
  CHECK(plan.radii == std::vector<double>{20.0, 40.0, 80.0});
}

TEST_CASE("run_plan: thm51 on RP3 passes end to end") {
  const CommandPlan plan = parse_args({"verify", "thm51", "--space", "L(2;1,1)",
                                       "--k", "1", "--radii", "10,20,40"});
  const RunResult result = run_plan(plan);
  CHECK(result.exit_code == 0);
  CHECK(result.json.find("\"mass\"") != std::string::npos);
}

TEST_CASE("parse_args: usage errors") {
  CHECK_THROWS_AS(parse_args({"mass", "--space", "L(4;2,1)"}), UsageError);
  CHECK_THROWS_AS(parse_args({"mass", "--space", "L(7;1,2)", "--bogus"}),
                  UsageError);
  CHECK_THROWS_AS(parse_args({"unknown-command"}), UsageError);
  CHECK_THROWS_AS(parse_args({}), UsageError);
  CHECK_THROWS_AS(parse_args({"constants", "--n", "4", "--k", "2"}), UsageError);
  CHECK_THROWS_AS(parse_args({"verify", "thm51"}), UsageError);
}

TEST_CASE("run_plan: constants emits the exact form") {
  const CommandPlan plan = parse_args({"constants", "--n", "5", "--k", "2"});
  const RunResult result = run_plan(plan);
  CHECK(result.exit_code == 0);
  CHECK(result.json.find("\"16*pi^2\"") != std::string::npos);
  CHECK(result.json.find("157.91") != std::string::npos);
}

TEST_CASE("run_plan: sphere mass is zero and passes") {
  const CommandPlan plan =
      parse_args({"mass", "--space", "trivial", "--samples", "5"});
  const RunResult result = run_plan(plan);
  CHECK(result.exit_code == 0);
  CHECK(result.report.pass());
}

TEST_CASE("run_plan: reports are byte-identical for a fixed seed") {
  const CommandPlan plan = parse_args(
      {"verify", "moebius", "--trials", "64", "--seed", "7"});
  const RunResult a = run_plan(plan);
  const RunResult b = run_plan(plan);
  CHECK(a.exit_code == 0);
  CHECK(a.json == b.json);

  // The thread cap must not change the bytes either.
  setenv("GJMS_THREADS", "1", 1);
  const RunResult c = run_plan(plan);
  unsetenv("GJMS_THREADS");
  const RunResult d = run_plan(plan);
  CHECK(a.json == c.json);
  CHECK(a.json == d.json);
}

TEST_CASE("run_plan: mass-limit small run passes") {
  const CommandPlan plan = parse_args({"mass-limit", "--space", "L(2;1,1)",
                                       "--k", "1", "--samples", "2"});
  const RunResult result = run_plan(plan);
  CHECK(result.exit_code == 0);
}

TEST_CASE("run_plan: hj-scan writes the CSV schema") {
  const std::string path = "hj_scan_test_out.csv";
  const CommandPlan plan = parse_args({"hj-scan", "--space", "L(7;1,2)",
                                       "--samples", "4", "--csv", path});
  const RunResult result = run_plan(plan);
  CHECK(result.exit_code == 0);
  std::ifstream in(path);
  std::string header;
  std::getline(in, header);
  CHECK(header == "index,xi0,xi1,xi2,xi3,mass,scal");
  int rows = 0;
  std::string line;
  while (std::getline(in, line))
    if (!line.empty()) ++rows;
  CHECK(rows == 4);
  in.close();
  std::remove(path.c_str());
}

TEST_CASE("parse_args validates radii shapes") {
  CHECK_THROWS_AS(parse_args({"mass-limit", "--space", "L(2;1,1)", "--radii",
                              "0.2,0.15"}),
                  UsageError);
  CHECK_THROWS_AS(parse_args({"verify", "thm51", "--space", "L(2;1,1)",
                              "--radii", "20,30"}),
                  UsageError);
  CHECK_NOTHROW(parse_args({"verify", "thm51", "--space", "L(2;1,1)",
                            "--radii", "20,40,80"}));
}

TEST_CASE("exit codes: 1 for failed checks, 2 for usage errors") {
  CHECK(main_entry({"mass", "--space", "L(4;2,1)"}) == 2);
  // An unreachable tolerance turns the cross-validation check red.
  const CommandPlan plan = parse_args({"mass-limit", "--space", "L(2;1,1)",
                                       "--k", "1", "--samples", "1", "--tol",
                                       "1e-30"});
  const RunResult result = run_plan(plan);
  CHECK(result.exit_code == 1);
  CHECK_FALSE(result.report.pass());
}
