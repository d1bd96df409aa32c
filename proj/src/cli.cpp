#include "gjms/cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>

#include <json.hpp>

#include "gjms/asymptotic.hpp"
#include "gjms/constants.hpp"
#include "gjms/fields.hpp"
#include "gjms/flat_chart.hpp"
#include "gjms/green.hpp"
#include "gjms/parallel.hpp"
#include "gjms/rng.hpp"
#include "gjms/space_forms.hpp"
#include "gjms/suites.hpp"

namespace gjms::cli {

namespace {

using json = nlohmann::ordered_json;

std::string fmt17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

SpaceFormGroup group_from_spec(const std::string& spec, int ambient) {
  if (spec == "trivial") return trivial_group(ambient);
  return parse_lens(spec);
}

std::vector<double> parse_radii(const std::string& csv) {
  std::vector<double> out;
  std::size_t pos = 0;
  while (pos < csv.size()) {
    std::size_t next = csv.find(',', pos);
    if (next == std::string::npos) next = csv.size();
    out.push_back(std::stod(csv.substr(pos, next - pos)));
    pos = next + 1;
  }
  return out;
}

json check_to_json(const CheckResult& c, bool timings) {
  json j;
  j["name"] = c.name;
  j["paper_anchor"] = c.paper_anchor;
  j["expected"] = c.expected;
  j["observed"] = c.observed;
  j["tolerance"] = c.tolerance;
  j["pass"] = c.pass;
  if (timings) j["wall_ms"] = c.wall_ms;
  return j;
}

class CsvWriter {
 public:
  explicit CsvWriter(const std::string& path) {
    if (!path.empty()) {
      out_.open(path);
      if (!out_) throw UsageError("cannot open CSV output file: " + path);
    }
  }
  bool active() const { return out_.is_open(); }
  void header(const std::vector<std::string>& cols) {
    if (!active()) return;
    for (std::size_t i = 0; i < cols.size(); ++i)
      out_ << (i ? "," : "") << cols[i];
    out_ << "\n";
  }
  void row(const std::vector<double>& vals) {
    if (!active()) return;
    for (std::size_t i = 0; i < vals.size(); ++i)
      out_ << (i ? "," : "") << fmt17(vals[i]);
    out_ << "\n";
  }

 private:
  std::ofstream out_;
};

DimPair plan_dims(const CommandPlan& plan) {
  DimPair dims{plan.n, plan.k};
  dims.validate();
  return dims;
}

void run_constants(const CommandPlan& plan, json& out) {
  const DimPair dims = plan_dims(plan);
  out["data"]["n"] = dims.n;
  out["data"]["k"] = dims.k;
  out["data"]["c_nk"] = gjms_constant(dims);
  out["data"]["exact"] = gjms_constant_exact(dims).str();
  out["data"]["vol_sphere"] = vol_sphere(dims.n - 1);
  out["data"]["vol_sphere_exact"] = vol_sphere_exact(dims.n - 1).str();
}

void run_mass(const CommandPlan& plan, json& out, VerificationReport& rep) {
  const DimPair dims = plan_dims(plan);
  const SpaceFormGroup group = group_from_spec(plan.space, dims.n + 1);
  if (group.ambient_dim != dims.n + 1)
    throw UsageError("space does not act on S^n for the requested n");
  const GroupValidation val = validate_group(group);
  out["data"]["group_order"] = group.order();
  out["data"]["group_valid"] = val.ok();

  Rng rng(plan.seed);
  CsvWriter csv(plan.csv_path);
  std::vector<std::string> cols{"index"};
  for (int i = 0; i <= dims.n; ++i) cols.push_back("xi" + std::to_string(i));
  cols.push_back("mass");
  csv.header(cols);

  double lo = 1e300, hi = -1e300, sum = 0.0;
  for (int s = 0; s < plan.samples; ++s) {
    const SpherePoint xi(rng.unit_vec(dims.n + 1));
    const double mass = mass_closed_form(group, xi, dims).value;
    lo = std::min(lo, mass);
    hi = std::max(hi, mass);
    sum += mass;
    std::vector<double> row{static_cast<double>(s)};
    for (int i = 0; i <= dims.n; ++i) row.push_back(xi.coords()[i]);
    row.push_back(mass);
    csv.row(row);
  }
  out["data"]["samples"] = plan.samples;
  out["data"]["mass_min"] = lo;
  out["data"]["mass_max"] = hi;
  out["data"]["mass_mean"] = sum / plan.samples;

  CheckResult c;
  if (group.trivial()) {
    c.name = "sphere mass vanishes";
    c.paper_anchor = "Prop. 4.7";
    c.expected = 0.0;
    c.observed = hi;
    c.tolerance = 0.0;
    c.pass = lo == 0.0 && hi == 0.0;
  } else {
    c.name = "mass positive at all samples";
    c.paper_anchor = "Thm. 4.1";
    c.expected = 1.0;
    c.observed = lo > 0.0 ? 1.0 : 0.0;
    c.tolerance = 0.0;
    c.pass = lo > 0.0;
  }
  rep.checks.push_back(c);
}

void run_mass_limit(const CommandPlan& plan, json& out, VerificationReport& rep) {
  const DimPair dims = plan_dims(plan);
  const SpaceFormGroup group = group_from_spec(plan.space, dims.n + 1);
  const std::vector<double> radii =
      plan.radii.empty() ? std::vector<double>{0.2, 0.1, 0.05, 0.025, 0.0125}
                         : plan.radii;

  Rng rng(plan.seed);
  CsvWriter csv(plan.csv_path);
  std::vector<std::string> cols{"index"};
  for (int i = 0; i <= dims.n; ++i) cols.push_back("xi" + std::to_string(i));
  cols.insert(cols.end(), {"closed_form", "limit", "rel_diff", "error_estimate"});
  csv.header(cols);

  double worst = 0.0;
  for (int s = 0; s < plan.samples; ++s) {
    const SpherePoint xi(rng.unit_vec(dims.n + 1));
    const double closed = mass_closed_form(group, xi, dims).value;
    const MassReport limit = mass_via_limit(group, xi, dims, radii);
    const double scale = std::max(std::abs(closed), std::abs(limit.value));
    const double rel = scale > 0.0 ? std::abs(closed - limit.value) / scale : 0.0;
    worst = std::max(worst, rel);
    std::vector<double> row{static_cast<double>(s)};
    for (int i = 0; i <= dims.n; ++i) row.push_back(xi.coords()[i]);
    row.insert(row.end(), {closed, limit.value, rel, limit.error_estimate});
    csv.row(row);
  }
  out["data"]["samples"] = plan.samples;
  out["data"]["worst_rel_diff"] = worst;

  CheckResult c;
  c.name = "limit extraction matches closed form";
  c.paper_anchor = "Thm. 2.3 / Thm. 3.1";
  c.expected = 0.0;
  c.observed = worst;
  c.tolerance = plan.tolerance;
  c.pass = worst < plan.tolerance;
  rep.checks.push_back(c);
}

void run_hj_scan(const CommandPlan& plan, json& out, VerificationReport& rep) {
  const SpaceFormGroup group = group_from_spec(plan.space, 4);
  if (group.ambient_dim != 4)
    throw UsageError("hj-scan needs a space form of S^3");
  if (group.trivial())
    throw UsageError("hj-scan: canonical metric undefined on the round sphere");
  const DimPair dims{3, 1};

  Rng rng(plan.seed);
  std::vector<SpherePoint> pts;
  pts.reserve(static_cast<std::size_t>(plan.samples));
  for (int s = 0; s < plan.samples; ++s) pts.emplace_back(rng.unit_vec(4));
  std::vector<double> mass(pts.size()), scal(pts.size());
  parallel_for(pts.size(), [&](std::size_t i) {
    mass[i] = mass_closed_form(group, pts[i], dims).value;
    scal[i] = hj_scalar_curvature(group, pts[i]);
  });

  CsvWriter csv(plan.csv_path);
  csv.header({"index", "xi0", "xi1", "xi2", "xi3", "mass", "scal"});
  double lo = 1e300, hi = -1e300, min_mass = 1e300;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    lo = std::min(lo, scal[i]);
    hi = std::max(hi, scal[i]);
    min_mass = std::min(min_mass, mass[i]);
    csv.row({static_cast<double>(i), pts[i].coords()[0], pts[i].coords()[1],
             pts[i].coords()[2], pts[i].coords()[3], mass[i], scal[i]});
  }
  out["data"]["samples"] = plan.samples;
  out["data"]["scal_min"] = lo;
  out["data"]["scal_max"] = hi;
  out["data"]["mass_min"] = min_mass;
  out["data"]["sign_change"] = lo < 0.0 && hi > 0.0;

  CheckResult c;
  c.name = "mass positive (canonical metric defined)";
  c.paper_anchor = "Thm. 4.1";
  c.expected = 1.0;
  c.observed = min_mass > 0.0 ? 1.0 : 0.0;
  c.tolerance = 0.0;
  c.pass = min_mass > 0.0;
  rep.checks.push_back(c);
}

void run_dirac_field(const CommandPlan& plan, json& out, VerificationReport& rep) {
  const DimPair dims = plan_dims(plan);
  const ScalarField test = parse_field(plan.field, dims.n);
  const double expected = gjms_constant(dims) * test(Vec::Zero(dims.n));
  std::vector<double> values, errs;
  for (int stage = 0; stage < 3; ++stage) {
    values.push_back(dirac_pairing(
        dims, test, dirac_grid_preset(dims.n, dims.k, stage)));
    errs.push_back(std::abs(values.back() - expected));
  }
  out["data"]["field"] = plan.field;
  out["data"]["expected"] = expected;
  out["data"]["values"] = values;

  CheckResult c;
  c.name = "dirac pairing of " + plan.field;
  c.paper_anchor = "Lemma 2.2";
  c.expected = expected;
  c.observed = values.back();
  c.tolerance = 1e-3 * std::max(std::abs(expected), 1.0);
  c.pass = errs[2] <= c.tolerance && errs[0] > errs[1] && errs[1] > errs[2];
  rep.checks.push_back(c);
}

void run_verify(const CommandPlan& plan, json& out, VerificationReport& rep) {
  if (plan.verify_target == "moebius") {
    rep.append(suite_moebius(plan.trials, plan.seed));
  } else if (plan.verify_target == "dirac") {
    if (!plan.field.empty())
      run_dirac_field(plan, out, rep);
    else
      rep.append(suite_dirac(plan.seed));
  } else if (plan.verify_target == "covariance") {
    rep.append(suite_covariance(plan.points, plan.seed));
  } else if (plan.verify_target == "prop21") {
    rep.append(suite_prop21(plan.points, plan.seed));
  } else if (plan.verify_target == "covering") {
    if (!plan.space.empty() && !plan.sub_space.empty()) {
      const SpaceFormGroup full = group_from_spec(plan.space, 0);
      const SpaceFormGroup sub = group_from_spec(plan.sub_space, full.ambient_dim);
      const DimPair dims{full.sphere_dim(), plan.k};
      Rng rng(plan.seed);
      double worst = 0.0;
      for (int s = 0; s < 10; ++s) {
        const SpherePoint xi(rng.unit_vec(full.ambient_dim));
        worst = std::max(worst,
                         std::abs(covering_mass_residual(sub, full, xi, dims)));
      }
      CheckResult c;
      c.name = "covering identity, " + plan.sub_space + " in " + plan.space;
      c.paper_anchor = "Eq. (4.12)";
      c.expected = 0.0;
      c.observed = worst;
      c.tolerance = 1e-12;
      c.pass = worst < 1e-12;
      rep.checks.push_back(c);
    } else {
      rep.append(suite_covering(plan.seed));
    }
  } else if (plan.verify_target == "thm51") {
    const DimPair dims = plan_dims(plan);
    const SpaceFormGroup group = group_from_spec(plan.space, dims.n + 1);
    const std::vector<double> radii =
        plan.radii.empty() ? default_flux_radii() : plan.radii;
    const Thm51Result r = thm51_check(group, dims, radii);
    out["data"]["mass"] = r.mass;
    out["data"]["mk"] = r.mk;
    out["data"]["residual"] = r.residual;
    const double tol = dims.k == 1 ? 0.01 : 0.02;
    CheckResult c;
    c.name = "mass identity residual, " + plan.space;
    c.paper_anchor = "Thm. 5.1";
    c.expected = 0.0;
    c.observed = r.residual;
    c.tolerance = tol;
    c.pass = r.residual < tol;
    rep.checks.push_back(c);
  } else {
    throw UsageError("unknown verify target: " + plan.verify_target);
  }
}

void run_report(const CommandPlan& plan, VerificationReport& rep) {
  rep.append(suite_moebius(plan.trials, plan.seed));
  rep.append(suite_dirac(plan.seed));
  rep.append(suite_mass_cross_validation(plan.seed));
  rep.append(suite_sphere_mass(plan.seed));
  rep.append(suite_covering(plan.seed));
  rep.append(suite_covariance(plan.points, plan.seed));
  rep.append(suite_prop21(10, plan.seed));
  rep.append(suite_thm51());
  rep.append(suite_mixed_blowup());
  rep.append(suite_hj(2000, plan.seed));
}

}  // namespace

CommandPlan parse_args(const std::vector<std::string>& argv) {
  CLI::App app{"Green kernels, conformal masses and canonical metrics of "
               "sphere quotients"};
  app.require_subcommand(1);

  CommandPlan plan;
  std::string radii_csv;

  const auto add_common = [&](CLI::App* sub) {
    sub->add_option("--seed", plan.seed, "RNG seed (default 42)");
    sub->add_option("--csv", plan.csv_path, "write rows to this CSV file");
    sub->add_flag("--timings", plan.timings, "include wall-clock times in JSON");
  };

  CLI::App* constants = app.add_subcommand("constants", "model constants");
  constants->add_option("--n", plan.n)->required();
  constants->add_option("--k", plan.k)->required();
  add_common(constants);

  CLI::App* mass = app.add_subcommand("mass", "closed-form mass table");
  mass->add_option("--space", plan.space, "lens spec L(p;q1,...) or 'trivial'")
      ->required();
  mass->add_option("--k", plan.k);
  mass->add_option("--samples", plan.samples);
  add_common(mass);

  CLI::App* mass_limit =
      app.add_subcommand("mass-limit", "limit-extraction pipeline");
  mass_limit->add_option("--space", plan.space)->required();
  mass_limit->add_option("--k", plan.k);
  mass_limit->add_option("--samples", plan.samples);
  mass_limit->add_option("--tol", plan.tolerance);
  mass_limit->add_option("--radii", radii_csv, "comma-separated chart radii");
  add_common(mass_limit);

  CLI::App* hj = app.add_subcommand("hj-scan", "scalar-curvature sampling");
  hj->add_option("--space", plan.space)->required();
  hj->add_option("--samples", plan.samples);
  add_common(hj);

  CLI::App* verify = app.add_subcommand("verify", "verification suites");
  verify
      ->add_option("target", plan.verify_target,
                   "moebius|dirac|covariance|prop21|covering|thm51")
      ->required();
  verify->add_option("--space", plan.space);
  verify->add_option("--sub", plan.sub_space);
  verify->add_option("--n", plan.n);
  verify->add_option("--k", plan.k);
  verify->add_option("--trials", plan.trials);
  verify->add_option("--points", plan.points);
  verify->add_option("--radii", radii_csv, "comma-separated flux radii");
  verify->add_option("--field", plan.field,
                     "test field for dirac: round_chart|gaussian(a)|bump(r)|poly(c0,...)");
  add_common(verify);

  CLI::App* report = app.add_subcommand("report", "full verification suite");
  report->add_option("--trials", plan.trials);
  report->add_option("--points", plan.points);
  add_common(report);

  std::vector<const char*> cargs;
  cargs.push_back("gjms");
  for (const std::string& a : argv) cargs.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(cargs.size()),
              const_cast<char**>(cargs.data()));
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  plan.subcommand = app.get_subcommands().front()->get_name();
  if (!radii_csv.empty()) {
    try {
      plan.radii = parse_radii(radii_csv);
    } catch (const std::exception&) {
      throw UsageError("invalid radii list: " + radii_csv);
    }
  }

  // Validate parameters against the subcommand's preconditions now, so a bad
  // invocation exits with a usage error before any work starts.
  try {
    if (!plan.space.empty() && plan.space != "trivial") parse_lens(plan.space);
    if (!plan.sub_space.empty() && plan.sub_space != "trivial")
      parse_lens(plan.sub_space);
    if (plan.subcommand == "constants" || plan.subcommand == "mass" ||
        plan.subcommand == "mass-limit")
      DimPair{plan.n, plan.k}.validate();
    if (!plan.field.empty()) {
      DimPair{plan.n, plan.k}.validate();
      parse_field(plan.field, plan.n);
    }
    if (!plan.radii.empty()) {
      if (plan.radii.size() < 2)
        throw std::invalid_argument("need at least two radii");
      const bool chart_radii = plan.subcommand == "mass-limit";
      for (std::size_t i = 0; i < plan.radii.size(); ++i) {
        if (!(plan.radii[i] > 0.0))
          throw std::invalid_argument("radii must be positive");
        if (chart_radii && plan.radii[i] >= 0.5)
          throw std::invalid_argument("chart radii must lie in (0, 0.5)");
        const double ratio =
            i > 0 ? plan.radii[i - 1] / plan.radii[i] : (chart_radii ? 2.0 : 0.5);
        if (std::abs(ratio - (chart_radii ? 2.0 : 0.5)) > 1e-9)
          throw std::invalid_argument(
              chart_radii ? "chart radii must halve" : "flux radii must double");
      }
    }
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
  if (plan.subcommand == "mass" || plan.subcommand == "mass-limit" ||
      plan.subcommand == "hj-scan") {
    if (plan.space != "trivial") {
      const SpaceFormGroup g = parse_lens(plan.space);
      // n is implied by the space for these commands.
      plan.n = g.sphere_dim();
      DimPair dims{plan.n, plan.k};
      try {
        dims.validate();
        if (!dims.mass_range())
          throw std::invalid_argument("need 2k+1 <= n <= 2k+3");
      } catch (const std::exception& e) {
        throw UsageError(e.what());
      }
    }
  }
  if (plan.subcommand == "verify" && plan.verify_target == "thm51") {
    if (plan.space.empty()) throw UsageError("verify thm51 requires --space");
    if (plan.space != "trivial")
      plan.n = parse_lens(plan.space).sphere_dim();
    DimPair dims{plan.n, plan.k};
    try {
      dims.validate();
      if (!dims.mass_range())
        throw std::invalid_argument("need 2k+1 <= n <= 2k+3");
    } catch (const std::exception& e) {
      throw UsageError(e.what());
    }
  }
  return plan;
}

RunResult run_plan(const CommandPlan& plan) {
  const char* env_threads = std::getenv("GJMS_THREADS");
  if (env_threads) cap_threads(std::atoi(env_threads));

  RunResult result;
  json out;
  out["command"] = plan.subcommand +
                   (plan.verify_target.empty() ? "" : " " + plan.verify_target);
  out["seed"] = plan.seed;

  try {
    if (plan.subcommand == "constants") {
      run_constants(plan, out);
    } else if (plan.subcommand == "mass") {
      run_mass(plan, out, result.report);
    } else if (plan.subcommand == "mass-limit") {
      run_mass_limit(plan, out, result.report);
    } else if (plan.subcommand == "hj-scan") {
      run_hj_scan(plan, out, result.report);
    } else if (plan.subcommand == "verify") {
      run_verify(plan, out, result.report);
    } else if (plan.subcommand == "report") {
      run_report(plan, result.report);
    } else {
      throw UsageError("unknown subcommand: " + plan.subcommand);
    }
  } catch (const UsageError&) {
    throw;
  } catch (const std::exception& e) {
    CheckResult c;
    c.name = std::string("execution error: ") + e.what();
    c.paper_anchor = "";
    c.pass = false;
    result.report.checks.push_back(c);
  }

  json checks = json::array();
  for (const CheckResult& c : result.report.checks)
    checks.push_back(check_to_json(c, plan.timings));
  out["checks"] = std::move(checks);
  out["pass"] = result.report.pass();
  if (!plan.csv_path.empty()) out["csv"] = plan.csv_path;

  // Check-style commands tabulate their checks; the data commands have
  // already written their row CSVs.
  if (!plan.csv_path.empty() &&
      (plan.subcommand == "verify" || plan.subcommand == "report")) {
    std::ofstream csv(plan.csv_path);
    if (csv) {
      csv << "name,paper_anchor,expected,observed,tolerance,pass\n";
      for (const CheckResult& c : result.report.checks) {
        csv << '"' << c.name << "\",\"" << c.paper_anchor << "\","
            << fmt17(c.expected) << ',' << fmt17(c.observed) << ','
            << fmt17(c.tolerance) << ',' << (c.pass ? 1 : 0) << "\n";
      }
    }
  }

  result.json = out.dump(2) + "\n";
  result.exit_code = result.report.pass() ? 0 : 1;
  return result;
}

int main_entry(const std::vector<std::string>& argv) {
  try {
    const CommandPlan plan = parse_args(argv);
    const RunResult result = run_plan(plan);
    std::cout << result.json;
    return result.exit_code;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace gjms::cli
