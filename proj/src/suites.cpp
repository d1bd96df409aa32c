#include "gjms/suites.hpp"

#include <chrono>
#include <cmath>
#include <string>

#include "gjms/asymptotic.hpp"
#include "gjms/constants.hpp"
#include "gjms/fields.hpp"
#include "gjms/flat_chart.hpp"
#include "gjms/green.hpp"
#include "gjms/rng.hpp"
#include "gjms/space_forms.hpp"
#include "gjms/sphere.hpp"

namespace gjms {

namespace {

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double ms() const {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

CheckResult make_check(std::string name, std::string anchor, double expected,
                       double observed, double tolerance, bool pass,
                       double wall_ms) {
  CheckResult c;
  c.name = std::move(name);
  c.paper_anchor = std::move(anchor);
  c.expected = expected;
  c.observed = observed;
  c.tolerance = tolerance;
  c.pass = pass;
  c.wall_ms = wall_ms;
  return c;
}

Mat random_rotation(Rng& rng, int n) {
  Mat g(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) g(i, j) = rng.gaussian();
  Eigen::HouseholderQR<Mat> qr(g);
  Mat q = qr.householderQ() * Mat::Identity(n, n);
  Mat r = qr.matrixQR().template triangularView<Eigen::Upper>();
  for (int i = 0; i < n; ++i)
    if (r(i, i) < 0) q.col(i) = -q.col(i);
  return q;
}

MoebiusMap random_moebius(Rng& rng, int n, int stages) {
  MoebiusMap map;
  for (int s = 0; s < stages; ++s) {
    const double pick = rng.uniform();
    if (pick < 0.4) {
      map.push_isometry(random_rotation(rng, n), rng.uniform_vec(n, -1.0, 1.0));
    } else if (pick < 0.7) {
      map.push_dilation(std::exp(rng.uniform(-1.2, 1.2)));
    } else {
      map.push_inversion();
    }
  }
  return map;
}

double rel_diff(double a, double b) {
  const double scale = std::max(std::abs(a), std::abs(b));
  return scale > 0.0 ? std::abs(a - b) / scale : 0.0;
}

}  // namespace

VerificationReport suite_moebius(int trials, std::uint64_t seed, Exec exec) {
  Stopwatch sw;
  // Pre-draw all trials so the parallel loop only evaluates.
  struct Trial {
    MoebiusMap map;
    Vec x, y;
  };
  Rng rng(seed);
  std::vector<Trial> set;
  set.reserve(static_cast<std::size_t>(trials));
  for (int t = 0; t < trials; ++t) {
    const int n = 2 + t % 6;
    Trial tr;
    tr.map = random_moebius(rng, n, 5);
    for (int attempt = 0; attempt < 100; ++attempt) {
      tr.x = rng.uniform_vec(n, -2.0, 2.0);
      tr.y = rng.uniform_vec(n, -2.0, 2.0);
      try {
        tr.map.apply(tr.x);
        tr.map.apply(tr.y);
        break;
      } catch (const std::domain_error&) {
        // pole hit, redraw the pair
      }
    }
    set.push_back(std::move(tr));
  }
  std::vector<double> res(set.size());
  parallel_for(
      set.size(),
      [&](std::size_t i) {
        const Trial& tr = set[i];
        res[i] = std::abs(moebius_identity_residual(tr.map, tr.x, tr.y)) /
                 (1.0 + (tr.x - tr.y).squaredNorm());
      },
      exec);
  double worst = 0.0;
  for (double v : res) worst = std::max(worst, v);

  VerificationReport rep;
  rep.checks.push_back(make_check("moebius distance identity, max residual",
                                  "Prop. 3.4", 0.0, worst, 1e-12,
                                  worst < 1e-12, sw.ms()));
  return rep;
}

VerificationReport suite_dirac(std::uint64_t /*seed*/, Exec exec) {
  VerificationReport rep;
  const std::vector<DimPair> cases{{3, 1}, {5, 1}, {5, 2}, {7, 2}};
  for (const DimPair& dims : cases) {
    Stopwatch sw;
    // Low-degree bump: its iterated Laplacians stay within the Gauss orders
    // of the grid presets while keeping C^3 regularity across the edge.
    const ScalarField test = bump_field(dims.n, 0.8, 8, Vec(), 1.0);
    const double expected = gjms_constant(dims);  // test(0) = 1
    std::vector<double> errs;
    double finest = 0.0;
    for (int stage = 0; stage < 3; ++stage) {
      finest = dirac_pairing(dims, test, dirac_grid_preset(dims.n, dims.k, stage),
                             exec);
      errs.push_back(std::abs(finest - expected) / expected);
    }
    const bool monotone = errs[0] > errs[1] && errs[1] > errs[2];
    const std::string tag =
        "(" + std::to_string(dims.n) + "," + std::to_string(dims.k) + ")";
    rep.checks.push_back(make_check("dirac constant " + tag, "Lemma 2.2",
                                    expected, finest, 1e-3 * expected,
                                    errs[2] < 1e-3, sw.ms()));
    rep.checks.push_back(make_check("dirac monotone refinement " + tag,
                                    "Lemma 2.2", 1.0, monotone ? 1.0 : 0.0,
                                    0.0, monotone, sw.ms()));
  }
  return rep;
}

VerificationReport suite_mass_cross_validation(std::uint64_t seed) {
  VerificationReport rep;
  struct Case {
    const char* name;
    SpaceFormGroup group;
    DimPair dims;
  };
  const std::vector<Case> cases{
      {"RP3", lens_group(2, {1, 1}), {3, 1}},
      {"L(3;1,1)", lens_group(3, {1, 1}), {3, 1}},
      {"L(7;1,2)", lens_group(7, {1, 2}), {3, 1}},
      {"RP5", lens_group(2, {1, 1, 1}), {5, 2}},
  };
  const std::vector<double> radii{0.2, 0.1, 0.05, 0.025, 0.0125};
  Rng rng(seed);
  for (const Case& c : cases) {
    Stopwatch sw;
    double worst = 0.0;
    for (int s = 0; s < 5; ++s) {
      const SpherePoint xi(rng.unit_vec(c.dims.n + 1));
      const double closed = mass_closed_form(c.group, xi, c.dims).value;
      const double limit = mass_via_limit(c.group, xi, c.dims, radii).value;
      worst = std::max(worst, rel_diff(closed, limit));
    }
    rep.checks.push_back(make_check(
        std::string("mass limit vs closed form, ") + c.name,
        "Thm. 2.3 / Thm. 3.1 / Prop. 4.8", 0.0, worst, 1e-6, worst < 1e-6,
        sw.ms()));
  }
  return rep;
}

VerificationReport suite_sphere_mass(std::uint64_t seed) {
  VerificationReport rep;
  Rng rng(seed);
  {
    Stopwatch sw;
    double worst = 0.0;
    for (int s = 0; s < 10; ++s) {
      const SpherePoint xi(rng.unit_vec(4));
      worst = std::max(
          worst, std::abs(mass_closed_form(trivial_group(4), xi, {3, 1}).value));
    }
    rep.checks.push_back(make_check("sphere mass vanishes", "Prop. 4.7", 0.0,
                                    worst, 0.0, worst == 0.0, sw.ms()));
  }
  struct Case {
    const char* name;
    SpaceFormGroup group;
    DimPair dims;
  };
  const std::vector<Case> cases{
      {"RP3", lens_group(2, {1, 1}), {3, 1}},
      {"L(3;1,1)", lens_group(3, {1, 1}), {3, 1}},
      {"L(7;1,2)", lens_group(7, {1, 2}), {3, 1}},
      {"L(8;1,1)", lens_group(8, {1, 1}), {3, 1}},
      {"RP5", lens_group(2, {1, 1, 1}), {5, 2}},
  };
  for (const Case& c : cases) {
    Stopwatch sw;
    double min_mass = 1e300;
    for (int s = 0; s < 10; ++s) {
      const SpherePoint xi(rng.unit_vec(c.dims.n + 1));
      min_mass = std::min(min_mass, mass_closed_form(c.group, xi, c.dims).value);
    }
    rep.checks.push_back(make_check(
        std::string("mass positivity, ") + c.name, "Thm. 4.1", 1.0,
        min_mass > 0.0 ? 1.0 : 0.0, 0.0, min_mass > 0.0, sw.ms()));
  }
  return rep;
}

VerificationReport suite_covering(std::uint64_t seed) {
  VerificationReport rep;
  struct Pair {
    const char* name;
    SpaceFormGroup sub, full;
  };
  const std::vector<Pair> pairs{
      {"{+-Id} in L(4;1,1)", lens_group(2, {1, 1}), lens_group(4, {1, 1})},
      {"{+-Id} in L(8;1,1)", lens_group(2, {1, 1}), lens_group(8, {1, 1})},
      {"L(4;1,1) in L(8;1,1)", lens_group(4, {1, 1}), lens_group(8, {1, 1})},
      {"trivial in L(8;1,1)", trivial_group(4), lens_group(8, {1, 1})},
  };
  const DimPair dims{3, 1};
  Rng rng(seed);
  for (const Pair& p : pairs) {
    Stopwatch sw;
    double worst = 0.0;
    for (int s = 0; s < 10; ++s) {
      const SpherePoint xi(rng.unit_vec(4));
      worst = std::max(
          worst, std::abs(covering_mass_residual(p.sub, p.full, xi, dims)));
    }
    rep.checks.push_back(make_check(std::string("covering identity, ") + p.name,
                                    "Eq. (4.12)", 0.0, worst, 1e-12,
                                    worst < 1e-12, sw.ms()));
  }
  return rep;
}

namespace {

struct OrderStudy {
  double min_order = 1e300;
  double max_extrap_rel = 0.0;
};

/// Residuals at steps h and h/2; at the roundoff floor the pair counts as
/// converged at the stencil order.
void accumulate_order(OrderStudy& study, double r1, double r2, double scale) {
  const double floor = 1e-13 * scale;
  if (r1 < floor && r2 < floor) {
    study.min_order = std::min(study.min_order, 4.0);
    study.max_extrap_rel = std::max(study.max_extrap_rel, r2 / scale);
    return;
  }
  const double order = std::log2(r1 / std::max(r2, 1e-300));
  study.min_order = std::min(study.min_order, order);
  const double extrap = r2 * (r2 / std::max(r1, 1e-300));
  study.max_extrap_rel = std::max(study.max_extrap_rel, extrap / scale);
}

}  // namespace

VerificationReport suite_covariance(int points, std::uint64_t seed) {
  VerificationReport rep;
  const int n = 5;
  const double h = 0.04;
  for (int k = 1; k <= 2; ++k) {
    Stopwatch sw;
    Rng rng(seed + static_cast<std::uint64_t>(k));
    OrderStudy study;
    for (int s = 0; s < points; ++s) {
      const ScalarField f = random_smooth_field(n, rng, 0.25, 0.0);
      const ScalarField phi = random_smooth_field(n, rng, 0.35, 1.3);
      const ScalarField u = random_smooth_field(n, rng, 0.8, 1.1);
      const Vec x = rng.uniform_vec(n, -0.3, 0.3);

      const ScalarField phi_u(
          [phi, u](const Vec& y) { return phi(y) * u(y); }, u.domain());
      const double weight =
          std::pow(phi(x), -static_cast<double>(n + 2 * k) / (n - 2 * k));
      const double scale =
          std::max({std::abs(paneitz_apply(k, f, u, x, n, h)),
                    std::abs(weight * paneitz_apply(k, f, phi_u, x, n, h)),
                    1e-6});
      const double r1 = covariance_residual(k, f, phi, u, x, n, h);
      const double r2 = covariance_residual(k, f, phi, u, x, n, h / 2.0);
      accumulate_order(study, r1, r2, scale);
    }
    const std::string tag = "k=" + std::to_string(k);
    rep.checks.push_back(make_check("covariance order, " + tag,
                                    "Intro transformation law", 4.0,
                                    study.min_order, 1.0, study.min_order >= 3.0,
                                    sw.ms()));
    rep.checks.push_back(make_check("covariance extrapolated residual, " + tag,
                                    "Intro transformation law", 0.0,
                                    study.max_extrap_rel, 1e-5,
                                    study.max_extrap_rel < 1e-5, sw.ms()));
  }
  return rep;
}

VerificationReport suite_prop21(int triples, std::uint64_t seed) {
  VerificationReport rep;
  const int n = 5;
  const double h = 0.04;
  Stopwatch sw;
  Rng rng(seed);
  OrderStudy study;
  for (int s = 0; s < triples; ++s) {
    const ScalarField f = random_smooth_field(n, rng, 0.25, 0.0);
    const ScalarField u = random_smooth_field(n, rng, 0.8, 1.4);
    const ScalarField v = random_smooth_field(n, rng, 0.9, -1.6);
    const Vec x = rng.uniform_vec(n, -0.3, 0.3);

    const double scale =
        std::max({std::abs(paneitz_apply(2, f, u, x, n, h) / u(x)),
                  std::abs(paneitz_apply(2, f, v, x, n, h) / v(x)), 1e-6});
    const double r1 = gjms_second_term_residual(f, u, v, x, n, h);
    const double r2 = gjms_second_term_residual(f, u, v, x, n, h / 2.0);
    accumulate_order(study, r1, r2, scale);
  }
  rep.checks.push_back(make_check("fourth-order operator vs truncation",
                                  "Prop. 2.1 / Eq. (4.1)", 0.0,
                                  study.max_extrap_rel, 1e-4,
                                  study.max_extrap_rel < 1e-4, sw.ms()));
  return rep;
}

VerificationReport suite_thm51(Exec exec) {
  VerificationReport rep;
  {
    Stopwatch sw;
    const Thm51Result r =
        thm51_check(lens_group(2, {1, 1}), {3, 1}, default_flux_radii(), {}, exec);
    const double m_expected = 1.0 / M_PI;
    rep.checks.push_back(make_check("RP3 ADM mass", "Thm. 5.1", m_expected,
                                    r.mk, 0.01 * m_expected,
                                    rel_diff(r.mk, m_expected) < 0.01, sw.ms()));
    rep.checks.push_back(make_check("RP3 mass identity residual", "Thm. 5.1",
                                    0.0, r.residual, 0.01, r.residual < 0.01,
                                    sw.ms()));
  }
  {
    Stopwatch sw;
    const Thm51Result r = thm51_check(lens_group(2, {1, 1, 1}), {5, 2},
                                      default_flux_radii(), {}, exec);
    const double m_expected = 0.5 / (M_PI * M_PI);
    rep.checks.push_back(make_check("RP5 second-order mass", "Thm. 5.1",
                                    m_expected, r.mk, 0.02 * m_expected,
                                    rel_diff(r.mk, m_expected) < 0.02, sw.ms()));
    rep.checks.push_back(make_check("RP5 mass identity residual", "Thm. 5.1",
                                    0.0, r.residual, 0.02, r.residual < 0.02,
                                    sw.ms()));
  }
  return rep;
}

VerificationReport suite_mixed_blowup(Exec exec) {
  VerificationReport rep;
  Stopwatch sw;
  const SpaceFormGroup rp5 = lens_group(2, {1, 1, 1});
  Vec raw(6);
  for (int i = 0; i < 6; ++i) raw[i] = 1.0 + 0.1 * i;
  const SpherePoint xi(raw);

  const BlowupProfile via_k1 = space_form_blowup(rp5, xi, {5, 1});
  const BlowupProfile via_k2 = space_form_blowup(rp5, xi, {5, 2});
  const double m2_mixed =
      mk_surface_integral(via_k1, default_flux_radii(), {}, exec).value;
  const double m2_ref =
      mk_surface_integral(via_k2, default_flux_radii(), {}, exec).value;
  const double ratio = std::abs(m2_mixed) / std::abs(m2_ref);
  rep.checks.push_back(make_check("RP5 blow-up through k=1 factor has m2 = 0",
                                  "Remark 5.3", 0.0, ratio, 0.02, ratio < 0.02,
                                  sw.ms()));
  return rep;
}

VerificationReport suite_hj(int samples, std::uint64_t seed, Exec exec) {
  VerificationReport rep;
  {
    Stopwatch sw;
    const SpaceFormGroup l72 = lens_group(7, {1, 2});
    Rng rng(seed);
    std::vector<SpherePoint> pts;
    pts.reserve(static_cast<std::size_t>(samples));
    for (int s = 0; s < samples; ++s) pts.emplace_back(rng.unit_vec(4));
    std::vector<double> scal(pts.size());
    parallel_for(
        pts.size(),
        [&](std::size_t i) { scal[i] = hj_scalar_curvature(l72, pts[i]); },
        exec);
    double lo = 1e300, hi = -1e300;
    for (double v : scal) {
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
    rep.checks.push_back(make_check(
        "L(7;1,2) canonical metric: min scalar curvature < 0", "§4.2.2", -1.0,
        lo, 0.0, lo < 0.0, sw.ms()));
    rep.checks.push_back(make_check(
        "L(7;1,2) canonical metric: max scalar curvature > 0", "§4.2.2", 1.0,
        hi, 0.0, hi > 0.0, sw.ms()));
  }
  {
    Stopwatch sw;
    const SpaceFormGroup rp3 = lens_group(2, {1, 1});
    Rng rng(seed + 1);
    const double expected = 384.0 * M_PI * M_PI;
    double worst = 0.0;
    for (int s = 0; s < 100; ++s) {
      const double v = hj_scalar_curvature(rp3, SpherePoint(rng.unit_vec(4)));
      worst = std::max(worst, std::abs(v - expected) / expected);
    }
    rep.checks.push_back(make_check("RP3 canonical metric: constant 384 pi^2",
                                    "§4.2.2", 0.0, worst, 1e-5, worst < 1e-5,
                                    sw.ms()));
  }
  return rep;
}

}  // namespace gjms
