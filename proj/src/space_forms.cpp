#include "gjms/space_forms.hpp"

#include <cmath>
#include <stdexcept>

namespace gjms {

namespace {

void check_dims(const SpaceFormGroup& group, const DimPair& dims) {
  dims.validate();
  if (group.ambient_dim != dims.n + 1)
    throw std::invalid_argument("space form mass: group does not act on S^n");
  if (!dims.mass_range())
    throw std::invalid_argument("space form mass: need 2k+1 <= n <= 2k+3");
}

/// One Richardson cascade: level l removes the O(r^l) term, assuming values
/// are samples at radii r, r/2, r/4, ... Returns the triangular tableau.
std::vector<std::vector<double>> richardson_cascade(std::vector<double> vals) {
  std::vector<std::vector<double>> tab{std::move(vals)};
  int level = 1;
  while (tab.back().size() > 1) {
    const std::vector<double>& prev = tab.back();
    std::vector<double> next(prev.size() - 1);
    const double w = std::pow(2.0, level);
    for (std::size_t i = 0; i + 1 < prev.size(); ++i)
      next[i] = (w * prev[i + 1] - prev[i]) / (w - 1.0);
    tab.push_back(std::move(next));
    ++level;
  }
  return tab;
}

}  // namespace

MassReport mass_closed_form(const SpaceFormGroup& group, const SpherePoint& xi,
                            const DimPair& dims) {
  check_dims(group, dims);
  if (xi.ambient_dim() != group.ambient_dim)
    throw std::invalid_argument("mass_closed_form: point dimension mismatch");
  const double inv_c = 1.0 / gjms_constant(dims);
  const double expo = static_cast<double>(2 * dims.k - dims.n);
  const Mat id = Mat::Identity(group.ambient_dim, group.ambient_dim);
  double sum = 0.0;
  for (const Mat& g : group.elements) {
    if ((g - id).cwiseAbs().maxCoeff() <= 1e-12) continue;
    sum += inv_c * std::pow(((g - id) * xi.coords()).norm(), expo);
  }
  return MassReport{sum, MassReport::Method::ClosedForm, 0.0};
}

std::vector<double> default_limit_radii() { return {0.2, 0.1, 0.05, 0.025}; }

MassReport mass_via_limit(const SpaceFormGroup& group, const SpherePoint& xi,
                          const DimPair& dims,
                          const std::vector<double>& radii) {
  check_dims(group, dims);
  if (radii.size() < 2)
    throw std::invalid_argument("mass_via_limit: need at least two radii");
  for (std::size_t i = 0; i < radii.size(); ++i) {
    if (!(radii[i] > 0.0) || radii[i] >= 0.5)
      throw std::invalid_argument("mass_via_limit: radii must lie in (0, 0.5)");
    if (i > 0 && !(radii[i] < radii[i - 1]))
      throw std::invalid_argument("mass_via_limit: radii must decrease");
    if (i > 0 && std::abs(radii[i - 1] / radii[i] - 2.0) > 1e-9)
      throw std::invalid_argument("mass_via_limit: radii must halve");
  }

  const ChartFrame frame(xi);
  const GreenKernel chart = make_chart_kernel(group, frame, dims);
  const int n = dims.n, k = dims.k;
  const double inv_c = 1.0 / gjms_constant(dims);
  const Vec origin = Vec::Zero(n);

  // The chart metric is flat, hence normal conformal at the center; the
  // kernel minus its flat singular part extends smoothly there.
  Vec dir = Vec::Zero(n);
  dir[0] = 1.0;
  std::vector<double> d_vals;
  d_vals.reserve(radii.size());
  for (const double r : radii) {
    const Vec x = r * dir;
    d_vals.push_back(chart.value(origin, x) -
                     inv_c * std::pow(r, static_cast<double>(2 * k - n)));
  }

  const auto tab = richardson_cascade(std::move(d_vals));
  const double chart_limit = tab.back().back();
  const double prev_limit = tab[tab.size() - 2].back();
  const double err_chart = std::abs(chart_limit - prev_limit);

  // Back to the round metric: A = w(0)^2 * (chart constant term).
  const double w0sq = std::pow(2.0, static_cast<double>(2 * k - n));
  return MassReport{w0sq * chart_limit, MassReport::Method::LimitExtraction,
                    w0sq * err_chart};
}

double covering_mass_residual(const SpaceFormGroup& sub,
                              const SpaceFormGroup& full, const SpherePoint& xi,
                              const DimPair& dims) {
  check_dims(full, dims);
  if (!is_subgroup(sub, full))
    throw std::invalid_argument("covering_mass_residual: sub is not a subgroup");

  const double mass_full = mass_closed_form(full, xi, dims).value;
  const double mass_sub = mass_closed_form(sub, xi, dims).value;

  // Right-coset representatives of sub in full, identity coset excluded.
  std::vector<Mat> reps;
  for (const Mat& s : full.elements) {
    if (sub.contains(s)) continue;
    bool seen = false;
    for (const Mat& r : reps) {
      if (sub.contains(s * r.transpose())) {  // s r^{-1} in sub
        seen = true;
        break;
      }
    }
    if (!seen) reps.push_back(s);
  }

  double cross = 0.0;
  for (const Mat& s : reps)
    cross += green_space_form(sub, dims, xi, SpherePoint(s * xi.coords()));

  return mass_full - mass_sub - cross;
}

double hj_metric_factor(const SpaceFormGroup& group, const SpherePoint& xi,
                        const DimPair& dims) {
  const double mass = mass_closed_form(group, xi, dims).value;
  if (!(mass > 0.0))
    throw std::domain_error(
        "hj_metric_factor: metric undefined, mass vanishes (round sphere)");
  return std::pow(mass, 2.0 / static_cast<double>(dims.n - 2 * dims.k));
}

double hj_scalar_curvature(const SpaceFormGroup& group, const SpherePoint& xi) {
  const DimPair dims{3, 1};
  check_dims(group, dims);
  if (group.trivial())
    throw std::domain_error("hj_scalar_curvature: trivial group has zero mass");

  const double inv_c = 1.0 / gjms_constant(dims);
  const Mat id = Mat::Identity(4, 4);

  // ln A extended as a degree-0 homogeneous function of the ambient R^4.
  const auto log_mass = [&](const Vec& x) {
    const Vec u = x / x.norm();
    double sum = 0.0;
    for (const Mat& g : group.elements) {
      if ((g - id).cwiseAbs().maxCoeff() <= 1e-12) continue;
      sum += inv_c / ((g - id) * u).norm();
    }
    return std::log(sum);
  };

  const double h = 1e-3;
  const Vec x0 = xi.coords();
  double lap = 0.0;     // geometric sign: -sum of second derivatives
  double grad2 = 0.0;
  for (int i = 0; i < 4; ++i) {
    Vec xp = x0, xm = x0, xpp = x0, xmm = x0;
    xp[i] += h;
    xm[i] -= h;
    xpp[i] += 2 * h;
    xmm[i] -= 2 * h;
    const double fp = log_mass(xp), fm = log_mass(xm);
    const double fpp = log_mass(xpp), fmm = log_mass(xmm);
    const double f0 = log_mass(x0);
    const double d1 = (8.0 * (fp - fm) - (fpp - fmm)) / (12.0 * h);
    const double d2 =
        (-fpp + 16.0 * fp - 30.0 * f0 + 16.0 * fm - fmm) / (12.0 * h * h);
    lap -= d2;
    grad2 += d1 * d1;
  }

  const double mass = mass_closed_form(group, xi, dims).value;
  // Scal of e^{2w} g: e^{-2w} (Scal_g + 2(n-1) Delta w - (n-1)(n-2)|dw|^2),
  // here n = 3, Scal(S^3) = 6, w = ln A.
  return (6.0 + 4.0 * lap - 2.0 * grad2) / (mass * mass);
}

}  // namespace gjms
