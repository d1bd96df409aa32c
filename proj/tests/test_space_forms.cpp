#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "gjms/green.hpp"
#include "gjms/rng.hpp"
#include "gjms/space_forms.hpp"

using namespace gjms;

namespace {

Vec make_vec(std::initializer_list<double> vals) {
  Vec v(static_cast<int>(vals.size()));
  int i = 0;
  for (double x : vals) v[i++] = x;
  return v;
}

}  // namespace

TEST_CASE("lens_group basics") {
  const SpaceFormGroup rp3 = lens_group(2, {1, 1});
  CHECK(rp3.order() == 2);
  CHECK((rp3.elements[1] + Mat::Identity(4, 4)).cwiseAbs().maxCoeff() <= 1e-12);

  const SpaceFormGroup l7 = lens_group(7, {1, 2});
  CHECK(l7.order() == 7);
  const GroupValidation val = validate_group(l7);
  CHECK(val.ok());
  CHECK(val.min_free_det > kFreeActionThreshold);

  CHECK_THROWS_AS(lens_group(4, {2, 1}), std::invalid_argument);
}

TEST_CASE("parse_lens") {
  CHECK(parse_lens("L(7;1,2)").order() == 7);
  CHECK(parse_lens("L(2;1,1,1)").ambient_dim == 6);
  CHECK_THROWS_AS(parse_lens("L(7;)"), std::invalid_argument);
  CHECK_THROWS_AS(parse_lens("lens(7;1)"), std::invalid_argument);
  CHECK_THROWS_AS(parse_lens("L(4;2,1)"), std::invalid_argument);
}

TEST_CASE("validate_group flags broken inputs") {
  SpaceFormGroup missing = lens_group(5, {1, 2});
  missing.elements.pop_back();
  CHECK_FALSE(validate_group(missing).closed);

  SpaceFormGroup reflected = lens_group(2, {1, 1});
  Mat flip = Mat::Identity(4, 4);
  flip(0, 0) = -1.0;
  reflected.elements.push_back(flip);
  CHECK_FALSE(validate_group(reflected).oriented);

  // A rotation with eigenvalue 1 fixes a circle: not free.
  SpaceFormGroup fixed;
  fixed.ambient_dim = 4;
  fixed.elements.push_back(Mat::Identity(4, 4));
  Mat half = Mat::Identity(4, 4);
  half(0, 0) = -1.0;
  half(1, 1) = -1.0;
  fixed.elements.push_back(half);
  CHECK_FALSE(validate_group(fixed).acts_freely);
}

TEST_CASE("mass_closed_form frozen values") {
  Rng rng(31);
  const SpherePoint xi(rng.unit_vec(4));

  CHECK(mass_closed_form(trivial_group(4), xi, {3, 1}).value == 0.0);
  CHECK(mass_closed_form(lens_group(2, {1, 1}), xi, {3, 1}).value ==
        doctest::Approx(1.0 / (8.0 * M_PI)).epsilon(1e-14));
  CHECK(mass_closed_form(lens_group(3, {1, 1}), xi, {3, 1}).value ==
        doctest::Approx(1.0 / (2.0 * std::sqrt(3.0) * M_PI)).epsilon(1e-13));

  const SpherePoint xi5(rng.unit_vec(6));
  CHECK(mass_closed_form(lens_group(2, {1, 1, 1}), xi5, {5, 2}).value ==
        doctest::Approx(1.0 / (32.0 * M_PI * M_PI)).epsilon(1e-14));
}

TEST_CASE("mass is invariant along the orbit") {
  Rng rng(32);
  const SpaceFormGroup group = lens_group(7, {1, 2});
  const SpherePoint xi(rng.unit_vec(4));
  const double base = mass_closed_form(group, xi, {3, 1}).value;
  for (const Mat& g : group.elements) {
    const double moved =
        mass_closed_form(group, SpherePoint(g * xi.coords()), {3, 1}).value;
    CHECK(std::abs(moved - base) <= 1e-13 * base);
  }
}

TEST_CASE("mass_via_limit: trivial group gives zero") {
  Rng rng(33);
  const SpherePoint xi(rng.unit_vec(4));
  const MassReport rep =
      mass_via_limit(trivial_group(4), xi, {3, 1}, default_limit_radii());
  CHECK(std::abs(rep.value) < 1e-10);
  CHECK(rep.method == MassReport::Method::LimitExtraction);
}

TEST_CASE("mass_via_limit matches the closed form") {
  Rng rng(34);
  const std::vector<double> radii{0.2, 0.1, 0.05, 0.025, 0.0125};
  {
    const SpherePoint xi(rng.unit_vec(4));
    const double closed =
        mass_closed_form(lens_group(2, {1, 1}), xi, {3, 1}).value;
    const double limit =
        mass_via_limit(lens_group(2, {1, 1}), xi, {3, 1}, radii).value;
    CHECK(limit == doctest::Approx(closed).epsilon(1e-6));
  }
  {
    const SpherePoint xi(rng.unit_vec(4));
    const double closed =
        mass_closed_form(lens_group(7, {1, 2}), xi, {3, 1}).value;
    const double limit =
        mass_via_limit(lens_group(7, {1, 2}), xi, {3, 1}, radii).value;
    CHECK(limit == doctest::Approx(closed).epsilon(1e-6));
  }
}

TEST_CASE("mass_via_limit validates radii") {
  Rng rng(35);
  const SpherePoint xi(rng.unit_vec(4));
  CHECK_THROWS_AS(
      mass_via_limit(lens_group(2, {1, 1}), xi, {3, 1}, {0.6, 0.3}),
      std::invalid_argument);
  CHECK_THROWS_AS(mass_via_limit(lens_group(2, {1, 1}), xi, {3, 1}, {0.2}),
                  std::invalid_argument);
}

TEST_CASE("scaled transport factor: chart term scales, round mass does not") {
  // With the transport weight multiplied by c, the subtracted singular part
  // refers to the homothety-scaled flat metric and the chart constant comes
  // out as c^{-2} times the original; the compensation weight restores the
  // same round-metric mass.
  Rng rng(36);
  const DimPair dims{3, 1};
  const SpaceFormGroup group = lens_group(2, {1, 1});
  const SpherePoint xi(rng.unit_vec(4));
  const ChartFrame frame(xi);
  const GreenKernel chart = make_chart_kernel(group, frame, dims);
  const double c = 1.7;

  const double inv_c = 1.0 / gjms_constant(dims);
  Vec dir = Vec::Zero(3);
  dir[0] = 1.0;
  const double r = 0.05;
  // Scaled pipeline: kernel / c^2, singular part in the scaled flat metric.
  const double scaled_d =
      chart.value(Vec::Zero(3), r * dir) / (c * c) -
      inv_c * std::pow(c * c * r, 2.0 * dims.k - dims.n);
  const double plain_d = chart.value(Vec::Zero(3), r * dir) -
                         inv_c * std::pow(r, 2.0 * dims.k - dims.n);
  CHECK(scaled_d == doctest::Approx(plain_d / (c * c)).epsilon(1e-12));

  // Compensation: psi(0)^2 = (c w(0))^2 against the c^{-2} of the chart term.
  const double w0sq = std::pow(2.0, 2.0 * dims.k - dims.n);
  CHECK(c * c * w0sq * scaled_d == doctest::Approx(w0sq * plain_d).epsilon(1e-12));
}

TEST_CASE("covering identity residuals") {
  Rng rng(37);
  const DimPair dims{3, 1};
  const SpaceFormGroup rp3 = lens_group(2, {1, 1});
  const SpaceFormGroup l4 = lens_group(4, {1, 1});
  const SpaceFormGroup l8 = lens_group(8, {1, 1});

  for (int t = 0; t < 5; ++t) {
    const SpherePoint xi(rng.unit_vec(4));
    CHECK(covering_mass_residual(l4, l4, xi, dims) == 0.0);
    CHECK(std::abs(covering_mass_residual(rp3, l4, xi, dims)) < 1e-12);
    CHECK(std::abs(covering_mass_residual(rp3, l8, xi, dims)) < 1e-12);
    CHECK(std::abs(covering_mass_residual(l4, l8, xi, dims)) < 1e-12);
    CHECK(std::abs(covering_mass_residual(trivial_group(4), l8, xi, dims)) <
          1e-14);
  }
  const SpherePoint xi(rng.unit_vec(4));
  CHECK_THROWS_AS(covering_mass_residual(lens_group(3, {1, 1}), l4, xi, dims),
                  std::invalid_argument);
}

TEST_CASE("hj_metric_factor") {
  Rng rng(38);
  const SpherePoint xi(rng.unit_vec(4));
  CHECK(hj_metric_factor(lens_group(2, {1, 1}), xi, {3, 1}) ==
        doctest::Approx(std::pow(1.0 / (8.0 * M_PI), 2)).epsilon(1e-13));
  CHECK_THROWS_AS(hj_metric_factor(trivial_group(4), xi, {3, 1}),
                  std::domain_error);

  // On L(7;1,2) the mass depends on how the point splits across the blocks.
  // (The two pure-block points agree, since q = 2 permutes residues mod 7;
  // a mixed point does not.)
  const SpaceFormGroup l7 = lens_group(7, {1, 2});
  const double s = std::sqrt(0.5);
  const double a1 =
      hj_metric_factor(l7, SpherePoint(make_vec({1.0, 0.0, 0.0, 0.0})), {3, 1});
  const double a2 =
      hj_metric_factor(l7, SpherePoint(make_vec({s, 0.0, s, 0.0})), {3, 1});
  CHECK(a1 > 0.0);
  CHECK(a2 > 0.0);
  CHECK(std::abs(a1 - a2) > 1e-3 * std::max(a1, a2));
}

TEST_CASE("hj_scalar_curvature on homogeneous quotients") {
  Rng rng(39);
  const SpaceFormGroup rp3 = lens_group(2, {1, 1});
  const double expected = 384.0 * M_PI * M_PI;
  for (int t = 0; t < 5; ++t) {
    const double v = hj_scalar_curvature(rp3, SpherePoint(rng.unit_vec(4)));
    CHECK(v == doctest::Approx(expected).epsilon(1e-6));
  }
  CHECK_THROWS_AS(hj_scalar_curvature(trivial_group(4), SpherePoint(rng.unit_vec(4))),
                  std::domain_error);
}
