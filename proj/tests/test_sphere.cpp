#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "gjms/rng.hpp"
#include "gjms/sphere.hpp"

using namespace gjms;

namespace {

Vec make_vec(std::initializer_list<double> vals) {
  Vec v(static_cast<int>(vals.size()));
  int i = 0;
  for (double x : vals) v[i++] = x;
  return v;
}

}  // namespace

TEST_CASE("chart maps center to origin and back") {
  Rng rng(11);
  for (int n : {2, 3, 5, 7}) {
    const SpherePoint center(rng.unit_vec(n + 1));
    const ChartFrame frame(center);
    const Vec x = frame.to_chart(center);
    CHECK(x.norm() <= 1e-14);
    CHECK(chordal_distance(frame.from_chart(Vec::Zero(n)), center) <= 1e-14);
  }
}

TEST_CASE("points orthogonal to the center land on the unit sphere of the chart") {
  const ChartFrame frame(SpherePoint(make_vec({1.0, 0.0, 0.0, 0.0})));
  const SpherePoint p(make_vec({0.0, 0.0, 1.0, 0.0}));
  CHECK(frame.to_chart(p).norm() == doctest::Approx(1.0).epsilon(1e-13));
}

TEST_CASE("chart round trip") {
  Rng rng(12);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 2 + trial % 5;
    const ChartFrame frame(SpherePoint(rng.unit_vec(n + 1)));
    const SpherePoint p(rng.unit_vec(n + 1));
    try {
      const Vec x = frame.to_chart(p);
      CHECK(chordal_distance(frame.from_chart(x), p) <= 1e-12);
    } catch (const std::domain_error&) {
      // landed at the pole; fine
    }
  }
}

TEST_CASE("far chart points approach the antipode") {
  Rng rng(13);
  const ChartFrame frame(SpherePoint(rng.unit_vec(4)));
  const Vec far = 1e6 * rng.unit_vec(3);
  const SpherePoint image = frame.from_chart(far);
  CHECK(chordal_distance(image, frame.center().antipode()) <= 1e-5);
}

TEST_CASE("chart pole raises") {
  const SpherePoint center(make_vec({0.0, 1.0, 0.0, 0.0}));
  const ChartFrame frame(center);
  CHECK_THROWS_AS(frame.to_chart(center.antipode()), std::domain_error);
}

TEST_CASE("round_factor values") {
  CHECK(round_factor(Vec::Zero(3)) == doctest::Approx(2.0));
  CHECK(round_factor(make_vec({1.0, 0.0, 0.0})) == doctest::Approx(1.0));
  CHECK(round_factor(make_vec({3.0, 0.0, 0.0})) == doctest::Approx(0.2));
}

TEST_CASE("chordal distances") {
  const SpherePoint p(make_vec({1.0, 0.0, 0.0, 0.0}));
  const SpherePoint q(make_vec({0.0, 1.0, 0.0, 0.0}));
  CHECK(chordal_distance(p, p) == doctest::Approx(0.0));
  CHECK(chordal_distance(p, p.antipode()) == doctest::Approx(2.0));
  CHECK(chordal_distance(p, q) == doctest::Approx(std::sqrt(2.0)));
}

TEST_CASE("chordal distance squared equals 2 - 2<p,q>") {
  Rng rng(14);
  for (int trial = 0; trial < 30; ++trial) {
    const int m = 3 + trial % 5;
    const SpherePoint p(rng.unit_vec(m));
    const SpherePoint q(rng.unit_vec(m));
    const double lhs = std::pow(chordal_distance(p, q), 2);
    const double rhs = 2.0 - 2.0 * p.coords().dot(q.coords());
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-13));
  }
}

TEST_CASE("stereographic chordal pull-back identity") {
  Rng rng(15);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 2 + trial % 4;
    const ChartFrame frame(SpherePoint(rng.unit_vec(n + 1)));
    const Vec x = rng.uniform_vec(n, -2.0, 2.0);
    const Vec y = rng.uniform_vec(n, -2.0, 2.0);
    const double lhs =
        std::pow(chordal_distance(frame.from_chart(x), frame.from_chart(y)), 2);
    const double rhs = round_factor(x) * round_factor(y) * (x - y).squaredNorm();
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
  }
}

TEST_CASE("moebius primitives") {
  MoebiusMap identity;
  const Vec x = make_vec({0.4, -1.2, 0.7});
  {
    const auto [img, factor] = identity.apply(x);
    CHECK((img - x).norm() == 0.0);
    CHECK(factor == 1.0);
  }
  {
    MoebiusMap inv;
    inv.push_inversion();
    const Vec p = make_vec({2.0, 0.0, 0.0});
    const auto [img, factor] = inv.apply(p);
    CHECK((img - make_vec({0.5, 0.0, 0.0})).norm() <= 1e-15);
    CHECK(factor == doctest::Approx(0.25));
  }
  {
    MoebiusMap dil;
    dil.push_dilation(3.0);
    const auto [img, factor] = dil.apply(x);
    CHECK((img - 3.0 * x).norm() <= 1e-15);
    CHECK(factor == doctest::Approx(3.0));
  }
}

TEST_CASE("moebius validation and poles") {
  Mat bad = Mat::Identity(3, 3);
  bad(0, 1) = 0.5;
  CHECK_THROWS_AS(MoebiusMap().push_isometry(bad, Vec::Zero(3)),
                  std::invalid_argument);
  CHECK_THROWS_AS(MoebiusMap().push_dilation(-1.0), std::invalid_argument);

  MoebiusMap inv;
  inv.push_inversion();
  CHECK_THROWS_AS(inv.apply(Vec::Zero(3)), std::domain_error);
}

TEST_CASE("distance identity for the inversion, hand values") {
  MoebiusMap inv;
  inv.push_inversion();
  const Vec x = make_vec({2.0, 0.0, 0.0});
  const Vec y = make_vec({0.0, 1.0, 0.0});
  const auto [hx, fx] = inv.apply(x);
  const auto [hy, fy] = inv.apply(y);
  CHECK((hx - hy).squaredNorm() == doctest::Approx(1.25).epsilon(1e-15));
  CHECK(fx * fy * (x - y).squaredNorm() == doctest::Approx(1.25).epsilon(1e-15));
  CHECK(std::abs(moebius_identity_residual(inv, x, y)) <= 1e-15);
}

TEST_CASE("distance identity for isometries is exact") {
  Rng rng(16);
  Mat rot = Mat::Identity(3, 3);
  const double c = std::cos(0.83), s = std::sin(0.83);
  rot(0, 0) = c;
  rot(0, 1) = -s;
  rot(1, 0) = s;
  rot(1, 1) = c;
  MoebiusMap iso;
  iso.push_isometry(rot, make_vec({0.3, -0.4, 2.0}));
  for (int t = 0; t < 10; ++t) {
    const Vec x = rng.uniform_vec(3, -3.0, 3.0);
    const Vec y = rng.uniform_vec(3, -3.0, 3.0);
    CHECK(std::abs(moebius_identity_residual(iso, x, y)) <=
          1e-13 * (1.0 + (x - y).squaredNorm()));
  }
}

TEST_CASE("conformal factor is multiplicative along the orbit") {
  MoebiusMap first;
  first.push_dilation(2.0);
  first.push_inversion();
  MoebiusMap second;
  second.push_dilation(0.7);
  second.push_inversion();

  MoebiusMap composite;
  composite.push_dilation(2.0);
  composite.push_inversion();
  composite.push_dilation(0.7);
  composite.push_inversion();

  const Vec x = make_vec({0.9, -0.2, 0.4});
  const auto [mid, f1] = first.apply(x);
  const auto [out, f2] = second.apply(mid);
  const auto [out2, f12] = composite.apply(x);
  CHECK((out - out2).norm() <= 1e-15);
  CHECK(f12 == doctest::Approx(f1 * f2).epsilon(1e-15));
}
