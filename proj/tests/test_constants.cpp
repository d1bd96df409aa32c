#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "gjms/constants.hpp"

using namespace gjms;

TEST_CASE("vol_sphere closed forms") {
  CHECK(vol_sphere(0) == doctest::Approx(2.0));
  CHECK(vol_sphere(1) == doctest::Approx(2.0 * M_PI));
  CHECK(vol_sphere(2) == doctest::Approx(4.0 * M_PI));
  CHECK(vol_sphere(3) == doctest::Approx(2.0 * M_PI * M_PI));
  CHECK(vol_sphere(4) == doctest::Approx(8.0 * M_PI * M_PI / 3.0));
  CHECK(vol_sphere(6) == doctest::Approx(16.0 * std::pow(M_PI, 3) / 15.0));
  CHECK_THROWS_AS(vol_sphere(-1), std::invalid_argument);
}

TEST_CASE("vol_sphere exact strings") {
  CHECK(vol_sphere_exact(2).str() == "4*pi");
  CHECK(vol_sphere_exact(4).str() == "8*pi^2/3");
  CHECK(vol_sphere_exact(0).str() == "2");
}

TEST_CASE("gjms_constant values") {
  CHECK(gjms_constant({3, 1}) == doctest::Approx(4.0 * M_PI).epsilon(1e-14));
  CHECK(gjms_constant({5, 1}) == doctest::Approx(8.0 * M_PI * M_PI).epsilon(1e-14));
  CHECK(gjms_constant({5, 2}) == doctest::Approx(16.0 * M_PI * M_PI).epsilon(1e-14));
  CHECK(gjms_constant({7, 2}) == doctest::Approx(32.0 * std::pow(M_PI, 3)).epsilon(1e-14));
  CHECK(gjms_constant_exact({5, 2}).str() == "16*pi^2");
  CHECK(gjms_constant_exact({3, 1}).str() == "4*pi");
}

TEST_CASE("gjms_constant rejects n <= 2k and is positive in range") {
  CHECK_THROWS_AS(gjms_constant({4, 2}), std::invalid_argument);
  CHECK_THROWS_AS(gjms_constant({2, 1}), std::invalid_argument);
  for (int k = 1; k <= 4; ++k)
    for (int n = 2 * k + 1; n <= 12; ++n)
      CHECK(gjms_constant({n, k}) > 0.0);
}

TEST_CASE("mass_range flag") {
  CHECK(DimPair{3, 1}.mass_range());
  CHECK(DimPair{5, 1}.mass_range());
  CHECK(DimPair{5, 2}.mass_range());
  CHECK(DimPair{7, 2}.mass_range());
  CHECK_FALSE(DimPair{7, 1}.mass_range());
  CHECK_FALSE(DimPair{9, 2}.mass_range());
}

TEST_CASE("radial_power_coefficient known values") {
  CHECK(radial_power_coefficient({3, 1}, {-1.0}) == doctest::Approx(0.0));
  CHECK(radial_power_coefficient({5, 2}, {-1.0}) == doctest::Approx(0.0));
  CHECK(radial_power_coefficient({5, 1}, {2.0}) == doctest::Approx(-10.0));
}

TEST_CASE("radial_power_coefficient kernel and composition") {
  for (int k = 1; k <= 3; ++k) {
    for (int n = 2 * k + 1; n <= 9; ++n) {
      const DimPair dims{n, k};
      CHECK(radial_power_coefficient(dims, {static_cast<double>(2 * k - n)}) ==
            doctest::Approx(0.0));
    }
  }
  // coefficient for k1+k2 = coefficient for k2 at alpha times k1 at alpha-2k2
  for (double alpha : {-2.7, -0.9, 1.3, 3.1}) {
    const double lhs = radial_power_coefficient({7, 3}, {alpha});
    const double rhs = radial_power_coefficient({7, 2}, {alpha}) *
                       radial_power_coefficient({7, 1}, {alpha - 4.0});
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
  }
}

TEST_CASE("homogeneous_invertibility criterion") {
  CHECK(homogeneous_invertibility({5, 2}, {-0.5}));
  CHECK_FALSE(homogeneous_invertibility({5, 2}, {1.0}));
  CHECK_FALSE(homogeneous_invertibility({5, 2}, {-1.0}));
  CHECK(homogeneous_invertibility({5, 2}, {-0.999}));
  CHECK(homogeneous_invertibility({3, 1}, {-0.5}));
  CHECK_FALSE(homogeneous_invertibility({3, 1}, {-1.0}));
  CHECK_FALSE(homogeneous_invertibility({3, 1}, {2.0}));
  CHECK(homogeneous_invertibility({3, 1}, {3.00000001}));
}

TEST_CASE("vanishing radial coefficient at integers implies non-invertibility") {
  for (int k = 1; k <= 2; ++k) {
    for (int n = 2 * k + 1; n <= 8; ++n) {
      const DimPair dims{n, k};
      for (int a = -10; a <= 6; ++a) {
        const double coeff = radial_power_coefficient(dims, {static_cast<double>(a)});
        if (coeff == 0.0)
          CHECK_FALSE(homogeneous_invertibility(dims, {static_cast<double>(a)}));
      }
    }
  }
}
