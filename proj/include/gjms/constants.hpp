#pragma once

#include <cstdint>
#include <string>

namespace gjms {

// Sign convention used everywhere in this library: the Laplacian is the
// geometric one, Delta = -sum_i d^2/dx_i^2 on flat space, with nonnegative
// spectrum. All operator formulas below assume it.

/// Dimension n and operator order index k of the 2k-th order operator P_k.
struct DimPair {
  int n = 3;
  int k = 1;

  /// Throws std::invalid_argument unless n >= 3, k >= 1 and n > 2k.
  void validate() const;

  /// True iff 2k+1 <= n <= 2k+3, the range where the Green kernel has a
  /// well-defined constant term (and a mass).
  bool mass_range() const { return n > 2 * k && n <= 2 * k + 3; }
};

/// Degree of homogeneity of a function on R^n minus the origin.
struct HomogeneityDegree {
  double alpha = 0.0;
};

/// Exact value of the form (num/den) * pi^pi_power.
struct ExactConstant {
  std::int64_t num = 0;
  std::int64_t den = 1;
  int pi_power = 0;

  double to_double() const;
  /// "16*pi^2", "8*pi^2/3", "4*pi", ...
  std::string str() const;
};

/// Volume of the unit d-sphere, 2 pi^{(d+1)/2} / Gamma((d+1)/2).
double vol_sphere(int d);

/// Exact rational-times-pi-power form of vol_sphere.
ExactConstant vol_sphere_exact(int d);

/// c_{n,k} = Vol(S^{n-1}) 2^{k-1} (k-1)! (n-2)(n-4)...(n-2k).
/// Normalizes the flat Green kernel c_{n,k}^{-1} |x-y|^{2k-n}.
double gjms_constant(const DimPair& dims);

ExactConstant gjms_constant_exact(const DimPair& dims);

/// Coefficient C with Delta^k r^alpha = C r^{alpha-2k} away from the origin:
/// C = prod_{j=0}^{k-1} (-c_{alpha-2j}), c_beta = beta(beta+n-2).
double radial_power_coefficient(const DimPair& dims, HomogeneityDegree deg);

/// Whether Delta^k is invertible on functions homogeneous of degree alpha:
/// true iff alpha is not an integer, or 2k-n < alpha < 0.
bool homogeneous_invertibility(const DimPair& dims, HomogeneityDegree deg);

}  // namespace gjms
