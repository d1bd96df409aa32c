#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gjms/vec.hpp"

namespace gjms {

/// Axis-aligned box domain; fields promise to be evaluable on it.
struct Box {
  Vec lo, hi;

  static Box cube(int n, double half_width);
  bool contains(const Vec& x, double margin = 0.0) const;
};

/// Radial profile p(s) of s = |x - center|^2 with derivatives in s up to
/// order 4, enough for two exact Laplacians of the field.
class RadialProfile {
 public:
  virtual ~RadialProfile() = default;
  /// d^j p / ds^j for j in [0, 4].
  virtual double deriv(double s, int j) const = 0;
};

/// Smooth scalar field on a box domain: a value callback, plus optional
/// radial structure that unlocks exact iterated Laplacians.
class ScalarField {
 public:
  ScalarField() = default;
  ScalarField(std::function<double(const Vec&)> value, Box domain);
  /// Radial field p(|x - center|^2).
  ScalarField(std::shared_ptr<const RadialProfile> profile, Vec center,
              Box domain);

  double operator()(const Vec& x) const { return value_(x); }
  const Box& domain() const { return domain_; }

  bool is_radial() const { return profile_ != nullptr; }

  /// Exact Delta^k (geometric sign) for radial fields, k in {1, 2}.
  /// Throws std::logic_error when no radial structure is available.
  double exact_laplacian_power(const Vec& x, int k) const;

  /// Radius of the support ball when the field is known to be compactly
  /// supported (set by the bump builders).
  std::optional<double> support_radius() const { return support_radius_; }
  void set_support_radius(double r) { support_radius_ = r; }

 private:
  std::function<double(const Vec&)> value_;
  Box domain_;
  std::shared_ptr<const RadialProfile> profile_;
  Vec center_;
  std::optional<double> support_radius_;
};

// Built-in named fields (CLI-addressable).

/// Conformal exponent of the round chart: f = ln(2/(1+|x|^2)); e^{2f} eucl is
/// the unit round sphere metric in stereographic coordinates.
ScalarField round_chart_field(int n, double box_half_width = 4.0);

/// exp(-a |x|^2).
ScalarField gaussian_field(int n, double a, double box_half_width = 4.0);

/// Polynomial bump (1 - |x-center|^2/R^2)^m inside the ball of radius R,
/// zero outside; value 1 at the center, C^{m-1} across the edge.
ScalarField bump_field(int n, double radius, int smoothness = 12,
                       Vec center = Vec(), double box_half_width = 0.0);

/// Radial polynomial sum_j coeffs[j] |x|^{2j}.
ScalarField poly_field(int n, const std::vector<double>& coeffs,
                       double box_half_width = 4.0);

/// Seeded smooth test field: (quadratic polynomial) * gaussian envelope,
/// optionally offset so it stays away from zero. Used by the property suites.
class Rng;
ScalarField random_smooth_field(int n, Rng& rng, double amplitude,
                                double offset, double box_half_width = 4.0);

/// Builds a named field from a CLI-style spec: "round_chart", "gaussian(a)",
/// "bump(radius)", "poly(c0,c1,...)". Throws std::invalid_argument.
ScalarField parse_field(const std::string& spec, int n);

}  // namespace gjms
