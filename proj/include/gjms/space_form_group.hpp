#pragma once

#include <string>
#include <vector>

#include "gjms/vec.hpp"

namespace gjms {

/// Finite subgroup of SO(n+1) acting freely on S^n, stored as an explicit
/// list of orthogonal matrices with the identity first.
struct SpaceFormGroup {
  int ambient_dim = 0;           // n+1
  std::vector<Mat> elements;

  int order() const { return static_cast<int>(elements.size()); }
  int sphere_dim() const { return ambient_dim - 1; }
  bool trivial() const { return order() == 1; }

  /// Index of the element matching m within tol, or -1.
  int find(const Mat& m, double tol = 1e-10) const;
  bool contains(const Mat& m, double tol = 1e-10) const { return find(m, tol) >= 0; }
};

/// Per-check residuals from validate_group; a residual is the worst
/// entrywise deviation seen for that check.
struct GroupValidation {
  bool has_identity = false;
  bool closed = false;
  bool has_inverses = false;
  bool oriented = false;       // det = +1 for every element
  bool acts_freely = false;    // |det(g - Id)| bounded away from 0 off the identity
  double closure_residual = 0.0;
  double inverse_residual = 0.0;
  double orientation_residual = 0.0;
  double min_free_det = 0.0;

  bool ok() const {
    return has_identity && closed && has_inverses && oriented && acts_freely;
  }
};

/// Exact lens rotations keep |det(g - Id)| well above this for any sane p.
inline constexpr double kFreeActionThreshold = 1e-8;

GroupValidation validate_group(const SpaceFormGroup& group);

SpaceFormGroup trivial_group(int ambient_dim);

/// Cyclic group of order p generated by the block rotation with angles
/// 2 pi q_i / p, acting on S^{2m-1}. Requires gcd(q_i, p) = 1 for a free
/// action; throws otherwise.
SpaceFormGroup lens_group(long p, const std::vector<long>& q);

/// Parses "L(p;q1,...,qm)". Throws std::invalid_argument on malformed input.
SpaceFormGroup parse_lens(const std::string& spec);

/// True iff every element of sub matches an element of full within tol.
bool is_subgroup(const SpaceFormGroup& sub, const SpaceFormGroup& full,
                 double tol = 1e-10);

}  // namespace gjms
