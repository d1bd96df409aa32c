#pragma once

#include <vector>

#include "gjms/constants.hpp"
#include "gjms/green.hpp"
#include "gjms/space_form_group.hpp"
#include "gjms/sphere.hpp"

namespace gjms {

/// A computed mass together with how it was obtained and how far to trust it.
struct MassReport {
  enum class Method { ClosedForm, LimitExtraction, SurfaceIntegral };

  double value = 0.0;
  Method method = Method::ClosedForm;
  double error_estimate = 0.0;  // 0 for closed forms
};

/// Mass of P_k on the quotient by `group` at the class of xi:
/// A = c_{n,k}^{-1} sum_{R != Id} |(R - Id) xi|^{2k-n}. Zero for the trivial
/// group, strictly positive otherwise.
MassReport mass_closed_form(const SpaceFormGroup& group, const SpherePoint& xi,
                            const DimPair& dims);

/// Default radii for the limit-extraction pipeline.
std::vector<double> default_limit_radii();

/// Mass extracted from the singularity of the chart-transported quotient
/// kernel: D(r) = G_chart(0, x_r) - c^{-1} r^{2k-n} is Richardson-extrapolated
/// to r -> 0 and mapped back to the round metric through the chart weight at
/// the center. Cross-validates mass_closed_form.
MassReport mass_via_limit(const SpaceFormGroup& group, const SpherePoint& xi,
                          const DimPair& dims, const std::vector<double>& radii);

/// Residual of the covering identity: mass(full) - mass(sub) - sum over
/// nontrivial coset representatives s of G_sub(xi, s xi). Vanishes to
/// roundoff. Throws if sub is not a subgroup of full.
double covering_mass_residual(const SpaceFormGroup& sub,
                              const SpaceFormGroup& full, const SpherePoint& xi,
                              const DimPair& dims);

/// Conformal factor A^{2/(n-2k)} of the canonical metric at the class of xi.
/// Throws std::domain_error when the mass vanishes (trivial group).
double hj_metric_factor(const SpaceFormGroup& group, const SpherePoint& xi,
                        const DimPair& dims);

/// Scalar curvature of the canonical metric A(.)^2 g_round on a quotient of
/// S^3 (n = 3, k = 1 only), via the conformal law with w = ln A; the sphere
/// Laplacian and gradient of w come from the degree-0 homogeneous extension
/// and fourth-order central differences (step 1e-3).
double hj_scalar_curvature(const SpaceFormGroup& group, const SpherePoint& xi);

}  // namespace gjms
