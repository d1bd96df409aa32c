#pragma once

#include <functional>

#include "gjms/constants.hpp"
#include "gjms/space_form_group.hpp"
#include "gjms/sphere.hpp"

namespace gjms {

enum class GeometryTag { Flat, Sphere, SpaceForm };

/// Closed-form Green kernel of P_k for one of the supported geometries.
/// Evaluators take points in the geometry's own coordinates: chart points in
/// R^n for Flat, lifts on the covering sphere (ambient unit vectors in
/// R^{n+1}) for Sphere and SpaceForm. Symmetric and strictly positive away
/// from the diagonal.
struct GreenKernel {
  GeometryTag tag = GeometryTag::Flat;
  DimPair dims;
  std::function<double(const Vec&, const Vec&)> value;
};

/// Kernel values blow up as distance^{2k-n}; below this separation the power
/// amplifies roundoff beyond usefulness, so evaluation throws instead.
inline constexpr double kSingularDistance = 1e-9;

/// G_k of the flat metric: c_{n,k}^{-1} |x-y|^{2k-n}.
double green_flat(const DimPair& dims, const Vec& x, const Vec& y);

/// G_k of the round sphere: c_{n,k}^{-1} |xi(p)-xi(q)|^{2k-n} (chordal power).
double green_sphere(const DimPair& dims, const SpherePoint& p,
                    const SpherePoint& q);

/// G_k of the quotient by a finite free group: sum of green_sphere over the
/// orbit of one lift. Independent of the chosen lifts.
double green_space_form(const SpaceFormGroup& group, const DimPair& dims,
                        const SpherePoint& x, const SpherePoint& y);

/// Kernel of the conformal metric phi^{4/(n-2k)} g: G(x,y) / (phi(x) phi(y)).
double conformal_transport_green(const GreenKernel& kernel,
                                 const std::function<double(const Vec&)>& factor,
                                 const Vec& x, const Vec& y);

GreenKernel make_flat_kernel(const DimPair& dims);
GreenKernel make_sphere_kernel(const DimPair& dims);
GreenKernel make_space_form_kernel(SpaceFormGroup group, const DimPair& dims);

/// Quotient kernel transported to the stereographic chart of the given frame,
/// where the metric is exactly flat: G_chart(x, y) = G_Gamma(P(x), P(y)) /
/// (w(x) w(y)) with P = from_chart and w the chart transport weight.
GreenKernel make_chart_kernel(SpaceFormGroup group, ChartFrame frame,
                              const DimPair& dims);

}  // namespace gjms
