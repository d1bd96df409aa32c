#include "gjms/green.hpp"

#include <cmath>
#include <memory>
#include <stdexcept>
#include <utility>

namespace gjms {

namespace {

double chordal_power_sum(const SpaceFormGroup& group, const DimPair& dims,
                         const SpherePoint& x, const SpherePoint& y) {
  const double inv_c = 1.0 / gjms_constant(dims);
  const double expo = static_cast<double>(2 * dims.k - dims.n);
  double sum = 0.0;
  for (const Mat& g : group.elements) {
    const double d = (x.coords() - g * y.coords()).norm();
    if (d < kSingularDistance)
      throw std::domain_error("green kernel: points in the same orbit");
    sum += inv_c * std::pow(d, expo);
  }
  return sum;
}

}  // namespace

double green_flat(const DimPair& dims, const Vec& x, const Vec& y) {
  dims.validate();
  const double d = (x - y).norm();
  if (d < kSingularDistance)
    throw std::domain_error("green_flat: coincident points");
  return std::pow(d, static_cast<double>(2 * dims.k - dims.n)) /
         gjms_constant(dims);
}

double green_sphere(const DimPair& dims, const SpherePoint& p,
                    const SpherePoint& q) {
  dims.validate();
  const double d = chordal_distance(p, q);
  if (d < kSingularDistance)
    throw std::domain_error("green_sphere: coincident points");
  return std::pow(d, static_cast<double>(2 * dims.k - dims.n)) /
         gjms_constant(dims);
}

double green_space_form(const SpaceFormGroup& group, const DimPair& dims,
                        const SpherePoint& x, const SpherePoint& y) {
  dims.validate();
  if (group.ambient_dim != dims.n + 1)
    throw std::invalid_argument("green_space_form: group does not act on S^n");
  return chordal_power_sum(group, dims, x, y);
}

double conformal_transport_green(const GreenKernel& kernel,
                                 const std::function<double(const Vec&)>& factor,
                                 const Vec& x, const Vec& y) {
  const double fx = factor(x);
  const double fy = factor(y);
  if (!(fx > 0.0) || !(fy > 0.0))
    throw std::domain_error("conformal_transport_green: nonpositive factor");
  return kernel.value(x, y) / (fx * fy);
}

GreenKernel make_flat_kernel(const DimPair& dims) {
  dims.validate();
  return GreenKernel{GeometryTag::Flat, dims,
                     [dims](const Vec& x, const Vec& y) {
                       return green_flat(dims, x, y);
                     }};
}

GreenKernel make_sphere_kernel(const DimPair& dims) {
  dims.validate();
  return GreenKernel{GeometryTag::Sphere, dims,
                     [dims](const Vec& x, const Vec& y) {
                       return green_sphere(dims, SpherePoint(x), SpherePoint(y));
                     }};
}

GreenKernel make_space_form_kernel(SpaceFormGroup group, const DimPair& dims) {
  dims.validate();
  if (group.ambient_dim != dims.n + 1)
    throw std::invalid_argument("make_space_form_kernel: dimension mismatch");
  auto shared = std::make_shared<SpaceFormGroup>(std::move(group));
  return GreenKernel{GeometryTag::SpaceForm, dims,
                     [shared, dims](const Vec& x, const Vec& y) {
                       return green_space_form(*shared, dims, SpherePoint(x),
                                               SpherePoint(y));
                     }};
}

GreenKernel make_chart_kernel(SpaceFormGroup group, ChartFrame frame,
                              const DimPair& dims) {
  dims.validate();
  if (group.ambient_dim != dims.n + 1)
    throw std::invalid_argument("make_chart_kernel: dimension mismatch");
  auto shared_group = std::make_shared<SpaceFormGroup>(std::move(group));
  auto shared_frame = std::make_shared<ChartFrame>(std::move(frame));
  const int n = dims.n, k = dims.k;
  return GreenKernel{
      GeometryTag::Flat, dims,
      [shared_group, shared_frame, dims, n, k](const Vec& x, const Vec& y) {
        const SpherePoint p = shared_frame->from_chart(x);
        const SpherePoint q = shared_frame->from_chart(y);
        const double g = green_space_form(*shared_group, dims, p, q);
        return g / (chart_transport_weight(x, n, k) *
                    chart_transport_weight(y, n, k));
      }};
}

}  // namespace gjms
