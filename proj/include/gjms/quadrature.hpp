#pragma once

#include <cstddef>
#include <vector>

#include "gjms/vec.hpp"

namespace gjms {

struct Quadrature1D {
  std::vector<double> nodes;    // on [-1, 1]
  std::vector<double> weights;  // sum to 2
};

/// Gauss-Legendre rule with q nodes (Newton on the Legendre recurrence).
const Quadrature1D& gauss_legendre(int q);

/// Quadrature on the sphere |z| = radius in R^n: product Gauss-Legendre in
/// the n-2 colatitudes, uniform (trapezoid, exact for periodic functions) in
/// the final angle. Weights include the full area element; their sum is the
/// sphere area radius^{n-1} Vol(S^{n-1}).
struct SphereQuadrature {
  std::vector<Vec> points;
  std::vector<double> weights;

  std::size_t size() const { return points.size(); }
};

SphereQuadrature sphere_quadrature(int n, double radius, int polar_nodes,
                                   int azimuthal_nodes);

}  // namespace gjms
