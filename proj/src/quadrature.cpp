#include "gjms/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

namespace gjms {

namespace {

Quadrature1D compute_gauss_legendre(int q) {
  Quadrature1D rule;
  rule.nodes.resize(static_cast<std::size_t>(q));
  rule.weights.resize(static_cast<std::size_t>(q));
  for (int i = 0; i < q; ++i) {
    // Chebyshev-like initial guess, then Newton on P_q.
    double x = std::cos(M_PI * (i + 0.75) / (q + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = x;
      if (q == 1) p1 = x;
      for (int j = 2; j <= q; ++j) {
        const double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
        p0 = p1;
        p1 = p2;
      }
      const double pq = (q == 1) ? x : p1;
      const double pq1 = (q == 1) ? 1.0 : p0;
      dp = q * (x * pq - pq1) / (x * x - 1.0);
      const double dx = pq / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    rule.nodes[static_cast<std::size_t>(q - 1 - i)] = x;
    rule.weights[static_cast<std::size_t>(q - 1 - i)] =
        2.0 / ((1.0 - x * x) * dp * dp);
  }
  return rule;
}

}  // namespace

const Quadrature1D& gauss_legendre(int q) {
  if (q < 1) throw std::invalid_argument("gauss_legendre: need q >= 1");
  static std::map<int, Quadrature1D> cache;
  static std::mutex mutex;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(q);
  if (it == cache.end()) it = cache.emplace(q, compute_gauss_legendre(q)).first;
  return it->second;
}

SphereQuadrature sphere_quadrature(int n, double radius, int polar_nodes,
                                   int azimuthal_nodes) {
  if (n < 2) throw std::invalid_argument("sphere_quadrature: need n >= 2");
  if (polar_nodes < 1 || azimuthal_nodes < 2)
    throw std::invalid_argument("sphere_quadrature: too few nodes");

  const Quadrature1D& gl = gauss_legendre(polar_nodes);
  const int n_colat = n - 2;

  SphereQuadrature quad;
  std::vector<int> idx(static_cast<std::size_t>(n_colat), 0);
  const double dphi = 2.0 * M_PI / azimuthal_nodes;
  const double rpow = std::pow(radius, n - 1);

  // Tensor loop over colatitude indices, then the azimuth.
  while (true) {
    double weight = rpow;
    std::vector<double> theta(static_cast<std::size_t>(n_colat));
    for (int a = 0; a < n_colat; ++a) {
      const std::size_t ia = static_cast<std::size_t>(idx[static_cast<std::size_t>(a)]);
      theta[static_cast<std::size_t>(a)] = 0.5 * M_PI * (gl.nodes[ia] + 1.0);
      // d(theta) = (pi/2) d(node); area element carries sin^{n-2-a}(theta_a).
      weight *= 0.5 * M_PI * gl.weights[ia] *
                std::pow(std::sin(theta[static_cast<std::size_t>(a)]), n - 2 - a);
    }
    for (int b = 0; b < azimuthal_nodes; ++b) {
      const double phi = dphi * b;
      Vec z(n);
      double sprod = 1.0;
      for (int a = 0; a < n_colat; ++a) {
        z[a] = radius * sprod * std::cos(theta[static_cast<std::size_t>(a)]);
        sprod *= std::sin(theta[static_cast<std::size_t>(a)]);
      }
      z[n - 2] = radius * sprod * std::cos(phi);
      z[n - 1] = radius * sprod * std::sin(phi);
      quad.points.push_back(std::move(z));
      quad.weights.push_back(weight * dphi);
    }
    int a = n_colat - 1;
    while (a >= 0 && ++idx[static_cast<std::size_t>(a)] == polar_nodes) {
      idx[static_cast<std::size_t>(a)] = 0;
      --a;
    }
    if (a < 0) break;
  }
  return quad;
}

}  // namespace gjms
