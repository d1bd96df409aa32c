#pragma once

#include "gjms/vec.hpp"

namespace gjms::fd {

// Fourth-order central stencils. F is any callable Vec -> double.

template <class F>
double d1(const F& f, const Vec& x, int i, double h) {
  Vec p1 = x, m1 = x, p2 = x, m2 = x;
  p1[i] += h;
  m1[i] -= h;
  p2[i] += 2 * h;
  m2[i] -= 2 * h;
  return (8.0 * (f(p1) - f(m1)) - (f(p2) - f(m2))) / (12.0 * h);
}

template <class F>
double d2(const F& f, const Vec& x, int i, double h) {
  Vec p1 = x, m1 = x, p2 = x, m2 = x;
  p1[i] += h;
  m1[i] -= h;
  p2[i] += 2 * h;
  m2[i] -= 2 * h;
  return (-f(p2) + 16.0 * f(p1) - 30.0 * f(x) + 16.0 * f(m1) - f(m2)) /
         (12.0 * h * h);
}

/// Mixed partial d^2/dx_i dx_j as nested fourth-order first derivatives.
template <class F>
double d11(const F& f, const Vec& x, int i, int j, double h) {
  const auto inner = [&](double shift) {
    Vec y = x;
    y[i] += shift;
    return d1(f, y, j, h);
  };
  return (8.0 * (inner(h) - inner(-h)) - (inner(2 * h) - inner(-2 * h))) /
         (12.0 * h);
}

template <class F>
Vec gradient(const F& f, const Vec& x, double h) {
  Vec g(x.size());
  for (int i = 0; i < x.size(); ++i) g[i] = d1(f, x, i, h);
  return g;
}

template <class F>
Mat hessian(const F& f, const Vec& x, double h) {
  const int n = static_cast<int>(x.size());
  Mat hss(n, n);
  for (int i = 0; i < n; ++i) {
    hss(i, i) = d2(f, x, i, h);
    for (int j = i + 1; j < n; ++j) {
      const double v = d11(f, x, i, j, h);
      hss(i, j) = v;
      hss(j, i) = v;
    }
  }
  return hss;
}

/// Coordinate Laplacian with the geometric sign: -sum_i d^2 f/dx_i^2.
template <class F>
double coord_laplacian(const F& f, const Vec& x, double h) {
  double sum = 0.0;
  for (int i = 0; i < x.size(); ++i) sum += d2(f, x, i, h);
  return -sum;
}

/// Directional derivative along the unit vector u.
template <class F>
double directional(const F& f, const Vec& x, const Vec& u, double h) {
  const auto g = [&](double t) { return f(x + t * u); };
  return (8.0 * (g(h) - g(-h)) - (g(2 * h) - g(-2 * h))) / (12.0 * h);
}

}  // namespace gjms::fd
