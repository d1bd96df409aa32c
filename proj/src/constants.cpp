#include "gjms/constants.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace gjms {

void DimPair::validate() const {
  if (n < 3) throw std::invalid_argument("DimPair: need n >= 3");
  if (k < 1) throw std::invalid_argument("DimPair: need k >= 1");
  if (n <= 2 * k)
    throw std::invalid_argument("DimPair: need n > 2k (got n=" +
                                std::to_string(n) + ", k=" + std::to_string(k) + ")");
}

namespace {

void reduce(std::int64_t& num, std::int64_t& den) {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
}

}  // namespace

double ExactConstant::to_double() const {
  return static_cast<double>(num) / static_cast<double>(den) *
         std::pow(M_PI, pi_power);
}

std::string ExactConstant::str() const {
  std::string s = std::to_string(num);
  if (pi_power == 1)
    s += "*pi";
  else if (pi_power > 1)
    s += "*pi^" + std::to_string(pi_power);
  if (den != 1) s += "/" + std::to_string(den);
  return s;
}

ExactConstant vol_sphere_exact(int d) {
  if (d < 0) throw std::invalid_argument("vol_sphere: need d >= 0");
  ExactConstant c;
  if (d % 2 == 1) {
    // Vol(S^{2m-1}) = 2 pi^m / (m-1)!
    const int m = (d + 1) / 2;
    c.num = 2;
    c.den = 1;
    for (int j = 2; j < m; ++j) c.den *= j;
    c.pi_power = m;
  } else {
    // Vol(S^{2m}) = 2 * 4^m * m! / (2m)! * pi^m
    const int m = d / 2;
    c.num = 2;
    c.den = 1;
    for (int j = 0; j < m; ++j) c.num *= 4;
    for (int j = 2; j <= m; ++j) c.num *= j;
    for (int j = 2; j <= 2 * m; ++j) c.den *= j;
    c.pi_power = m;
  }
  reduce(c.num, c.den);
  return c;
}

double vol_sphere(int d) { return vol_sphere_exact(d).to_double(); }

ExactConstant gjms_constant_exact(const DimPair& dims) {
  dims.validate();
  ExactConstant c = vol_sphere_exact(dims.n - 1);
  for (int j = 1; j < dims.k; ++j) c.num *= 2;        // 2^{k-1}
  for (int j = 2; j < dims.k; ++j) c.num *= j;        // (k-1)!
  for (int j = 1; j <= dims.k; ++j) c.num *= dims.n - 2 * j;
  reduce(c.num, c.den);
  return c;
}

double gjms_constant(const DimPair& dims) {
  return gjms_constant_exact(dims).to_double();
}

double radial_power_coefficient(const DimPair& dims, HomogeneityDegree deg) {
  dims.validate();
  double coeff = 1.0;
  for (int j = 0; j < dims.k; ++j) {
    const double beta = deg.alpha - 2.0 * j;
    coeff *= -(beta * (beta + dims.n - 2.0));
  }
  return coeff;
}

bool homogeneous_invertibility(const DimPair& dims, HomogeneityDegree deg) {
  dims.validate();
  const double a = deg.alpha;
  const double nearest = std::round(a);
  const bool is_integer = std::abs(a - nearest) < 1e-9;
  if (!is_integer) return true;
  return nearest > 2.0 * dims.k - dims.n && nearest < 0.0;
}

}  // namespace gjms
