#include "gjms/fields.hpp"

#include <cmath>
#include <stdexcept>

#include "gjms/rng.hpp"

namespace gjms {

Box Box::cube(int n, double half_width) {
  Box b;
  b.lo = Vec::Constant(n, -half_width);
  b.hi = Vec::Constant(n, half_width);
  return b;
}

bool Box::contains(const Vec& x, double margin) const {
  if (x.size() != lo.size()) return false;
  for (int i = 0; i < x.size(); ++i)
    if (x[i] < lo[i] + margin || x[i] > hi[i] - margin) return false;
  return true;
}

ScalarField::ScalarField(std::function<double(const Vec&)> value, Box domain)
    : value_(std::move(value)), domain_(std::move(domain)) {}

ScalarField::ScalarField(std::shared_ptr<const RadialProfile> profile,
                         Vec center, Box domain)
    : domain_(std::move(domain)),
      profile_(std::move(profile)),
      center_(std::move(center)) {
  auto prof = profile_;
  Vec c = center_;
  value_ = [prof, c](const Vec& x) {
    return prof->deriv((x - c).squaredNorm(), 0);
  };
}

double ScalarField::exact_laplacian_power(const Vec& x, int k) const {
  if (!profile_)
    throw std::logic_error("exact_laplacian_power: field is not radial");
  if (k < 1 || k > 2)
    throw std::invalid_argument("exact_laplacian_power: k must be 1 or 2");
  const double n = static_cast<double>(x.size());
  const double s = (x - center_).squaredNorm();
  // For p(s), s = r^2: sum_i d_i^2 p = 2n p' + 4 s p'', so with the
  // geometric sign Delta p = -(2n p' + 4s p'').
  const double p1 = profile_->deriv(s, 1);
  const double p2 = profile_->deriv(s, 2);
  if (k == 1) return -(2.0 * n * p1 + 4.0 * s * p2);
  const double p3 = profile_->deriv(s, 3);
  const double p4 = profile_->deriv(s, 4);
  // L1(s) = -(2n p' + 4s p''); Delta^2 p = -(2n L1' + 4s L1'').
  const double l1p = -((2.0 * n + 4.0) * p2 + 4.0 * s * p3);
  const double l1pp = -((2.0 * n + 8.0) * p3 + 4.0 * s * p4);
  return -(2.0 * n * l1p + 4.0 * s * l1pp);
}

namespace {

class RoundChartProfile final : public RadialProfile {
 public:
  double deriv(double s, int j) const override {
    const double u = 1.0 + s;
    switch (j) {
      case 0: return std::log(2.0 / u);
      case 1: return -1.0 / u;
      case 2: return 1.0 / (u * u);
      case 3: return -2.0 / (u * u * u);
      default: return 6.0 / (u * u * u * u);
    }
  }
};

class GaussianProfile final : public RadialProfile {
 public:
  explicit GaussianProfile(double a) : a_(a) {}
  double deriv(double s, int j) const override {
    double c = 1.0;
    for (int i = 0; i < j; ++i) c *= -a_;
    return c * std::exp(-a_ * s);
  }

 private:
  double a_;
};

class BumpProfile final : public RadialProfile {
 public:
  BumpProfile(double radius, int m) : r2_(radius * radius), m_(m) {}
  double deriv(double s, int j) const override {
    const double t = 1.0 - s / r2_;
    if (t <= 0.0) return 0.0;
    double c = 1.0;
    for (int i = 0; i < j; ++i) c *= -(m_ - i) / r2_;
    return c * std::pow(t, static_cast<double>(m_ - j));
  }

 private:
  double r2_;
  int m_;
};

class PolyProfile final : public RadialProfile {
 public:
  explicit PolyProfile(std::vector<double> coeffs) : c_(std::move(coeffs)) {}
  double deriv(double s, int j) const override {
    double sum = 0.0;
    for (std::size_t d = static_cast<std::size_t>(j); d < c_.size(); ++d) {
      double fac = 1.0;
      for (int i = 0; i < j; ++i) fac *= static_cast<double>(d - static_cast<std::size_t>(i));
      sum += c_[d] * fac * std::pow(s, static_cast<double>(d) - j);
    }
    return sum;
  }

 private:
  std::vector<double> c_;
};

}  // namespace

ScalarField round_chart_field(int n, double box_half_width) {
  return ScalarField(std::make_shared<RoundChartProfile>(), Vec::Zero(n),
                     Box::cube(n, box_half_width));
}

ScalarField gaussian_field(int n, double a, double box_half_width) {
  return ScalarField(std::make_shared<GaussianProfile>(a), Vec::Zero(n),
                     Box::cube(n, box_half_width));
}

ScalarField bump_field(int n, double radius, int smoothness, Vec center,
                       double box_half_width) {
  if (!(radius > 0.0)) throw std::invalid_argument("bump_field: radius <= 0");
  if (smoothness < 5)
    throw std::invalid_argument("bump_field: smoothness must be >= 5 for C^4");
  if (center.size() == 0) center = Vec::Zero(n);
  if (box_half_width <= 0.0)
    box_half_width = center.cwiseAbs().maxCoeff() + 2.0 * radius;
  ScalarField f(std::make_shared<BumpProfile>(radius, smoothness),
                center, Box::cube(n, box_half_width));
  f.set_support_radius(center.norm() + radius);
  return f;
}

ScalarField poly_field(int n, const std::vector<double>& coeffs,
                       double box_half_width) {
  return ScalarField(std::make_shared<PolyProfile>(coeffs), Vec::Zero(n),
                     Box::cube(n, box_half_width));
}

ScalarField random_smooth_field(int n, Rng& rng, double amplitude,
                                double offset, double box_half_width) {
  const double c0 = rng.uniform(-1.0, 1.0);
  Vec lin = rng.uniform_vec(n, -1.0, 1.0);
  Mat quad(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) quad(i, j) = rng.uniform(-0.5, 0.5);
  quad = 0.5 * (quad + quad.transpose()).eval();
  const double decay = rng.uniform(0.3, 0.8);
  auto value = [=](const Vec& x) {
    const double poly = c0 + lin.dot(x) + x.dot(quad * x);
    return offset + amplitude * poly * std::exp(-decay * x.squaredNorm());
  };
  return ScalarField(value, Box::cube(n, box_half_width));
}

ScalarField parse_field(const std::string& spec, int n) {
  const auto open = spec.find('(');
  std::string name = spec.substr(0, open);
  std::vector<double> args;
  if (open != std::string::npos) {
    const auto close = spec.rfind(')');
    if (close == std::string::npos || close < open)
      throw std::invalid_argument("parse_field: unbalanced parentheses: " + spec);
    std::string body = spec.substr(open + 1, close - open - 1);
    std::size_t pos = 0;
    while (pos < body.size()) {
      std::size_t next = body.find(',', pos);
      if (next == std::string::npos) next = body.size();
      args.push_back(std::stod(body.substr(pos, next - pos)));
      pos = next + 1;
    }
  }
  if (name == "round_chart") return round_chart_field(n);
  if (name == "gaussian")
    return gaussian_field(n, args.empty() ? 1.0 : args[0]);
  if (name == "bump") return bump_field(n, args.empty() ? 1.0 : args[0]);
  if (name == "poly") return poly_field(n, args);
  throw std::invalid_argument("parse_field: unknown field: " + spec);
}

}  // namespace gjms
