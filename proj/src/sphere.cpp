#include "gjms/sphere.hpp"

#include <cmath>
#include <stdexcept>

namespace gjms {

SpherePoint::SpherePoint(Vec coords) : coords_(std::move(coords)) {
  if (coords_.size() < 2)
    throw std::invalid_argument("SpherePoint: ambient dimension must be >= 2");
  const double norm = coords_.norm();
  if (norm < 1e-12)
    throw std::invalid_argument("SpherePoint: cannot normalize near-zero vector");
  coords_ /= norm;
}

double chordal_distance(const SpherePoint& p, const SpherePoint& q) {
  if (p.ambient_dim() != q.ambient_dim())
    throw std::invalid_argument("chordal_distance: dimension mismatch");
  return (p.coords() - q.coords()).norm();
}

double round_factor(const Vec& x) { return 2.0 / (1.0 + x.squaredNorm()); }

double chart_transport_weight(const Vec& x, int n, int k) {
  return std::pow((1.0 + x.squaredNorm()) / 2.0, 0.5 * (n - 2 * k));
}

ChartFrame::ChartFrame(SpherePoint center) : center_(std::move(center)) {
  const int m = center_.ambient_dim();
  const Vec pole = -center_.coords();
  // Householder reflection taking e_0 to the pole direction; its columns
  // give an orthonormal basis adapted to the chart.
  Vec v = -pole;
  v[0] += 1.0;  // v = e_0 - pole
  basis_ = Mat::Identity(m, m);
  const double vv = v.squaredNorm();
  if (vv > 1e-24) basis_ -= (2.0 / vv) * (v * v.transpose());
}

Vec ChartFrame::to_chart(const SpherePoint& p) const {
  const int m = center_.ambient_dim();
  if (p.ambient_dim() != m)
    throw std::invalid_argument("to_chart: dimension mismatch");
  const Vec local = basis_.transpose() * p.coords();
  const double p0 = local[0];
  if (1.0 - p0 < 1e-13)
    throw std::domain_error("to_chart: point at the chart pole");
  return local.tail(m - 1) / (1.0 - p0);
}

SpherePoint ChartFrame::from_chart(const Vec& x) const {
  const int m = center_.ambient_dim();
  if (x.size() != m - 1)
    throw std::invalid_argument("from_chart: dimension mismatch");
  const double s = x.squaredNorm();
  Vec local(m);
  local[0] = (s - 1.0) / (s + 1.0);
  local.tail(m - 1) = (2.0 / (1.0 + s)) * x;
  return SpherePoint(basis_ * local);
}

MoebiusMap::MoebiusMap(std::vector<Move> moves) : moves_(std::move(moves)) {
  for (const Move& mv : moves_) {
    if (const auto* iso = std::get_if<Isometry>(&mv)) {
      const Mat& q = iso->rotation;
      if (q.rows() != q.cols())
        throw std::invalid_argument("MoebiusMap: non-square rotation");
      const double res =
          (q.transpose() * q - Mat::Identity(q.rows(), q.cols()))
              .cwiseAbs()
              .maxCoeff();
      if (res > 1e-12)
        throw std::invalid_argument("MoebiusMap: rotation not orthogonal");
    } else if (const auto* dil = std::get_if<Dilation>(&mv)) {
      if (!(dil->lambda > 0.0))
        throw std::invalid_argument("MoebiusMap: dilation factor must be positive");
    }
  }
}

MoebiusMap& MoebiusMap::push_isometry(Mat rotation, Vec translation) {
  std::vector<Move> moves = std::move(moves_);
  moves.push_back(Isometry{std::move(rotation), std::move(translation)});
  *this = MoebiusMap(std::move(moves));
  return *this;
}

MoebiusMap& MoebiusMap::push_dilation(double lambda) {
  std::vector<Move> moves = std::move(moves_);
  moves.push_back(Dilation{lambda});
  *this = MoebiusMap(std::move(moves));
  return *this;
}

MoebiusMap& MoebiusMap::push_inversion() {
  moves_.push_back(Inversion{});
  return *this;
}

std::pair<Vec, double> MoebiusMap::apply(const Vec& x) const {
  Vec y = x;
  double factor = 1.0;
  for (const Move& mv : moves_) {
    if (const auto* iso = std::get_if<Isometry>(&mv)) {
      y = iso->rotation * y + iso->translation;
    } else if (const auto* dil = std::get_if<Dilation>(&mv)) {
      y *= dil->lambda;
      factor *= dil->lambda;
    } else {
      const double s = y.squaredNorm();
      if (s < 1e-18)
        throw std::domain_error("MoebiusMap: inversion pole hit");
      y /= s;
      factor /= s;
    }
  }
  return {y, factor};
}

double moebius_identity_residual(const MoebiusMap& map, const Vec& x,
                                 const Vec& y) {
  const auto [hx, fx] = map.apply(x);
  const auto [hy, fy] = map.apply(y);
  return (hx - hy).squaredNorm() - fx * fy * (x - y).squaredNorm();
}

}  // namespace gjms
