#pragma once

#include <utility>
#include <variant>
#include <vector>

#include "gjms/vec.hpp"

namespace gjms {

/// Point on the unit sphere S^n embedded in R^{n+1}; renormalized on
/// construction.
class SpherePoint {
 public:
  explicit SpherePoint(Vec coords);

  const Vec& coords() const { return coords_; }
  int ambient_dim() const { return static_cast<int>(coords_.size()); }
  int sphere_dim() const { return ambient_dim() - 1; }

  SpherePoint antipode() const { return SpherePoint(-coords_); }

 private:
  Vec coords_;
};

/// Euclidean distance of the embedded points; equals 2 sin(geodesic/2).
double chordal_distance(const SpherePoint& p, const SpherePoint& q);

/// Conformal factor of the stereographic chart: F(x) = 2/(1+|x|^2), so the
/// round metric pulls back to F(x)^2 * eucl.
double round_factor(const Vec& x);

/// Transport weight w with eucl = w^{4/(n-2k)} * (round metric in the chart):
/// w(x) = ((1+|x|^2)/2)^{(n-2k)/2}.
double chart_transport_weight(const Vec& x, int n, int k);

/// Stereographic chart sending its center to the origin of R^n; the center's
/// antipode is the projection pole.
class ChartFrame {
 public:
  explicit ChartFrame(SpherePoint center);

  const SpherePoint& center() const { return center_; }
  int chart_dim() const { return center_.sphere_dim(); }

  /// Chart image of p. Throws std::domain_error at the chart pole
  /// (the antipode of the center).
  Vec to_chart(const SpherePoint& p) const;

  /// Inverse of to_chart; defined on all of R^n.
  SpherePoint from_chart(const Vec& x) const;

 private:
  SpherePoint center_;
  Mat basis_;  // column 0 = pole direction, columns 1..n span the equator
};

/// A Moebius transformation as an ordered list of primitive moves, applied
/// first to last. Factors stay exact and composable this way.
class MoebiusMap {
 public:
  struct Isometry {
    Mat rotation;     // orthogonal
    Vec translation;
  };
  struct Dilation {
    double lambda;    // > 0
  };
  struct Inversion {};  // x -> x/|x|^2

  using Move = std::variant<Isometry, Dilation, Inversion>;

  MoebiusMap() = default;
  explicit MoebiusMap(std::vector<Move> moves);

  MoebiusMap& push_isometry(Mat rotation, Vec translation);
  MoebiusMap& push_dilation(double lambda);
  MoebiusMap& push_inversion();

  const std::vector<Move>& moves() const { return moves_; }

  /// Image h(x) together with the pointwise conformal factor phi(x) of
  /// h^* eucl = phi^2 eucl (product of the stage factors along the orbit).
  /// Throws std::domain_error if any inversion stage hits its pole.
  std::pair<Vec, double> apply(const Vec& x) const;

 private:
  std::vector<Move> moves_;
};

/// |h(x)-h(y)|^2 - phi(x) phi(y) |x-y|^2; zero to roundoff for every
/// Moebius transformation.
double moebius_identity_residual(const MoebiusMap& map, const Vec& x,
                                 const Vec& y);

}  // namespace gjms
