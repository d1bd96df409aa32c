#include "gjms/space_form_group.hpp"

#include <cmath>
#include <numeric>
#include <regex>
#include <stdexcept>

namespace gjms {

int SpaceFormGroup::find(const Mat& m, double tol) const {
  for (int i = 0; i < order(); ++i) {
    if ((elements[static_cast<std::size_t>(i)] - m).cwiseAbs().maxCoeff() <= tol)
      return i;
  }
  return -1;
}

GroupValidation validate_group(const SpaceFormGroup& group) {
  GroupValidation rep;
  const int d = group.ambient_dim;
  const Mat id = Mat::Identity(d, d);
  if (group.order() == 0) return rep;

  rep.has_identity = group.contains(id);

  rep.closure_residual = 0.0;
  bool closed = true;
  for (const Mat& a : group.elements) {
    for (const Mat& b : group.elements) {
      const Mat ab = a * b;
      double best = 1e300;
      for (const Mat& c : group.elements)
        best = std::min(best, (ab - c).cwiseAbs().maxCoeff());
      rep.closure_residual = std::max(rep.closure_residual, best);
      if (best > 1e-10) closed = false;
    }
  }
  rep.closed = closed;

  bool has_inv = true;
  for (const Mat& a : group.elements) {
    const Mat inv = a.transpose();  // orthogonal inverse
    double best = 1e300;
    for (const Mat& c : group.elements)
      best = std::min(best, (inv - c).cwiseAbs().maxCoeff());
    rep.inverse_residual = std::max(rep.inverse_residual, best);
    if (best > 1e-10) has_inv = false;
  }
  rep.has_inverses = has_inv;

  bool oriented = true;
  for (const Mat& a : group.elements) {
    const double dev = std::abs(a.determinant() - 1.0);
    rep.orientation_residual = std::max(rep.orientation_residual, dev);
    if (dev > 1e-10) oriented = false;
    const double orth = (a.transpose() * a - id).cwiseAbs().maxCoeff();
    rep.orientation_residual = std::max(rep.orientation_residual, orth);
    if (orth > 1e-10) oriented = false;
  }
  rep.oriented = oriented;

  rep.min_free_det = 1e300;
  bool free_action = true;
  for (const Mat& a : group.elements) {
    if ((a - id).cwiseAbs().maxCoeff() <= 1e-10) continue;  // identity itself
    const double det = std::abs((a - id).determinant());
    rep.min_free_det = std::min(rep.min_free_det, det);
    if (det <= kFreeActionThreshold) free_action = false;
  }
  if (rep.min_free_det == 1e300) rep.min_free_det = 0.0;  // trivial group
  rep.acts_freely = free_action;
  return rep;
}

SpaceFormGroup trivial_group(int ambient_dim) {
  SpaceFormGroup g;
  g.ambient_dim = ambient_dim;
  g.elements.push_back(Mat::Identity(ambient_dim, ambient_dim));
  return g;
}

SpaceFormGroup lens_group(long p, const std::vector<long>& q) {
  if (p < 1) throw std::invalid_argument("lens_group: need p >= 1");
  if (q.empty()) throw std::invalid_argument("lens_group: need at least one block");
  for (long qi : q) {
    const long r = ((qi % p) + p) % p;
    if (std::gcd(r, p) != 1)
      throw std::invalid_argument("lens_group: non-free action, gcd(q_i, p) != 1");
  }
  const int m = static_cast<int>(q.size());
  SpaceFormGroup g;
  g.ambient_dim = 2 * m;
  for (long j = 0; j < p; ++j) {
    Mat el = Mat::Zero(2 * m, 2 * m);
    for (int b = 0; b < m; ++b) {
      const double theta = 2.0 * M_PI * static_cast<double>(q[static_cast<std::size_t>(b)]) *
                           static_cast<double>(j) / static_cast<double>(p);
      const double c = std::cos(theta), s = std::sin(theta);
      el(2 * b, 2 * b) = c;
      el(2 * b, 2 * b + 1) = -s;
      el(2 * b + 1, 2 * b) = s;
      el(2 * b + 1, 2 * b + 1) = c;
    }
    g.elements.push_back(std::move(el));
  }
  return g;
}

SpaceFormGroup parse_lens(const std::string& spec) {
  static const std::regex re(R"(^\s*L\(\s*(\d+)\s*;\s*(-?\d+(\s*,\s*-?\d+)*)\s*\)\s*$)");
  std::smatch m;
  if (!std::regex_match(spec, m, re))
    throw std::invalid_argument("invalid lens spec, expected L(p;q1,...,qm): " + spec);
  const long p = std::stol(m[1].str());
  std::vector<long> q;
  const std::string qs = m[2].str();
  std::size_t pos = 0;
  while (pos < qs.size()) {
    std::size_t next = qs.find(',', pos);
    if (next == std::string::npos) next = qs.size();
    q.push_back(std::stol(qs.substr(pos, next - pos)));
    pos = next + 1;
  }
  return lens_group(p, q);
}

bool is_subgroup(const SpaceFormGroup& sub, const SpaceFormGroup& full,
                 double tol) {
  if (sub.ambient_dim != full.ambient_dim) return false;
  for (const Mat& a : sub.elements)
    if (!full.contains(a, tol)) return false;
  return true;
}

}  // namespace gjms
