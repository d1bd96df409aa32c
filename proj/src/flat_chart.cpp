#include "gjms/flat_chart.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "gjms/fd.hpp"
#include "gjms/quadrature.hpp"

namespace gjms {

namespace {

void check_stencil(const ScalarField& f, const Vec& x, double h, int depth) {
  if (!f.domain().contains(x, 2.0 * depth * h))
    throw std::domain_error("flat_chart: stencil leaves the field domain");
}

double exp2f(const ScalarField& f, const Vec& x) { return std::exp(2.0 * f(x)); }

}  // namespace

CurvaturePack conformal_curvature(const ScalarField& f, const Vec& x, int n,
                                  double h) {
  check_stencil(f, x, h, 1);
  const Vec df = fd::gradient(f, x, h);
  const Mat hess = fd::hessian(f, x, h);
  const double lap_f = -hess.trace();  // geometric coordinate Laplacian
  const double df2 = df.squaredNorm();

  CurvaturePack pack;
  // Ric of e^{2f} eucl: (n-2)(df x df - Hess f) + (Delta_0 f - (n-2)|df|^2) I.
  pack.ric = (n - 2.0) * (df * df.transpose() - hess);
  pack.ric += (lap_f - (n - 2.0) * df2) * Mat::Identity(n, n);
  const double e2f = exp2f(f, x);
  pack.scal = pack.ric.trace() / e2f;
  pack.j = pack.scal / (2.0 * (n - 1.0));
  pack.schouten = (pack.ric - pack.j * e2f * Mat::Identity(n, n)) / (n - 2.0);
  return pack;
}

double metric_laplacian(const ScalarField& f, const ScalarField& u,
                        const Vec& x, int n, double h) {
  check_stencil(f, x, h, 1);
  const Vec df = fd::gradient(f, x, h);
  const Vec du = fd::gradient(u, x, h);
  const double lap_u = fd::coord_laplacian(u, x, h);
  return (lap_u - (n - 2.0) * df.dot(du)) / exp2f(f, x);
}

double q2_curvature(const ScalarField& f, const Vec& x, int n, double h) {
  if (n < 5) throw std::invalid_argument("q2_curvature: need n >= 5");
  check_stencil(f, x, h, 2);
  const auto j_field = ScalarField(
      [&f, n, h](const Vec& y) { return conformal_curvature(f, y, n, h).j; },
      f.domain());
  const double lap_j = metric_laplacian(f, j_field, x, n, h);
  const CurvaturePack pack = conformal_curvature(f, x, n, h);
  const double e2f = exp2f(f, x);
  const double p2 = pack.schouten.squaredNorm() / (e2f * e2f);
  return lap_j + 0.5 * n * pack.j * pack.j - 2.0 * p2;
}

namespace {

/// omega_i = (T du)_i with one index lowered: (n-2) J d_i u - 4 e^{-2f}
/// (Schouten du)_i. Its negative divergence is the delta(T du) term of P_2.
Vec t_du_oneform(const ScalarField& f, const ScalarField& u, const Vec& y,
                 int n, double h) {
  const CurvaturePack pack = conformal_curvature(f, y, n, h);
  const Vec du = fd::gradient(u, y, h);
  return (n - 2.0) * pack.j * du -
         (4.0 / exp2f(f, y)) * (pack.schouten * du);
}

}  // namespace

double paneitz_apply(int k, const ScalarField& f, const ScalarField& u,
                     const Vec& x, int n, double h) {
  if (k == 1) {
    const CurvaturePack pack = conformal_curvature(f, x, n, h);
    return metric_laplacian(f, u, x, n, h) +
           (n - 2.0) / (4.0 * (n - 1.0)) * pack.scal * u(x);
  }
  if (k != 2) throw std::invalid_argument("paneitz_apply: k must be 1 or 2");
  if (n < 5) throw std::invalid_argument("paneitz_apply: k=2 needs n >= 5");
  check_stencil(f, x, h, 3);

  const auto lap_u = ScalarField(
      [&f, &u, n, h](const Vec& y) { return metric_laplacian(f, u, y, n, h); },
      f.domain());
  const double bilap = metric_laplacian(f, lap_u, x, n, h);

  double div_omega = 0.0;
  for (int i = 0; i < n; ++i) {
    const auto omega_i = [&f, &u, n, h, i](const Vec& y) {
      return t_du_oneform(f, u, y, n, h)[i];
    };
    div_omega += fd::d1(omega_i, x, i, h);
  }
  const Vec df = fd::gradient(f, x, h);
  const Vec omega_x = t_du_oneform(f, u, x, n, h);
  const double delta_t_du =
      -(div_omega + (n - 2.0) * df.dot(omega_x)) / exp2f(f, x);

  return bilap + delta_t_du +
         0.5 * (n - 4.0) * q2_curvature(f, x, n, h) * u(x);
}

double covariance_residual(int k, const ScalarField& f, const ScalarField& phi,
                           const ScalarField& u, const Vec& x, int n,
                           double h) {
  if (!(phi(x) > 0.0))
    throw std::domain_error("covariance_residual: conformal factor <= 0");
  const double a = 2.0 / static_cast<double>(n - 2 * k);
  const ScalarField f_tilde(
      [f, phi, a](const Vec& y) { return f(y) + a * std::log(phi(y)); },
      f.domain());
  const ScalarField phi_u(
      [phi, u](const Vec& y) { return phi(y) * u(y); }, u.domain());
  const double lhs = paneitz_apply(k, f_tilde, u, x, n, h);
  const double weight =
      std::pow(phi(x), -static_cast<double>(n + 2 * k) / (n - 2 * k));
  const double rhs = weight * paneitz_apply(k, f, phi_u, x, n, h);
  return std::abs(lhs - rhs);
}

double gjms_second_term_residual(const ScalarField& f, const ScalarField& u,
                                 const ScalarField& v, const Vec& x, int n,
                                 double h) {
  if (n < 5)
    throw std::invalid_argument("gjms_second_term_residual: need n >= 5");
  if (std::abs(u(x)) < 1e-12 || std::abs(v(x)) < 1e-12)
    throw std::domain_error("gjms_second_term_residual: test function vanishes");

  const auto j_field = ScalarField(
      [&f, n, h](const Vec& y) { return conformal_curvature(f, y, n, h).j; },
      f.domain());
  const CurvaturePack pack = conformal_curvature(f, x, n, h);
  const Vec df = fd::gradient(f, x, h);
  const Vec dj = fd::gradient(j_field, x, h);
  const double e2f = exp2f(f, x);

  const auto bracket = [&](const ScalarField& w) {
    const auto lap_w = ScalarField(
        [&f, &w, n, h](const Vec& y) { return metric_laplacian(f, w, y, n, h); },
        f.domain());
    const double bilap = metric_laplacian(f, lap_w, x, n, h);

    // T w = 2 P^{ij} Hess_{ij} w + <dJ, dw>_g, indices raised with e^{2f} eucl.
    const Mat hess_w = fd::hessian(w, x, h);
    const Vec dw = fd::gradient(w, x, h);
    // Christoffel contraction: sum_{ij} P_ij Gamma^a_ij = 2 (P df)_a - tr(P) df_a.
    const Vec pdf = pack.schouten * df;
    const double trp = pack.schouten.trace();
    double p_hess = 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) p_hess += pack.schouten(i, j) * hess_w(i, j);
    const double p_gamma = (2.0 * pdf - trp * df).dot(dw);
    const double t_w =
        2.0 * (p_hess - p_gamma) / (e2f * e2f) + dj.dot(dw) / e2f;

    const double lap_w_x = lap_w(x);
    const auto jw = ScalarField(
        [&j_field, &w](const Vec& y) { return j_field(y) * w(y); }, f.domain());
    const double lap_jw = metric_laplacian(f, jw, x, n, h);

    return bilap + 2.0 * t_w + 0.5 * n * pack.j * lap_w_x -
           (2.0 - 0.5 * n) * lap_jw;
  };

  const double ru = paneitz_apply(2, f, u, x, n, h) - bracket(u);
  const double rv = paneitz_apply(2, f, v, x, n, h) - bracket(v);
  return std::abs(ru / u(x) - rv / v(x));
}

namespace {

struct Panel {
  Vec lo, hi;
};

std::vector<Panel> onion_panels(int n, const DiracGrid& grid) {
  std::vector<Panel> panels;
  for (int level = 0; level < grid.levels; ++level) {
    const double outer = grid.half_width * std::pow(0.5, level);
    const double inner = 0.5 * outer;
    // Partition the shell {inner < |x|_inf <= outer} by the first axis
    // exceeding `inner`, then split each block `split` times per axis.
    for (int axis = 0; axis < n; ++axis) {
      for (int sign = -1; sign <= 1; sign += 2) {
        Panel block;
        block.lo = Vec(n);
        block.hi = Vec(n);
        for (int j = 0; j < n; ++j) {
          if (j < axis) {
            block.lo[j] = -inner;
            block.hi[j] = inner;
          } else if (j > axis) {
            block.lo[j] = -outer;
            block.hi[j] = outer;
          } else {
            block.lo[j] = sign > 0 ? inner : -outer;
            block.hi[j] = sign > 0 ? outer : -inner;
          }
        }
        const int s = grid.split;
        std::vector<int> idx(static_cast<std::size_t>(n), 0);
        while (true) {
          Panel p;
          p.lo = Vec(n);
          p.hi = Vec(n);
          for (int j = 0; j < n; ++j) {
            const double w = (block.hi[j] - block.lo[j]) / s;
            p.lo[j] = block.lo[j] + w * idx[static_cast<std::size_t>(j)];
            p.hi[j] = p.lo[j] + w;
          }
          panels.push_back(std::move(p));
          int a = n - 1;
          while (a >= 0 && ++idx[static_cast<std::size_t>(a)] == s) {
            idx[static_cast<std::size_t>(a)] = 0;
            --a;
          }
          if (a < 0) break;
        }
      }
    }
  }
  return panels;
}

}  // namespace

DiracGrid dirac_grid_preset(int n, int k, int stage, double half_width) {
  DiracGrid g;
  g.half_width = half_width;
  // Truncation of the innermost cube scales like 2^{-2k levels}; deeper
  // onions are cheap, so let k=1 go deeper. The Gauss order has to cover the
  // polynomial degree of the bump integrands; panel splitting buys accuracy
  // where the node count q^n still allows it.
  g.levels = (k == 1 ? 8 : 5) + 2 * stage;
  if (n >= 6) {
    g.gl_order = 5 + stage;
    g.split = 1;
  } else if (n >= 4) {
    g.gl_order = 4 + stage;
    g.split = k == 1 ? (stage == 0 ? 1 : 2) : 1 + stage;
  } else {
    g.gl_order = 4 + stage;
    g.split = 2 + stage;
  }
  return g;
}

double dirac_pairing(const DimPair& dims, const ScalarField& test,
                     const DiracGrid& grid, Exec exec) {
  dims.validate();
  const int n = dims.n, k = dims.k;
  if (k > 2)
    throw std::invalid_argument("dirac_pairing: k must be 1 or 2");
  if (!test.support_radius())
    throw std::invalid_argument("dirac_pairing: test must be compactly supported");
  if (*test.support_radius() >= grid.half_width * (1.0 - 1e-12))
    throw std::domain_error("dirac_pairing: support touches the grid boundary");

  const double fd_step = grid.half_width * 5e-3;
  const auto lap_k = [&](const Vec& x) {
    if (test.is_radial()) return test.exact_laplacian_power(x, k);
    if (k == 1) return fd::coord_laplacian(test, x, fd_step);
    const auto lap1 = [&](const Vec& y) {
      return fd::coord_laplacian(test, y, fd_step);
    };
    return fd::coord_laplacian(lap1, x, fd_step);
  };
  const double expo = static_cast<double>(2 * k - n);

  const std::vector<Panel> panels = onion_panels(n, grid);
  const Quadrature1D& gl = gauss_legendre(grid.gl_order);
  const int q = grid.gl_order;

  return indexed_sum(
      panels.size(),
      [&](std::size_t pi) {
        const Panel& p = panels[pi];
        std::vector<int> idx(static_cast<std::size_t>(n), 0);
        Vec x(n);
        double sum = 0.0;
        while (true) {
          double wt = 1.0;
          for (int j = 0; j < n; ++j) {
            const std::size_t ij = static_cast<std::size_t>(idx[static_cast<std::size_t>(j)]);
            const double half = 0.5 * (p.hi[j] - p.lo[j]);
            x[j] = p.lo[j] + half * (gl.nodes[ij] + 1.0);
            wt *= half * gl.weights[ij];
          }
          sum += wt * std::pow(x.norm(), expo) * lap_k(x);
          int a = n - 1;
          while (a >= 0 && ++idx[static_cast<std::size_t>(a)] == q) {
            idx[static_cast<std::size_t>(a)] = 0;
            --a;
          }
          if (a < 0) break;
        }
        return sum;
      },
      exec);
}

}  // namespace gjms
