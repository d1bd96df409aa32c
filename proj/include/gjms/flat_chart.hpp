#pragma once

#include "gjms/constants.hpp"
#include "gjms/fields.hpp"
#include "gjms/parallel.hpp"
#include "gjms/vec.hpp"

namespace gjms {

/// Curvature of a conformally flat metric e^{2f} eucl at one point, in chart
/// coordinates (lower indices).
struct CurvaturePack {
  double scal = 0.0;
  Mat ric;
  Mat schouten;
  double j = 0.0;
};

/// Default FD step for the fourth-order stencils.
inline constexpr double kDefaultStep = 1e-2;

/// Curvature of e^{2f} eucl at x via the conformal transformation law from
/// the flat base (J = Scal / (2(n-1)), Schouten = (Ric - J g)/(n-2)).
CurvaturePack conformal_curvature(const ScalarField& f, const Vec& x, int n,
                                  double h = kDefaultStep);

/// Laplacian of u in the metric e^{2f} eucl (geometric sign):
/// e^{-2f} (Delta_0 u - (n-2) <df, du>).
double metric_laplacian(const ScalarField& f, const ScalarField& u,
                        const Vec& x, int n, double h = kDefaultStep);

/// Q_2 = Delta_g J + (n/2) J^2 - 2 |Schouten|^2, for n >= 5.
double q2_curvature(const ScalarField& f, const Vec& x, int n,
                    double h = kDefaultStep);

/// P_1 u = Delta_g u + (n-2)/(4(n-1)) Scal u, or
/// P_2 u = Delta_g^2 u + delta(T du) + (n-4)/2 Q_2 u with
/// T = (n-2) J g - 4 Schouten and delta the negative divergence.
double paneitz_apply(int k, const ScalarField& f, const ScalarField& u,
                     const Vec& x, int n, double h = kDefaultStep);

/// |P_k^{gtilde} u - phi^{-(n+2k)/(n-2k)} P_k^g (phi u)| at x, where
/// gtilde = phi^{4/(n-2k)} e^{2f} eucl. Converges to zero at the stencil
/// order as h -> 0. Throws on nonpositive phi at x.
double covariance_residual(int k, const ScalarField& f, const ScalarField& phi,
                           const ScalarField& u, const Vec& x, int n,
                           double h = kDefaultStep);

/// Difference between P_2 and its degree-structure truncation
/// Delta^2 + 2T + (n/2) J Delta - (2 - n/2) Delta J, tested as a
/// multiplication operator: |R(u)/u(x) - R(v)/v(x)|.
double gjms_second_term_residual(const ScalarField& f, const ScalarField& u,
                                 const ScalarField& v, const Vec& x, int n,
                                 double h = kDefaultStep);

/// Panel layout for the distributional pairing: a dyadic onion of boxes
/// refining toward the origin, tensor Gauss-Legendre on each panel.
struct DiracGrid {
  double half_width = 1.0;  // the box is [-L, L]^n
  int levels = 6;           // dyadic shells; the innermost cube is dropped
  int gl_order = 5;         // nodes per axis per panel
  int split = 1;            // extra uniform split of each panel per axis
};

/// Three increasingly fine grids for the convergence study.
DiracGrid dirac_grid_preset(int n, int k, int stage, double half_width = 1.0);

/// Quadrature of integral r^{2k-n} Delta_0^k(test) dx over the grid box;
/// converges to c_{n,k} test(0) under refinement. The test field must be
/// compactly supported strictly inside the box.
double dirac_pairing(const DimPair& dims, const ScalarField& test,
                     const DiracGrid& grid, Exec exec = Exec::Parallel);

}  // namespace gjms
