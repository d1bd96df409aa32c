#pragma once

#include <functional>
#include <vector>

#include "gjms/green.hpp"
#include "gjms/parallel.hpp"
#include "gjms/space_forms.hpp"

namespace gjms {

/// Conformally flat end g = V(z)^{4/(n-2k)} eucl in inverted coordinates,
/// built from a Green factor with pole at the chart center. V tends to
/// v_inf = c_{n,k}^{-1} at infinity and its |z|^{2k-n} coefficient is the
/// chart-level mass constant.
struct BlowupProfile {
  DimPair dims;  // n and the k of the Green factor used to blow up
  std::function<double(const Vec&)> V;
  double v_inf = 0.0;
  double w0 = 0.0;      // chart weight at the pole, 2^{(2k-n)/2}
  double rho_min = 0.0; // V is only evaluable for |z| >= rho_min

  /// Normalized factor U = V/v_inf, so that U -> 1 at infinity.
  double U(const Vec& z) const { return V(z) / v_inf; }
};

/// Inverted-coordinate profile of the blow-up through a chart-transported
/// kernel with pole at the chart center: V(z) = G(0, z/|z|^2) |z|^{2k-n}.
BlowupProfile blowup_profile(const GreenKernel& chart_kernel,
                             const DimPair& dims, double rho_min);

/// Profile of the blow-up of the quotient by `group` at the class of xi.
BlowupProfile space_form_blowup(const SpaceFormGroup& group,
                                const SpherePoint& xi, const DimPair& dims);

/// Knobs for the flux integrals.
struct FluxOptions {
  int polar_nodes = 24;
  int azimuthal_nodes = 48;
  double fd_step_rel = 2e-3;  // FD step as a fraction of the radius
};

/// Per-radius fluxes and the normalization chain, for reporting.
struct FluxDiagnostics {
  std::vector<double> radii;
  std::vector<double> flux;    // flux of the U-normalized metric
  double flux_limit = 0.0;     // Richardson limit of the above
  double gbar_value = 0.0;     // mass of (c G)^{4/(n-2k)} g (pre-rescaling)
  double adm_over_16pi = 0.0;  // k=1 only: conventional ADM normalization
};

std::vector<double> default_flux_radii();

/// ADM flux integral (k = 1): lim over |z|=R of (d_i g_ij - d_j g_ii) dsigma^j
/// for the unit-normalized profile, Richardson-extrapolated in 1/R, then
/// rescaled to the mass of the blow-up of the round quotient metric.
MassReport adm_integral(const BlowupProfile& profile,
                        const std::vector<double>& radii,
                        const FluxOptions& opts = {},
                        Exec exec = Exec::Parallel,
                        FluxDiagnostics* diag = nullptr);

/// Mass of order two: m_2 = integral of Delta Scal, computed as the flux
/// -surface integral of the normal derivative of Scal, with Scal from the
/// closed conformal law on W = U^{(n-2)/(n-2k)}. Accepts profiles blown up
/// through k = 1 or k = 2 Green factors (n >= 5).
MassReport mk_surface_integral(const BlowupProfile& profile,
                               const std::vector<double>& radii,
                               const FluxOptions& opts = {},
                               Exec exec = Exec::Parallel,
                               FluxDiagnostics* diag = nullptr);

/// Exact scalar curvature of the profile metric at z (conformal law).
double profile_scalar_curvature(const BlowupProfile& profile, const Vec& z,
                                double fd_step);

struct Thm51Result {
  double mass = 0.0;        // closed-form mass A at the base point
  double mk = 0.0;          // asymptotic mass from the flux pipeline
  double residual = 0.0;    // A - (n-2k)/(4(n-1)) mk, relative to A
};

/// Cross-check of the closed-form mass against the asymptotic-mass identity
/// A = (n-2k)/(4(n-1)) m_k, both sides from independent pipelines.
Thm51Result thm51_check(const SpaceFormGroup& group, const DimPair& dims,
                        const std::vector<double>& radii,
                        const FluxOptions& opts = {},
                        Exec exec = Exec::Parallel);

}  // namespace gjms
