#pragma once

#include <cstdint>
#include <vector>

#include "gjms/parallel.hpp"
#include "gjms/report.hpp"
#include "gjms/vec.hpp"

namespace gjms {

// Verification suites shared by the CLI front end and the acceptance tests.
// Each returns one or more checks with their tolerances pinned.

/// Distance identity of Moebius transformations over seeded random
/// five-stage compositions; residual normalized by 1 + |x-y|^2.
VerificationReport suite_moebius(int trials, std::uint64_t seed,
                                 Exec exec = Exec::Parallel);

/// Distributional pairing against the flat-model constant for
/// (n,k) in {(3,1),(5,1),(5,2),(7,2)}: 0.1% at the finest grid, monotone
/// error decay across three refinement stages.
VerificationReport suite_dirac(std::uint64_t seed, Exec exec = Exec::Parallel);

/// Limit-extracted masses against closed forms on RP^3, L(3;1,1), L(7;1,2)
/// (k=1) and RP^5 (k=2), five seeded base points each, 1e-6 relative.
VerificationReport suite_mass_cross_validation(std::uint64_t seed);

/// Zero mass for the round sphere, strict positivity for every nontrivial
/// tested quotient.
VerificationReport suite_sphere_mass(std::uint64_t seed);

/// Covering identity residuals for {+-Id} in L(4;1,1) and the subgroup
/// chain of L(8;1,1), ten points each.
VerificationReport suite_covering(std::uint64_t seed);

/// Conformal covariance of P_1 and P_2 on n = 5: FD convergence order >= 3
/// under step halving and extrapolated residual < 1e-5 of the operator scale
/// at 20 seeded points.
VerificationReport suite_covariance(int points, std::uint64_t seed);

/// Zeroth-order discrepancy between the explicit fourth-order operator and
/// its degree-structure truncation: extrapolated residual < 1e-4 across ten
/// seeded (f, u, v) triples.
VerificationReport suite_prop21(int triples, std::uint64_t seed);

/// Mass identity A = (n-2k)/(4(n-1)) m_k on RP^3 (k=1, 1%) and RP^5 (k=2, 2%),
/// both sides from independent pipelines.
VerificationReport suite_thm51(Exec exec = Exec::Parallel);

/// Blow-up of RP^5 through the k=1 Green factor has vanishing m_2
/// (below 2% of the k=2 blow-up's m_2).
VerificationReport suite_mixed_blowup(Exec exec = Exec::Parallel);

/// Canonical-metric scalar curvature: sign change on L(7;1,2) over 2000
/// seeded points, constant 384 pi^2 on RP^3 to 1e-5.
VerificationReport suite_hj(int samples, std::uint64_t seed,
                            Exec exec = Exec::Parallel);

}  // namespace gjms
