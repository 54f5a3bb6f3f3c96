#pragma once

#include "conecomm/types.hpp"

// Closed-form evaluation of the per-mode constants beta_{+,k}, beta_{-,k}
// on the cone, in two algebraically independent arrangements (a complex
// quotient and a real hyperbolic/trigonometric rewrite), together with the
// alpha = 0 specialization and the k -> 0 / k -> infinity limits.

namespace conecomm {

// omega = e^{-(k + i alpha) sigma}; |omega| = e^{-k sigma}.
Complex omega(const ModePoint& mp);

// Complex-quotient form.  Requires k > 0.  Throws DenominatorNearZero when a
// quotient denominator has modulus below eps_sing (proximity to the blowup
// set at small k).
ModeBetas beta_modes_complex(const ModePoint& mp);

// Real rewrite of the same constants; even in k, defined for k != 0.
// Evaluated with e^{-|k| sigma} factored out of all hyperbolics so that no
// intermediate overflows and the near-cancelling combinations are formed
// from expm1/sin^2 pieces at full relative accuracy.
ModeBetas beta_modes_real(const ModePoint& mp);

// Specialization at alpha = 0 (a sigma-only expression).  k != 0.
ModeBetas beta_modes_alpha0(double sigma, double k);

// Limit k -> 0.  Reports status = divergent on (and within 1e-6 of) the
// singular set { alpha*sigma = n*pi } U { (1-alpha)*sigma = n*pi }, n != 0,
// alpha not in {0, 1}.  At alpha = 0 the limit is (1, 0) for sigma != pi and
// (1/2, 1/2) at sigma = pi.
ModeBetas beta_limit_k0(const ConeParams& params);

// Limit k -> infinity (both components).
double beta_limit_kinf();

// d/d alpha of the plus-component of beta_limit_k0 at alpha = 0:
// sigma*cot(sigma) - 1.  Throws SigmaOnCotPole when |sin sigma| < eps_sing.
double dbeta_plus_dalpha_at0(double sigma);

// Smallest |alpha - a| over the singular set of beta_limit_k0 at this sigma.
double distance_to_singular(double sigma, double alpha);

}  // namespace conecomm
