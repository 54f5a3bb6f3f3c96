#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "conecomm/types.hpp"

// Seeded cross-path verification: the complex quotient form, the real
// hyperbolic form, the explicit coefficient route, and the brute-force
// Rayleigh oracle must all agree on random non-singular parameters.

namespace conecomm {

struct VerifyCase {
  double sigma, alpha, k;
};

// Deterministic sampler (identical output on every platform for a fixed
// seed).  Rejects points within `min_singular_dist` of the singular alphas.
std::vector<VerifyCase> sample_cases(std::uint64_t seed, int n, double k_lo,
                                     double k_hi, double max_k_sigma,
                                     double min_singular_dist);

// Worst relative disagreement between the quotient and hyperbolic forms,
// componentwise, over the cases.
double max_cross_form_gap(const std::vector<VerifyCase>& cases);

// Worst relative disagreement between the coefficient-route constants and
// the hyperbolic form, per parity.
double max_path_gap(const std::vector<VerifyCase>& cases);

// Worst scaled disagreement |oracle - max component| / (1 + value).
double max_oracle_gap(const std::vector<VerifyCase>& cases, int n_modes = 48);

struct VerifyReport {
  std::uint64_t seed = 0;
  int cases = 0;
  double cross_form_gap = 0.0;
  double path_gap = 0.0;
  double oracle_gap = 0.0;
  bool pass = false;
};

// Thresholds: 1e-9, 1e-9, 1e-6.
VerifyReport run_verify(std::uint64_t seed, int cases);

std::string render_report(const VerifyReport& report);

}  // namespace conecomm
