#pragma once

#include <optional>
#include <vector>

#include "conecomm/types.hpp"

// The supremum over k of the mode constants, the singular parameter set, the
// critical opening angle, and alpha-scans of the optimal constant.

namespace conecomm {

enum class Attainment { interior, at_k0_limit, at_kinf_limit, divergent };

struct SupResult {
  double beta = nan_value();  // NaN when divergent
  std::optional<double> k_star;
  Attainment attainment = Attainment::interior;
};

enum class SingularCause { neumann, resonance };

struct SingularEntry {
  double alpha = 0.0;
  SingularCause cause = SingularCause::neumann;
  long n = 0;
};

struct SingularityReport {
  std::vector<SingularEntry> entries;
};

enum class SmallAlphaClass { improves_right, improves_left, no_improvement };

struct SupConfig {
  double k_min = 1e-3;
  double k_max = 1e3;
  int grid_points = 240;
  double refine_tol = 1e-10;     // golden-section width in log k
  double singular_tol = 1e-6;   // alpha-distance short-circuit to divergent
  double tie_rel = 1e-9;        // interior must beat the limits by this margin
  double classify_window = 0.15;
  double classify_margin = 1e-4;
  int classify_points = 30;
  int scan_threads = 0;         // 0 = hardware concurrency
};

SupResult beta_sup(const ConeParams& params, const SupConfig& cfg = {});

// All singular alphas in [lo, hi]: alpha*sigma = n*pi (neumann) or
// (1-alpha)*sigma = n*pi (resonance), n != 0, alpha not in {0, 1};
// sorted ascending.
SingularityReport singular_alphas(double sigma, double lo, double hi);

// Root of sigma*cot(sigma) = 1 in (pi, 2*pi); |f(root)| < tol.
double critical_sigma(double tol);

enum class RowStatus { interior, at_k0_limit, at_kinf_limit, divergent, excluded };

struct ScanRow {
  double sigma = 0.0;
  double alpha = 0.0;
  double beta = nan_value();
  double log10_beta = nan_value();
  std::optional<double> k_star;
  RowStatus status = RowStatus::interior;
};

// One row per requested alpha, in input order.  Rows within half a grid step
// (or singular_tol) of a singular alpha are flagged divergent; alpha = 1 rows
// are flagged excluded.  Rows are computed concurrently and returned in
// deterministic input order.
std::vector<ScanRow> alpha_scan(double sigma, const std::vector<double>& alphas,
                                const SupConfig& cfg = {});

// Does beta drop below 1 for small alpha just right (alpha > 0) or just left
// (alpha < 0) of zero?  Right wins when both sides improve.
SmallAlphaClass classify_small_alpha(double sigma, const SupConfig& cfg = {});

const char* to_string(Attainment a);
const char* to_string(RowStatus s);

}  // namespace conecomm
