#include "conecomm/verify.hpp"

#include <cmath>

#include "conecomm/extremal_solver.hpp"
#include "conecomm/mode_formulas.hpp"
#include "conecomm/scan_io.hpp"
#include "conecomm/variational_oracle.hpp"

namespace conecomm {

namespace {

// splitmix64; keeps the sampled points identical across standard libraries.
struct Rng {
  std::uint64_t state;
  explicit Rng(std::uint64_t seed) : state(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
};

double rel_gap(double a, double b) { return std::fabs(a - b) / (1.0 + std::fabs(b)); }

}  // namespace

std::vector<VerifyCase> sample_cases(std::uint64_t seed, int n, double k_lo,
                                     double k_hi, double max_k_sigma,
                                     double min_singular_dist) {
  Rng rng(seed);
  std::vector<VerifyCase> cases;
  cases.reserve(n);
  const double llo = std::log(k_lo), lhi = std::log(k_hi);
  while (static_cast<int>(cases.size()) < n) {
    VerifyCase c;
    c.sigma = pi * (0.05 + 1.90 * rng.uniform());
    c.alpha = -1.0 + 2.0 * rng.uniform();
    c.k = std::exp(llo + (lhi - llo) * rng.uniform());
    if (std::fabs(1.0 - c.alpha) < 1e-3) continue;
    if (max_k_sigma > 0.0 && c.k * c.sigma > max_k_sigma) continue;
    if (distance_to_singular(c.sigma, c.alpha) <= min_singular_dist) continue;
    cases.push_back(c);
  }
  return cases;
}

double max_cross_form_gap(const std::vector<VerifyCase>& cases) {
  double worst = 0.0;
  for (const VerifyCase& c : cases) {
    const ModePoint mp{{c.sigma, c.alpha}, c.k};
    const ModeBetas quot = beta_modes_complex(mp);
    const ModeBetas hyp = beta_modes_real(mp);
    worst = std::max(worst, rel_gap(quot.plus, hyp.plus));
    worst = std::max(worst, rel_gap(quot.minus, hyp.minus));
  }
  return worst;
}

double max_path_gap(const std::vector<VerifyCase>& cases) {
  double worst = 0.0;
  for (const VerifyCase& c : cases) {
    const ModePoint mp{{c.sigma, c.alpha}, c.k};
    const ModeBetas hyp = beta_modes_real(mp);
    worst = std::max(worst, rel_gap(solve_coefficients(mp, Parity::plus).beta, hyp.plus));
    worst = std::max(worst, rel_gap(solve_coefficients(mp, Parity::minus).beta, hyp.minus));
  }
  return worst;
}

double max_oracle_gap(const std::vector<VerifyCase>& cases, int n_modes) {
  double worst = 0.0;
  for (const VerifyCase& c : cases) {
    const ModePoint mp{{c.sigma, c.alpha}, c.k};
    const double closed = beta_modes_real(mp).max_component();
    const double brute = oracle_beta(mp, n_modes);
    worst = std::max(worst, std::fabs(brute - closed) / (1.0 + std::fabs(closed)));
  }
  return worst;
}

VerifyReport run_verify(std::uint64_t seed, int cases) {
  VerifyReport rep;
  rep.seed = seed;
  rep.cases = cases;
  const auto formula_cases = sample_cases(seed, cases, 0.05, 50.0, 0.0, 1e-3);
  rep.cross_form_gap = max_cross_form_gap(formula_cases);
  rep.path_gap = max_path_gap(formula_cases);
  const auto oracle_cases = sample_cases(seed + 1, cases, 0.05, 20.0, 45.0, 5e-2);
  rep.oracle_gap = max_oracle_gap(oracle_cases);
  rep.pass = rep.cross_form_gap <= 1e-9 && rep.path_gap <= 1e-9 && rep.oracle_gap <= 1e-6;
  return rep;
}

std::string render_report(const VerifyReport& rep) {
  std::string out;
  out += "verification seed=" + std::to_string(rep.seed) +
         " cases=" + std::to_string(rep.cases) + "\n";
  out += "max cross-form gap: " + format_value(rep.cross_form_gap, 3) + " (tol 1e-09)\n";
  out += "max path gap:       " + format_value(rep.path_gap, 3) + " (tol 1e-09)\n";
  out += "max oracle gap:     " + format_value(rep.oracle_gap, 3) + " (tol 1e-06)\n";
  out += rep.pass ? "verify: PASS\n" : "verify: FAIL\n";
  return out;
}

}  // namespace conecomm
