#include "conecomm/sup_analysis.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <thread>

#include "conecomm/mode_formulas.hpp"

namespace conecomm {

namespace {

// Largest mode constant at one k; -inf when the evaluation sits too close to
// a vanishing denominator (tiny k next to the singular set), where the k->0
// candidate covers the supremum anyway.
double grid_value(const ConeParams& p, double k) {
  try {
    return beta_modes_real({p, k}).max_component();
  } catch (const DenominatorNearZero&) {
    return -std::numeric_limits<double>::infinity();
  }
}

template <typename F>
double golden_max(F f, double a, double b, double tol) {
  const double inv_phi = 0.5 * (std::sqrt(5.0) - 1.0);
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c), fd = f(d);
  while (b - a > tol) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
  }
  return 0.5 * (a + b);
}

void run_indexed(int n, int threads, const std::function<void(int)>& work) {
  int n_workers = threads > 0 ? threads : static_cast<int>(std::thread::hardware_concurrency());
  n_workers = std::max(1, std::min(n_workers, n));
  if (n_workers == 1) {
    for (int i = 0; i < n; ++i) work(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(n_workers);
  for (int t = 0; t < n_workers; ++t) {
    pool.emplace_back([=, &work] {
      for (int i = t; i < n; i += n_workers) work(i);
    });
  }
  for (auto& th : pool) th.join();
}

}  // namespace

SupResult beta_sup(const ConeParams& params, const SupConfig& cfg) {
  validate(params);
  SupResult out;
  if (params.alpha != 0.0 &&
      distance_to_singular(params.sigma, params.alpha) <= cfg.singular_tol) {
    out.attainment = Attainment::divergent;
    return out;
  }

  const ModeBetas limit0 = beta_limit_k0(params);
  if (limit0.status == BetaStatus::divergent) {
    out.attainment = Attainment::divergent;
    return out;
  }
  const double c_zero = limit0.max_component();
  const double c_inf = beta_limit_kinf();

  const double la = std::log(cfg.k_min);
  const double lb = std::log(cfg.k_max);
  const int n = cfg.grid_points;
  double best = -std::numeric_limits<double>::infinity();
  int best_i = 0;
  for (int i = 0; i < n; ++i) {
    const double k = std::exp(la + (lb - la) * i / (n - 1));
    const double v = grid_value(params, k);
    if (v > best) {
      best = v;
      best_i = i;
    }
  }
  const double step = (lb - la) / (n - 1);
  const double lo = la + step * std::max(0, best_i - 1);
  const double hi = la + step * std::min(n - 1, best_i + 1);
  const double l_star =
      golden_max([&](double lk) { return grid_value(params, std::exp(lk)); }, lo, hi,
                 cfg.refine_tol);
  const double k_star = std::exp(l_star);
  const double v_interior = std::max(best, grid_value(params, k_star));

  const double c_limit = std::max(c_zero, c_inf);
  if (v_interior > c_limit * (1.0 + cfg.tie_rel)) {
    out.beta = v_interior;
    out.k_star = k_star;
    out.attainment = Attainment::interior;
  } else {
    out.beta = c_limit;
    out.attainment = c_zero >= c_inf ? Attainment::at_k0_limit : Attainment::at_kinf_limit;
  }
  return out;
}

SingularityReport singular_alphas(double sigma, double lo, double hi) {
  validate({sigma, 0.0});
  if (!(lo <= hi)) throw InvalidParams("empty alpha range");
  SingularityReport report;
  const double pad = 1e-12;

  const long n1_lo = static_cast<long>(std::ceil(lo * sigma / pi - pad));
  const long n1_hi = static_cast<long>(std::floor(hi * sigma / pi + pad));
  for (long n = n1_lo; n <= n1_hi; ++n) {
    if (n == 0) continue;
    const double a = static_cast<double>(n) * pi / sigma;
    if (std::fabs(a) <= pad || std::fabs(a - 1.0) <= pad) continue;
    if (a < lo - pad || a > hi + pad) continue;
    report.entries.push_back({a, SingularCause::neumann, n});
  }
  const long n2_lo = static_cast<long>(std::ceil((1.0 - hi) * sigma / pi - pad));
  const long n2_hi = static_cast<long>(std::floor((1.0 - lo) * sigma / pi + pad));
  for (long n = n2_lo; n <= n2_hi; ++n) {
    if (n == 0) continue;
    const double a = 1.0 - static_cast<double>(n) * pi / sigma;
    if (std::fabs(a) <= pad || std::fabs(a - 1.0) <= pad) continue;
    if (a < lo - pad || a > hi + pad) continue;
    report.entries.push_back({a, SingularCause::resonance, n});
  }
  std::sort(report.entries.begin(), report.entries.end(),
            [](const SingularEntry& x, const SingularEntry& y) {
              if (x.alpha != y.alpha) return x.alpha < y.alpha;
              return x.cause < y.cause;
            });
  return report;
}

double critical_sigma(double tol) {
  if (!(tol > 0.0)) throw InvalidParams("tol must be positive");
  // f(sigma) = sigma*cot(sigma) - 1 falls from +inf to -1 on (pi, 1.5*pi).
  auto f = [](double s) { return s * std::cos(s) / std::sin(s) - 1.0; };
  double a = pi * (1.0 + 1e-9);
  double b = 1.5 * pi;
  double fa = f(a);
  for (int i = 0; i < 200; ++i) {
    const double m = 0.5 * (a + b);
    const double fm = f(m);
    if (std::fabs(fm) < tol) return m;
    if ((fa > 0.0) == (fm > 0.0)) {
      a = m;
      fa = fm;
    } else {
      b = m;
    }
  }
  return 0.5 * (a + b);
}

std::vector<ScanRow> alpha_scan(double sigma, const std::vector<double>& alphas,
                                const SupConfig& cfg) {
  validate({sigma, 0.0});
  double step = std::numeric_limits<double>::infinity();
  for (size_t i = 1; i < alphas.size(); ++i) {
    const double d = std::fabs(alphas[i] - alphas[i - 1]);
    if (d > 0.0) step = std::min(step, d);
  }
  const double snap = std::isfinite(step) ? std::max(0.5 * step, cfg.singular_tol)
                                          : cfg.singular_tol;

  std::vector<ScanRow> rows(alphas.size());
  run_indexed(static_cast<int>(alphas.size()), cfg.scan_threads, [&](int i) {
    ScanRow& row = rows[i];
    row.sigma = sigma;
    row.alpha = alphas[i];
    if (std::fabs(row.alpha - 1.0) <= 1e-12) {
      row.status = RowStatus::excluded;
      return;
    }
    if (row.alpha != 0.0 && distance_to_singular(sigma, row.alpha) <= snap) {
      row.status = RowStatus::divergent;
      return;
    }
    const SupResult sup = beta_sup({sigma, row.alpha}, cfg);
    if (sup.attainment == Attainment::divergent) {
      row.status = RowStatus::divergent;
      return;
    }
    row.beta = sup.beta;
    row.log10_beta = std::log10(sup.beta);
    row.k_star = sup.k_star;
    switch (sup.attainment) {
      case Attainment::interior: row.status = RowStatus::interior; break;
      case Attainment::at_k0_limit: row.status = RowStatus::at_k0_limit; break;
      default: row.status = RowStatus::at_kinf_limit; break;
    }
  });
  return rows;
}

SmallAlphaClass classify_small_alpha(double sigma, const SupConfig& cfg) {
  validate({sigma, 0.0});
  if (std::fabs(sigma / pi - 1.0) <= 1e-12) {
    throw InvalidParams("classification is defined for sigma != pi");
  }
  auto window_min = [&](double side) {
    double lowest = std::numeric_limits<double>::infinity();
    for (int i = 1; i <= cfg.classify_points; ++i) {
      const double alpha = side * cfg.classify_window * i / cfg.classify_points;
      const SupResult sup = beta_sup({sigma, alpha}, cfg);
      if (sup.attainment == Attainment::divergent) continue;
      lowest = std::min(lowest, sup.beta);
    }
    return lowest;
  };
  if (window_min(+1.0) < 1.0 - cfg.classify_margin) return SmallAlphaClass::improves_right;
  if (window_min(-1.0) < 1.0 - cfg.classify_margin) return SmallAlphaClass::improves_left;
  return SmallAlphaClass::no_improvement;
}

const char* to_string(Attainment a) {
  switch (a) {
    case Attainment::interior: return "interior";
    case Attainment::at_k0_limit: return "at_k0_limit";
    case Attainment::at_kinf_limit: return "at_kinf_limit";
    default: return "divergent";
  }
}

const char* to_string(RowStatus s) {
  switch (s) {
    case RowStatus::interior: return "interior";
    case RowStatus::at_k0_limit: return "at_k0_limit";
    case RowStatus::at_kinf_limit: return "at_kinf_limit";
    case RowStatus::divergent: return "divergent";
    default: return "excluded";
  }
}

}  // namespace conecomm
