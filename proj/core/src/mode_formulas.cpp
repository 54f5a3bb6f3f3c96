#include "conecomm/mode_formulas.hpp"

#include <cmath>

namespace conecomm {

namespace {

// Component sign placements: the plus component (boundary amplitudes (1,1))
// takes s = -1 in the quotient/real forms, the minus component s = +1.
constexpr double kSignPlus = -1.0;
constexpr double kSignMinus = +1.0;

double sq(double x) { return x * x; }

void require_finite_k(double k) {
  if (!std::isfinite(k)) throw InvalidParams("k must be finite");
}

double quotient_component(double sigma, double alpha, double k, double s) {
  const double decay = std::exp(-k * sigma);
  const Complex z1 = std::polar(decay, (2.0 - alpha) * sigma);
  const Complex z2 = std::polar(decay, alpha * sigma);
  const Complex z3 = std::polar(sq(decay), 2.0 * (1.0 - alpha) * sigma);

  const Complex den1 = 1.0 + s * z2;
  const Complex den2 = 1.0 - z3;
  if (std::abs(den1) < eps_sing || std::abs(den2) < eps_sing) {
    throw DenominatorNearZero("quotient denominator within eps_sing of zero");
  }
  const Complex num = Complex(1.0 - alpha, k) * (1.0 + s * z1);
  const double pref = (k * k + alpha * alpha) * (-std::expm1(-2.0 * k * sigma)) /
                      (2.0 * k * k * (1.0 - alpha));
  return pref * std::real(num / (den1 * den2));
}

double real_component(double sigma, double alpha, double k, double s) {
  const double ka = std::fabs(k);
  const double E = std::exp(-ka * sigma);
  const double em1 = -std::expm1(-ka * sigma);        // 1 - E
  const double em2 = -std::expm1(-2.0 * ka * sigma);  // 1 - E^2
  const double c1 = 0.5 * (1.0 + E * E);
  const double kk = k * k + alpha * alpha;

  // Half-angle pieces keep every near-cancelling combination a sum of
  // nonnegative terms.
  const double ha = 0.5 * alpha * sigma;
  const double hb = 0.5 * (2.0 - alpha) * sigma;
  const double h1 = (s < 0.0) ? sq(std::sin(ha)) : sq(std::cos(ha));
  const double hC = (s < 0.0) ? sq(std::sin(ha)) + sq(std::sin(hb))
                              : sq(std::cos(ha)) + sq(std::cos(hb));

  const double d1 = 0.5 * sq(em1) + 2.0 * E * h1;
  const double d2 = 0.5 * sq(em2) + 2.0 * sq(E) * sq(std::sin((1.0 - alpha) * sigma));
  if (d1 < eps_sing || d2 < eps_sing) {
    throw DenominatorNearZero("hyperbolic denominator within eps_sing of zero");
  }

  const double psi1 = kk * 0.5 * sq(em2) * (0.5 * sq(em1) + E * hC);
  const double psi2 = (ka * kk / (1.0 - alpha)) * 0.5 * em2 * E *
                      (E * std::sin(2.0 * (1.0 - alpha) * sigma) +
                       s * c1 * (std::sin((2.0 - alpha) * sigma) - std::sin(alpha * sigma)));
  return (psi1 - psi2) / (2.0 * k * k * d1 * d2);
}

double limit_k0_component(double sigma, double alpha, double s) {
  const double ha = 0.5 * alpha * sigma;
  const double h1 = (s < 0.0) ? sq(std::sin(ha)) : sq(std::cos(ha));
  const double den = 8.0 * h1 * sq(std::sin((1.0 - alpha) * sigma));
  const double psi3 =
      2.0 * sq(sigma) +
      s * sq(sigma) * (std::cos(alpha * sigma) + std::cos((2.0 - alpha) * sigma)) -
      sigma / (1.0 - alpha) *
          (std::sin(2.0 * (1.0 - alpha) * sigma) +
           s * (std::sin((2.0 - alpha) * sigma) - std::sin(alpha * sigma)));
  return alpha * alpha * psi3 / den;
}

}  // namespace

void validate(const ConeParams& p) {
  if (!std::isfinite(p.sigma) || !(p.sigma > 0.0) || !(p.sigma < 2.0 * pi)) {
    throw InvalidParams("sigma must lie in (0, 2*pi)");
  }
  if (!std::isfinite(p.alpha) || p.alpha == 1.0) {
    throw InvalidParams("alpha must be finite and != 1");
  }
}

Complex omega(const ModePoint& mp) {
  validate(mp.params);
  require_finite_k(mp.k);
  return std::polar(std::exp(-mp.k * mp.sigma()), -mp.alpha() * mp.sigma());
}

ModeBetas beta_modes_complex(const ModePoint& mp) {
  validate(mp.params);
  require_finite_k(mp.k);
  if (!(mp.k > 0.0)) throw InvalidParams("beta_modes_complex requires k > 0");
  ModeBetas out;
  out.plus = quotient_component(mp.sigma(), mp.alpha(), mp.k, kSignPlus);
  out.minus = quotient_component(mp.sigma(), mp.alpha(), mp.k, kSignMinus);
  out.status = BetaStatus::finite;
  return out;
}

ModeBetas beta_modes_real(const ModePoint& mp) {
  validate(mp.params);
  require_finite_k(mp.k);
  if (mp.k == 0.0) throw InvalidParams("beta_modes_real requires k != 0");
  ModeBetas out;
  out.plus = real_component(mp.sigma(), mp.alpha(), mp.k, kSignPlus);
  out.minus = real_component(mp.sigma(), mp.alpha(), mp.k, kSignMinus);
  out.status = BetaStatus::finite;
  return out;
}

ModeBetas beta_modes_alpha0(double sigma, double k) {
  validate({sigma, 0.0});
  require_finite_k(k);
  if (k == 0.0) throw InvalidParams("beta_modes_alpha0 requires k != 0");
  const double ka = std::fabs(k);
  const double E = std::exp(-ka * sigma);
  const double em1 = -std::expm1(-ka * sigma);
  const double s1 = 0.5 * (-std::expm1(-2.0 * ka * sigma));
  const double c1 = 0.5 * (1.0 + E * E);
  const double den = (0.5 * sq(em1) + 2.0 * E * sq(std::sin(0.5 * sigma))) *
                     (0.5 * sq(em1) + 2.0 * E * sq(std::cos(0.5 * sigma)));
  const double cross = E * (c1 * sq(std::sin(sigma)) +
                            ka * std::sin(sigma) * std::cos(sigma) * s1);
  ModeBetas out;
  out.plus = (den + cross) / (2.0 * den);
  out.minus = (den - cross) / (2.0 * den);
  out.status = BetaStatus::finite;
  return out;
}

ModeBetas beta_limit_k0(const ConeParams& params) {
  validate(params);
  ModeBetas out;
  if (params.alpha == 0.0) {
    const bool half_space = std::fabs(params.sigma / pi - 1.0) <= 1e-12;
    out.plus = half_space ? 0.5 : 1.0;
    out.minus = half_space ? 0.5 : 0.0;
    out.status = BetaStatus::finite;
    return out;
  }
  if (distance_to_singular(params.sigma, params.alpha) <= 1e-6) {
    out.status = BetaStatus::divergent;
    return out;
  }
  out.plus = limit_k0_component(params.sigma, params.alpha, kSignPlus);
  out.minus = limit_k0_component(params.sigma, params.alpha, kSignMinus);
  out.status = BetaStatus::finite;
  return out;
}

double beta_limit_kinf() { return 0.5; }

double dbeta_plus_dalpha_at0(double sigma) {
  validate({sigma, 0.0});
  const double s = std::sin(sigma);
  if (std::fabs(s) < eps_sing) throw SigmaOnCotPole("sigma too close to a cot pole");
  return sigma * std::cos(sigma) / s - 1.0;
}

double distance_to_singular(double sigma, double alpha) {
  double best = std::numeric_limits<double>::infinity();
  // alpha*sigma = n*pi, n != 0, excluding the alpha = 1 coincidence
  const double t = alpha * sigma / pi;
  for (long n = std::lround(t) - 1; n <= std::lround(t) + 1; ++n) {
    if (n == 0) continue;
    const double a = static_cast<double>(n) * pi / sigma;
    if (std::fabs(a - 1.0) <= 1e-12) continue;
    best = std::min(best, std::fabs(alpha - a));
  }
  // (1-alpha)*sigma = n*pi, n != 0, excluding the alpha = 0 coincidence
  const double u = (1.0 - alpha) * sigma / pi;
  for (long n = std::lround(u) - 1; n <= std::lround(u) + 1; ++n) {
    if (n == 0) continue;
    const double a = 1.0 - static_cast<double>(n) * pi / sigma;
    if (std::fabs(a) <= 1e-12) continue;
    best = std::min(best, std::fabs(alpha - a));
  }
  return best;
}

}  // namespace conecomm
