#include "conecomm/extremal_solver.hpp"

#include <cmath>

#include "conecomm/mode_formulas.hpp"

namespace conecomm {

namespace {

constexpr Complex kI{0.0, 1.0};

struct ModeContext {
  double sigma, alpha, k;
  Complex kh;    // k + i alpha
  Complex khb;   // conj(kh)
  Complex om;    // e^{-kh sigma}
  Complex omb;   // conj(om)
  Complex e2;    // e^{2 i sigma}
  Complex D;     // 1 - om^2 e^{2 i sigma}
  Complex Db;    // conj(D)
};

ModeContext make_context(const ModePoint& mp) {
  ModeContext c;
  c.sigma = mp.sigma();
  c.alpha = mp.alpha();
  c.k = mp.k;
  c.kh = Complex(c.k, c.alpha);
  c.khb = std::conj(c.kh);
  c.om = omega(mp);
  c.omb = std::conj(c.om);
  c.e2 = std::polar(1.0, 2.0 * c.sigma);
  c.D = 1.0 - c.om * c.om * c.e2;
  c.Db = std::conj(c.D);
  return c;
}

// Shared prefactor of the coefficient solutions; carries the parity through
// the (1 +/- conj(om)) factor.
Complex phi_factor(const ModeContext& c, double pm) {
  const double kk = c.k * c.k + c.alpha * c.alpha;
  const double decay2 = 1.0 - std::norm(c.om);
  const Complex neumann = 1.0 - c.omb * c.omb;
  if (std::abs(neumann) <= eps_sing) {
    throw NeumannDegenerate("1 - omega^2 within eps_sing of zero");
  }
  return kk * decay2 * (1.0 + pm * c.omb) /
         (8.0 * kI * c.k * c.k * (1.0 - c.alpha) * neumann);
}

std::array<Complex, 4> scaled_coefficients(const ModeContext& c, Parity parity) {
  if (std::abs(c.D) <= eps_sing) {
    throw ResonantMode("1 - omega^2 e^{2 i sigma} within eps_sing of zero");
  }
  const double pm = parity == Parity::plus ? +1.0 : -1.0;
  const Complex phi = phi_factor(c, pm);
  std::array<Complex, 4> u;
  if (parity == Parity::plus) {
    u[0] = -phi * (1.0 - c.om * c.e2) / c.D;
    u[1] = -phi * (1.0 - c.om) / c.D;
    u[2] = phi * (1.0 - c.omb / c.e2) / c.Db;
    u[3] = phi * (1.0 - c.omb) / c.Db;
  } else {
    u[0] = -phi * (1.0 + c.om * c.e2) / c.D;
    u[1] = phi * (1.0 + c.om) / c.D;
    u[2] = -phi * (1.0 + c.omb / c.e2) / c.Db;
    u[3] = phi * (1.0 + c.omb) / c.Db;
  }
  return u;
}

// Endpoint and natural-boundary residuals; guards coefficient transcription.
void check_residuals(const ModeContext& c, Parity parity,
                     const std::array<Complex, 4>& u) {
  const double pm = parity == Parity::plus ? +1.0 : -1.0;
  double scale = 0.0;
  for (const auto& v : u) scale = std::max(scale, std::abs(v));
  const Complex r_end_s = u[0] + u[1] * c.om * c.e2 + u[2] * c.omb + u[3];
  const Complex r_end_0 = u[0] * c.om + u[1] + u[2] + u[3] * c.omb / c.e2;

  const double kk = c.k * c.k + c.alpha * c.alpha;
  const Complex C = (kk / c.k) * (1.0 - std::norm(c.om)) / (1.0 - c.omb * c.omb);
  const Complex lhs_s = 8.0 * (1.0 - c.alpha) * kI * c.k * (u[2] * c.omb + u[3]);
  const Complex lhs_0 = 8.0 * (1.0 - c.alpha) * kI * c.k * (u[2] + u[3] * c.omb / c.e2);
  const Complex r_nat_s = lhs_s - C * (1.0 + pm * c.omb);
  const Complex r_nat_0 = lhs_0 - C * (pm + c.omb);

  const double tol = 1e-8 * (1.0 + scale + std::abs(C));
  if (std::abs(r_end_s) > tol || std::abs(r_end_0) > tol ||
      std::abs(r_nat_s) > tol || std::abs(r_nat_0) > tol) {
    throw Error("extremal coefficients violate the boundary relations");
  }
}

Complex beta_functional(const ModeContext& c, Parity parity,
                        const std::array<Complex, 4>& u) {
  if (parity == Parity::plus) {
    const Complex num = u[0] * c.kh * (1.0 - c.om) +
                        u[1] * (2.0 * kI - c.kh) * (c.om * c.e2 - 1.0) +
                        u[2] * c.khb * (1.0 - c.omb) +
                        u[3] * (2.0 * kI + c.khb) * (1.0 - c.omb / c.e2);
    return num / (1.0 - c.om);
  }
  const Complex num = u[0] * c.kh * (1.0 + c.om) -
                      u[1] * (c.kh - 2.0 * kI) * (1.0 + c.om * c.e2) -
                      u[2] * c.khb * (1.0 + c.omb) +
                      u[3] * (c.khb + 2.0 * kI) * (1.0 + c.omb / c.e2);
  return num / (1.0 + c.om);
}

}  // namespace

ExtremalSolution solve_coefficients(const ModePoint& mp, Parity parity) {
  validate(mp.params);
  if (!(mp.k > 0.0)) throw InvalidParams("solve_coefficients requires k > 0");
  const ModeContext c = make_context(mp);
  ExtremalSolution sol;
  sol.a = scaled_coefficients(c, parity);
  sol.parity = parity;
  sol.mp = mp;
  check_residuals(c, parity, sol.a);
  sol.beta = beta_from_coefficients(sol);
  return sol;
}

double beta_from_coefficients(const ExtremalSolution& sol) {
  const ModeContext c = make_context(sol.mp);
  const Complex val = beta_functional(c, sol.parity, sol.a);
  if (std::abs(std::imag(val)) >= 1e-10 * (1.0 + std::abs(val))) {
    throw NonRealResult("beta functional has a non-real residue");
  }
  return std::real(val);
}

BoundaryAmplitudes amplitudes_from_boundary(Complex g0, Complex gsigma, Complex om) {
  const Complex den = 1.0 - om * om;
  if (std::abs(den) <= eps_sing) {
    throw NeumannDegenerate("1 - omega^2 within eps_sing of zero");
  }
  BoundaryAmplitudes amps;
  amps.plus = (gsigma - om * g0) / den;
  amps.minus = (om * gsigma - g0) / den;
  return amps;
}

std::pair<Complex, Complex> pressure_mode(const BoundaryAmplitudes& amps,
                                          const ModePoint& mp, double theta) {
  validate(mp.params);
  if (!(theta >= 0.0) || !(theta <= mp.sigma())) {
    throw InvalidParams("theta must lie in [0, sigma]");
  }
  const Complex kh(mp.k, mp.alpha());
  const Complex up = amps.plus * std::exp(kh * (theta - mp.sigma()));
  const Complex dn = amps.minus * std::exp(-kh * theta);
  return {up + dn, kh * (up - dn)};
}

double ipk_value(const BoundaryAmplitudes& amps, const ModePoint& mp) {
  validate(mp.params);
  if (!(mp.k > 0.0)) throw InvalidParams("ipk_value requires k > 0");
  const double kk = mp.k * mp.k + mp.alpha() * mp.alpha();
  const double decay2 = -std::expm1(-2.0 * mp.k * mp.sigma());
  return (kk / mp.k) * (std::norm(amps.plus) + std::norm(amps.minus)) * decay2;
}

Complex y1_value(const ExtremalSolution& sol, double theta) {
  const Complex kh(sol.mp.k, sol.mp.alpha());
  const Complex khb = std::conj(kh);
  const double s = sol.mp.sigma();
  return sol.a[0] * std::exp(kh * (theta - s)) +
         sol.a[1] * std::exp(-(kh - 2.0 * Complex(0, 1)) * theta) +
         sol.a[2] * std::exp(-khb * theta) +
         sol.a[3] * std::exp((khb + 2.0 * Complex(0, 1)) * (theta - s));
}

Complex y1_derivative(const ExtremalSolution& sol, double theta) {
  const Complex kh(sol.mp.k, sol.mp.alpha());
  const Complex khb = std::conj(kh);
  const double s = sol.mp.sigma();
  const Complex i2(0.0, 2.0);
  return sol.a[0] * kh * std::exp(kh * (theta - s)) -
         sol.a[1] * (kh - i2) * std::exp(-(kh - i2) * theta) -
         sol.a[2] * khb * std::exp(-khb * theta) +
         sol.a[3] * (khb + i2) * std::exp((khb + i2) * (theta - s));
}

}  // namespace conecomm
