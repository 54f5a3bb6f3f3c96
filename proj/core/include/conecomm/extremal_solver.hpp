#pragma once

#include <array>
#include <utility>

#include "conecomm/types.hpp"

// Explicit solution of the angular variational problem at one mode: the four
// exponential coefficients of the maximizing profile, the boundary-amplitude
// inversion, the mode pressure profile, and the constant they imply.  This is
// a second evaluation path, structurally independent of the closed forms in
// mode_formulas.

namespace conecomm {

// plus <=> boundary amplitudes (1, 1); minus <=> (1, -1).
enum class Parity { plus, minus };

struct BoundaryAmplitudes {
  Complex plus{0.0, 0.0};
  Complex minus{0.0, 0.0};
};

// Coefficients of the maximizer profile
//   y1(t) = a1 e^{kh(t-s)} + a2 e^{-(kh-2i)t} + a3 e^{-conj(kh) t}
//         + a4 e^{(conj(kh)+2i)(t-s)},   kh = k + i alpha,  s = sigma,
// stored in the scaling where the natural boundary relations hold with the
// constant absorbed (the profile equals beta times the unit-amplitude
// maximizer; every homogeneous invariant is scaling-free).
struct ExtremalSolution {
  std::array<Complex, 4> a{};
  Parity parity = Parity::plus;
  double beta = 0.0;
  ModePoint mp;
};

// Solve for the coefficients at one mode point.  Throws ResonantMode when
// |1 - omega^2 e^{2 i sigma}| < eps_sing and NeumannDegenerate when
// |1 - conj(omega)^2| < eps_sing.
ExtremalSolution solve_coefficients(const ModePoint& mp, Parity parity);

// The constant implied by the coefficients through the normalization
// functional; must come out real, else NonRealResult.
double beta_from_coefficients(const ExtremalSolution& sol);

// Invert the 2x2 boundary system
//   amp_plus - amp_minus*om = g_sigma,  amp_plus*om - amp_minus = g0
// Throws NeumannDegenerate when |1 - om^2| <= eps_sing.
BoundaryAmplitudes amplitudes_from_boundary(Complex g0, Complex gsigma, Complex om);

// Mode pressure profile and its angular derivative at angle theta in [0, sigma]:
//   q(theta)  = amp_plus e^{kh (theta - sigma)} + amp_minus e^{-kh theta}.
std::pair<Complex, Complex> pressure_mode(const BoundaryAmplitudes& amps,
                                          const ModePoint& mp, double theta);

// Weighted pressure energy of one mode:
//   ((k^2 + alpha^2)/k) (|amp_plus|^2 + |amp_minus|^2)(1 - |omega|^2),  k > 0.
double ipk_value(const BoundaryAmplitudes& amps, const ModePoint& mp);

// Profile reconstruction helpers (used heavily by the test suite).
Complex y1_value(const ExtremalSolution& sol, double theta);
Complex y1_derivative(const ExtremalSolution& sol, double theta);

}  // namespace conecomm
