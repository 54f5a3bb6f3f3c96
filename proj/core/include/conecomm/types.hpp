#pragma once

#include <complex>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>

// Core domain types for the weighted commutator constants on a planar cone
// of opening sigma with radial weight r^alpha.

namespace conecomm {

using Complex = std::complex<double>;

inline constexpr double pi = 3.141592653589793238462643383279502884;

// A denominator whose modulus falls below this is treated as a genuine
// singularity rather than round-off.
inline constexpr double eps_sing = 1e-9;

// Below this |k| the mode formulas lose relative precision (0/0 structure at
// k = 0); callers wanting the k -> 0 value should use beta_limit_k0.
inline constexpr double k_small = 1e-6;

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InvalidParams : Error {
  using Error::Error;
};
struct DenominatorNearZero : Error {
  using Error::Error;
};
struct SigmaOnCotPole : Error {
  using Error::Error;
};
struct ResonantMode : Error {
  using Error::Error;
};
struct NonRealResult : Error {
  using Error::Error;
};
struct NeumannDegenerate : Error {
  using Error::Error;
};
struct EnergyFormSingular : Error {
  using Error::Error;
};
struct IoError : Error {
  using Error::Error;
};

// Cone opening angle (radians) and weight exponent.  Valid iff
// 0 < sigma < 2*pi and alpha != 1.
struct ConeParams {
  double sigma = 0.0;
  double alpha = 0.0;
};

void validate(const ConeParams& p);

// One point of the frequency-domain family: cone parameters plus the dual
// frequency k.  Operations state their own k-domain.
struct ModePoint {
  ConeParams params;
  double k = 0.0;

  double sigma() const { return params.sigma; }
  double alpha() const { return params.alpha; }
};

enum class BetaStatus { finite, divergent };

// The two per-mode constants at one k.  The first component ("plus")
// corresponds to the symmetric boundary-amplitude pair (1, 1), the second
// ("minus") to (1, -1).
struct ModeBetas {
  double plus = std::numeric_limits<double>::quiet_NaN();
  double minus = std::numeric_limits<double>::quiet_NaN();
  BetaStatus status = BetaStatus::finite;

  double max_component() const { return plus > minus ? plus : minus; }
};

inline double nan_value() { return std::numeric_limits<double>::quiet_NaN(); }

}  // namespace conecomm
