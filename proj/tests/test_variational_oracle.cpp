#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <Eigen/Eigenvalues>
#include <cmath>
#include <vector>

#include "conecomm/extremal_solver.hpp"
#include "conecomm/mode_formulas.hpp"
#include "conecomm/variational_oracle.hpp"
#include "conecomm/verify.hpp"

using namespace conecomm;

namespace {

ModePoint mode(double sigma, double alpha, double k) { return {{sigma, alpha}, k}; }

// Reference evaluation of the basis functions and their derivatives at an
// arbitrary angle (independent of the tabulated values under test).
void reference_phi(double sigma, int m, double theta, double& f, double& df,
                   double& d2f) {
  const double x = 2.0 * theta / sigma - 1.0;
  std::vector<double> p(m + 1, 0.0), dp(m + 1, 0.0), d2p(m + 1, 0.0);
  for (int j = 0; j <= m; ++j) {
    if (j == 0) {
      p[0] = 1.0;
    } else if (j == 1) {
      p[1] = x;
      dp[1] = 1.0;
    } else {
      p[j] = ((2.0 * j - 1.0) * x * p[j - 1] - (j - 1.0) * p[j - 2]) / j;
      dp[j] = dp[j - 2] + (2.0 * j - 1.0) * p[j - 1];
      d2p[j] = d2p[j - 2] + (2.0 * j - 1.0) * dp[j - 1];
    }
  }
  const double w = theta * (sigma - theta), dw = sigma - 2.0 * theta, jac = 2.0 / sigma;
  f = w * p[m];
  df = dw * p[m] + w * dp[m] * jac;
  d2f = -2.0 * p[m] + 2.0 * dw * dp[m] * jac + w * d2p[m] * jac * jac;
}

}  // namespace

TEST_CASE("basis: values, midpoint, and quadrature exactness") {
  const double sigma = pi;
  const AngularBasis b = build_basis(sigma, 8);
  REQUIRE(b.nodes.size() == 14);

  double f, df, d2f;
  reference_phi(sigma, 0, 0.5 * sigma, f, df, d2f);
  CHECK(std::fabs(f - pi * pi / 4.0) < 1e-14);
  reference_phi(sigma, 1, 0.5 * sigma, f, df, d2f);
  CHECK(std::fabs(f) < 1e-14);

  for (int m : {0, 3, 7}) {
    for (int q : {0, 5, 13}) {
      reference_phi(sigma, m, b.nodes[q], f, df, d2f);
      CHECK(std::fabs(b.phi(m, q) - f) <= 1e-12 * (1.0 + std::fabs(f)));
      CHECK(std::fabs(b.dphi(m, q) - df) <= 1e-11 * (1.0 + std::fabs(df)));
      CHECK(std::fabs(b.d2phi(m, q) - d2f) <= 1e-10 * (1.0 + std::fabs(d2f)));
    }
  }

  const AngularBasis unit = build_basis(1.0, 8);
  double weight_integral = 0.0;
  for (size_t q = 0; q < unit.nodes.size(); ++q) {
    weight_integral += unit.weights[q] * unit.nodes[q] * (1.0 - unit.nodes[q]);
  }
  CHECK(std::fabs(weight_integral - 1.0 / 6.0) < 1e-15);

  // degree 2N+6 monomial integrates exactly
  const int deg = 2 * 8 + 6;
  double mono = 0.0;
  for (size_t q = 0; q < unit.nodes.size(); ++q) {
    mono += unit.weights[q] * std::pow(unit.nodes[q], deg);
  }
  CHECK(std::fabs(mono - 1.0 / (deg + 1)) <= 1e-14);

  CHECK_THROWS_AS(build_basis(sigma, 3), InvalidParams);
}

TEST_CASE("assembled forms: rank, definiteness, quadrature cross-check") {
  const ModePoint mp = mode(0.85 * pi, 0.1, 1.0);
  const AngularBasis basis = build_basis(mp.sigma(), 16);
  const QuadraticFormPair forms = assemble_forms(mp, basis);
  const int n2 = 32;
  REQUIRE(forms.A.rows() == n2);

  CHECK((forms.B - forms.B.adjoint()).norm() <= 1e-12 * forms.B.norm());
  CHECK((forms.A - forms.A.adjoint()).norm() <= 1e-12 * forms.A.norm());

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(forms.A);
  const auto& ev = eig.eigenvalues();
  const double scale = ev(n2 - 1);
  CHECK(ev(0) >= -1e-12 * scale);           // positive semidefinite
  CHECK(ev(n2 - 3) <= 1e-10 * scale);       // rank at most two

  // boundary map columns carry the exact endpoint derivatives
  for (int m = 0; m < 16; ++m) {
    const double sign = (m % 2 == 0) ? 1.0 : -1.0;
    CHECK(forms.boundary_map(0, m) == Complex(mp.sigma() * sign, 0.0));
    CHECK(forms.boundary_map(1, m) == Complex(-mp.sigma(), 0.0));
  }

  // energy of a single basis function vs dense Simpson quadrature
  const int m_probe = 3;
  const Complex c0 = (Complex(0, 1) * mp.k + 1.0 - mp.alpha()) *
                         (Complex(0, 1) * mp.k + 1.0 - mp.alpha()) -
                     1.0;
  const int n = 20000;
  const double h = mp.sigma() / n;
  double integral = 0.0;
  for (int i = 0; i <= n; ++i) {
    double f, df, d2f;
    reference_phi(mp.sigma(), m_probe, i * h, f, df, d2f);
    const Complex lf = d2f - 2.0 * Complex(0, 1) * df + c0 * f;
    integral += std::norm(lf) * (i == 0 || i == n ? 1.0 : (i % 2 ? 4.0 : 2.0));
  }
  integral *= 2.0 * h / 3.0;
  const double form_value = std::real(forms.B(m_probe, m_probe));
  CHECK(std::fabs(form_value - integral) <= 1e-8 * integral);

  // the zero profile carries zero energy in both forms
  const Eigen::VectorXcd zero = Eigen::VectorXcd::Zero(n2);
  CHECK(std::real((zero.adjoint() * forms.A * zero).value()) == 0.0);
  CHECK(std::real((zero.adjoint() * forms.B * zero).value()) == 0.0);

  // c* A c equals the closed pressure energy of the induced amplitudes
  Eigen::VectorXcd c = Eigen::VectorXcd::Zero(n2);
  for (int i = 0; i < n2; ++i) c(i) = Complex(std::sin(1.0 + i), std::cos(2.0 + 0.5 * i));
  const Eigen::Vector2cd g = forms.boundary_map * c;
  const BoundaryAmplitudes amps = amplitudes_from_boundary(g(0), g(1), omega(mp));
  const double quad_form = std::real((c.adjoint() * forms.A * c).value());
  CHECK(std::fabs(quad_form - ipk_value(amps, mp)) <= 1e-10 * (1.0 + quad_form));
}

TEST_CASE("rayleigh solve: constructed pencils") {
  const int n = 12;
  QuadraticFormPair trivial;
  trivial.B = Eigen::MatrixXcd::Identity(n, n);
  trivial.A = Eigen::MatrixXcd::Zero(n, n);
  trivial.boundary_map = Eigen::MatrixXcd::Zero(2, n);
  trivial.amplitude_map = Eigen::MatrixXcd::Zero(2, n);
  const OracleResult zero = solve_rayleigh_max(trivial);
  CHECK(zero.lambda_max == 0.0);
  CHECK(zero.residual == 0.0);

  Eigen::VectorXcd f(n);
  for (int i = 0; i < n; ++i) f(i) = Complex(0.3 * i - 1.0, 0.1 * i);
  QuadraticFormPair rank1;
  rank1.B = Eigen::MatrixXcd::Identity(n, n);
  rank1.amplitude_map = Eigen::MatrixXcd::Zero(2, n);
  rank1.amplitude_map.row(0) = f.adjoint();
  rank1.A = rank1.amplitude_map.adjoint() * rank1.amplitude_map;
  rank1.boundary_map = rank1.amplitude_map;
  const OracleResult r1 = solve_rayleigh_max(rank1);
  CHECK(std::fabs(r1.lambda_max - f.squaredNorm()) <= 1e-12 * f.squaredNorm());
  CHECK(r1.residual <= 1e-8);

  QuadraticFormPair bad = rank1;
  bad.B = -Eigen::MatrixXcd::Identity(n, n);
  CHECK_THROWS_AS(solve_rayleigh_max(bad), EnergyFormSingular);
}

TEST_CASE("rayleigh solve: agreement with the closed forms") {
  const ModePoint mp = mode(0.5 * pi, 0.2, 1.0);
  const OracleResult res = solve_rayleigh_max(assemble_forms(mp, build_basis(mp.sigma(), 32)));
  const double closed = beta_modes_real(mp).max_component();
  CHECK(std::fabs(res.lambda_max - closed) <= 1e-7 * closed);
  CHECK(res.residual <= 1e-8);
}

TEST_CASE("oracle: reference points and convergence") {
  CHECK(std::fabs(oracle_beta(mode(pi, 0.0, 1.0), 24) - 0.5) <= 1e-7);

  const ModePoint mp = mode(1.2 * pi, -0.1, 0.8);
  const double via_coeffs =
      std::max(solve_coefficients(mp, Parity::plus).beta,
               solve_coefficients(mp, Parity::minus).beta);
  CHECK(std::fabs(oracle_beta(mp, 32) - via_coeffs) <= 1e-6 * (1.0 + via_coeffs));

  const double n16 = oracle_beta(mode(0.4 * pi, 0.3, 2.0), 16);
  const double n32 = oracle_beta(mode(0.4 * pi, 0.3, 2.0), 32);
  CHECK(std::fabs(n32 - n16) <= 1e-8 * (1.0 + n32));
}

TEST_CASE("property: nested-subspace monotonicity") {
  for (const auto& c : sample_cases(555, 8, 0.1, 5.0, 20.0, 5e-2)) {
    const ModePoint mp = mode(c.sigma, c.alpha, c.k);
    CHECK(oracle_beta(mp, 12) <= oracle_beta(mp, 24) + 1e-12);
  }
}

TEST_CASE("property: scale invariance of the quotient") {
  const ModePoint mp = mode(0.9 * pi, 0.25, 1.3);
  const QuadraticFormPair forms = assemble_forms(mp, build_basis(mp.sigma(), 12));
  Eigen::VectorXcd c(24);
  for (int i = 0; i < 24; ++i) c(i) = Complex(std::cos(0.7 * i), std::sin(1.3 * i + 0.2));
  auto quotient = [&](const Eigen::VectorXcd& v) {
    return std::real((v.adjoint() * forms.A * v).value()) / std::real((v.adjoint() * forms.B * v).value());
  };
  const double base = quotient(c);
  const double scaled = quotient((Complex(0.0, 3.7) * c).eval());
  CHECK(std::fabs(base - scaled) <= 1e-12 * (1.0 + std::fabs(base)));
}

TEST_CASE("property: evenness of the discrete maximum in k") {
  const ModePoint fwd = mode(0.9 * pi, 0.25, 1.3);
  const ModePoint rev = mode(0.9 * pi, 0.25, -1.3);
  const double bf = oracle_beta(fwd, 24);
  const double br = oracle_beta(rev, 24);
  CHECK(std::fabs(bf - br) <= 1e-9 * (1.0 + bf));
}

TEST_CASE("residual bound holds on sampled modes") {
  for (const auto& c : sample_cases(808, 6, 0.1, 8.0, 25.0, 5e-2)) {
    const ModePoint mp = mode(c.sigma, c.alpha, c.k);
    const OracleResult res = solve_rayleigh_max(assemble_forms(mp, build_basis(mp.sigma(), 24)));
    CHECK(res.residual <= 1e-8);
  }
}
