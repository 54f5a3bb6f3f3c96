#pragma once

#include <Eigen/Dense>
#include <vector>

#include "conecomm/types.hpp"

// Brute-force maximization of the mode pressure/energy Rayleigh quotient over
// discretized no-slip angular profiles.  The numerator is a rank-2 Hermitian
// form built from the two endpoint derivatives of y1 + y2; the denominator is
// the Gram matrix of the second-order operators applied to the basis.  This
// path never touches the closed forms and serves as their ground truth.

namespace conecomm {

// Polynomial no-slip basis phi_m(t) = t (sigma - t) P_m(2 t / sigma - 1)
// tabulated on a Gauss-Legendre rule that integrates every energy integrand
// exactly.
struct AngularBasis {
  double sigma = 0.0;
  int n_modes = 0;
  std::vector<double> nodes;    // on [0, sigma]
  std::vector<double> weights;
  Eigen::MatrixXd phi;    // n_modes x nodes
  Eigen::MatrixXd dphi;   // analytic first derivative
  Eigen::MatrixXd d2phi;  // analytic second derivative
};

struct QuadraticFormPair {
  Eigen::MatrixXcd A;              // pressure form, PSD of rank <= 2
  Eigen::MatrixXcd B;              // energy form, Hermitian
  Eigen::MatrixXcd boundary_map;   // 2 x 2N: coefficients -> (g0, g_sigma)
  Eigen::MatrixXcd amplitude_map;  // 2 x 2N: W with A = W^H W
  double resonance_margin = 0.0;   // |1 - omega^2 e^{2 i sigma}|
};

struct OracleResult {
  double lambda_max = 0.0;
  Eigen::VectorXcd coeffs;
  double residual = 0.0;
};

AngularBasis build_basis(double sigma, int n_modes);

// Assemble both forms at one mode point (k != 0).  Throws NeumannDegenerate
// when the boundary amplitude inversion degenerates.
QuadraticFormPair assemble_forms(const ModePoint& mp, const AngularBasis& basis);

// Largest generalized eigenvalue of (A, B) via the rank-2 reduction: two
// linear solves against a Cholesky factorization of B and a closed-form 2x2
// Hermitian eigenvalue.  Throws EnergyFormSingular when B fails to factor.
OracleResult solve_rayleigh_max(const QuadraticFormPair& forms);

double oracle_beta(const ModePoint& mp, int n_modes);

// Gauss-Legendre rule on [-1, 1] (exposed for reuse in quadrature tests).
void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights);

}  // namespace conecomm
