#include "conecomm/variational_oracle.hpp"

#include <cmath>

#include "conecomm/mode_formulas.hpp"

namespace conecomm {

namespace {

constexpr Complex kI{0.0, 1.0};

// P_m, P_m', P_m'' for m = 0..n-1 at a single point via the standard
// recurrences.
void legendre_all(int n, double x, std::vector<double>& p, std::vector<double>& dp,
                  std::vector<double>& d2p) {
  p.assign(n, 0.0);
  dp.assign(n, 0.0);
  d2p.assign(n, 0.0);
  for (int m = 0; m < n; ++m) {
    if (m == 0) {
      p[0] = 1.0;
    } else if (m == 1) {
      p[1] = x;
      dp[1] = 1.0;
    } else {
      p[m] = ((2.0 * m - 1.0) * x * p[m - 1] - (m - 1.0) * p[m - 2]) / m;
      dp[m] = dp[m - 2] + (2.0 * m - 1.0) * p[m - 1];
      d2p[m] = d2p[m - 2] + (2.0 * m - 1.0) * dp[m - 1];
    }
  }
}

}  // namespace

void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights) {
  nodes.assign(n, 0.0);
  weights.assign(n, 0.0);
  for (int i = 0; i < n; ++i) {
    double x = std::cos(pi * (i + 0.75) / (n + 0.5));
    double pn = 0.0, dpn = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = x;
      for (int m = 2; m <= n; ++m) {
        const double p2 = ((2.0 * m - 1.0) * x * p1 - (m - 1.0) * p0) / m;
        p0 = p1;
        p1 = p2;
      }
      pn = p1;
      dpn = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = pn / dpn;
      x -= dx;
      if (std::fabs(dx) < 1e-15) break;
    }
    nodes[i] = x;
    weights[i] = 2.0 / ((1.0 - x * x) * dpn * dpn);
  }
}

AngularBasis build_basis(double sigma, int n_modes) {
  validate({sigma, 0.0});
  if (n_modes < 4) throw InvalidParams("basis needs at least 4 modes");

  AngularBasis b;
  b.sigma = sigma;
  b.n_modes = n_modes;

  const int nq = n_modes + 6;
  std::vector<double> x, w;
  gauss_legendre(nq, x, w);
  b.nodes.resize(nq);
  b.weights.resize(nq);
  for (int q = 0; q < nq; ++q) {
    b.nodes[q] = 0.5 * sigma * (x[q] + 1.0);
    b.weights[q] = 0.5 * sigma * w[q];
  }

  b.phi.resize(n_modes, nq);
  b.dphi.resize(n_modes, nq);
  b.d2phi.resize(n_modes, nq);
  const double jac = 2.0 / sigma;
  std::vector<double> p, dp, d2p;
  for (int q = 0; q < nq; ++q) {
    const double t = b.nodes[q];
    legendre_all(n_modes, x[q], p, dp, d2p);
    const double win = t * (sigma - t);
    const double dwin = sigma - 2.0 * t;
    for (int m = 0; m < n_modes; ++m) {
      b.phi(m, q) = win * p[m];
      b.dphi(m, q) = dwin * p[m] + win * dp[m] * jac;
      b.d2phi(m, q) = -2.0 * p[m] + 2.0 * dwin * dp[m] * jac + win * d2p[m] * jac * jac;
    }
  }
  return b;
}

QuadraticFormPair assemble_forms(const ModePoint& mp, const AngularBasis& basis) {
  validate(mp.params);
  if (mp.k == 0.0) throw InvalidParams("assemble_forms requires k != 0");
  if (std::fabs(mp.sigma() - basis.sigma) > 1e-12 * basis.sigma) {
    throw InvalidParams("basis was built for a different sigma");
  }

  const int n = basis.n_modes;
  const int nq = static_cast<int>(basis.nodes.size());
  const double sigma = basis.sigma;
  const double alpha = mp.alpha();
  const double k = mp.k;

  const Complex om = std::polar(std::exp(-k * sigma), -alpha * sigma);
  const Complex neumann = 1.0 - om * om;
  if (std::abs(neumann) <= eps_sing) {
    throw NeumannDegenerate("1 - omega^2 within eps_sing of zero");
  }

  // L_j phi_m at the quadrature nodes; c is the zeroth-order symbol.
  const Complex c = (kI * k + 1.0 - alpha) * (kI * k + 1.0 - alpha) - 1.0;
  Eigen::MatrixXcd L1(n, nq), L2(n, nq);
  for (int m = 0; m < n; ++m) {
    for (int q = 0; q < nq; ++q) {
      const Complex base = basis.d2phi(m, q) + c * basis.phi(m, q);
      const Complex skew = 2.0 * kI * basis.dphi(m, q);
      L1(m, q) = base - skew;
      L2(m, q) = base + skew;
    }
  }
  Eigen::VectorXd w = Eigen::Map<const Eigen::VectorXd>(basis.weights.data(), nq);

  QuadraticFormPair out;
  out.B = Eigen::MatrixXcd::Zero(2 * n, 2 * n);
  out.B.topLeftCorner(n, n) = 2.0 * L1.conjugate() * w.asDiagonal() * L1.transpose();
  out.B.bottomRightCorner(n, n) = 2.0 * L2.conjugate() * w.asDiagonal() * L2.transpose();

  out.boundary_map = Eigen::MatrixXcd::Zero(2, 2 * n);
  for (int j = 0; j < 2; ++j) {
    for (int m = 0; m < n; ++m) {
      out.boundary_map(0, j * n + m) = sigma * (m % 2 == 0 ? 1.0 : -1.0);
      out.boundary_map(1, j * n + m) = -sigma;
    }
  }

  Eigen::Matrix2cd G;
  G << -om / neumann, 1.0 / neumann, -1.0 / neumann, om / neumann;
  const double kk = k * k + alpha * alpha;
  const double s_pressure = (kk / k) * (-std::expm1(-2.0 * k * sigma));
  out.amplitude_map = std::sqrt(s_pressure) * (G * out.boundary_map);
  out.A = out.amplitude_map.adjoint() * out.amplitude_map;
  out.resonance_margin = std::abs(1.0 - om * om * std::polar(1.0, 2.0 * sigma));
  return out;
}

OracleResult solve_rayleigh_max(const QuadraticFormPair& forms) {
  Eigen::LLT<Eigen::MatrixXcd> llt(forms.B);
  if (llt.info() != Eigen::Success) {
    throw EnergyFormSingular("energy form failed to factor (resonance margin " +
                             std::to_string(forms.resonance_margin) + ")");
  }
  const Eigen::MatrixXcd Z = llt.solve(forms.amplitude_map.adjoint());
  Eigen::Matrix2cd K = forms.amplitude_map * Z;
  K = 0.5 * (K + K.adjoint()).eval();

  const double a = std::real(K(0, 0));
  const double d = std::real(K(1, 1));
  const Complex bb = K(0, 1);
  const double disc = std::sqrt((a - d) * (a - d) + 4.0 * std::norm(bb));
  OracleResult res;
  res.lambda_max = 0.5 * (a + d + disc);

  Eigen::Vector2cd v;
  if (std::abs(bb) > 1e-300) {
    v << bb, Complex(res.lambda_max - a, 0.0);
  } else {
    v = a >= d ? Eigen::Vector2cd(1.0, 0.0) : Eigen::Vector2cd(0.0, 1.0);
  }
  res.coeffs = Z * v;
  const double cnorm = res.coeffs.norm();
  if (cnorm < 1e-300) {
    res.coeffs.setZero(forms.B.rows());
    res.residual = 0.0;
    return res;
  }
  res.coeffs /= cnorm;
  const Eigen::VectorXcd bc = forms.B * res.coeffs;
  res.residual = (forms.A * res.coeffs - res.lambda_max * bc).norm() / bc.norm();
  return res;
}

double oracle_beta(const ModePoint& mp, int n_modes) {
  const AngularBasis basis = build_basis(mp.sigma(), n_modes);
  return solve_rayleigh_max(assemble_forms(mp, basis)).lambda_max;
}

}  // namespace conecomm
