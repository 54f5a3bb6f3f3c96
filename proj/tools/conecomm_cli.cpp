// Command-line surface: mode-constant evaluation, supremum analysis, alpha
// scans, panel generation, the critical angle, the brute-force oracle, and
// the seeded verification suite.
//
// Exit codes: 0 success, 1 verification failure, 2 invalid parameters,
// 3 singular point, 4 output I/O failure.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "conecomm/extremal_solver.hpp"
#include "conecomm/mode_formulas.hpp"
#include "conecomm/scan_io.hpp"
#include "conecomm/sup_analysis.hpp"
#include "conecomm/variational_oracle.hpp"
#include "conecomm/verify.hpp"

namespace {

using namespace conecomm;

struct CommonOpts {
  double sigma_rad = 0.0;
  double sigma_pi = 0.0;
  bool has_rad = false;
  bool has_pi = false;
  int precision = 12;
};

void add_sigma_flags(CLI::App* cmd, CommonOpts& opts) {
  auto* rad = cmd->add_option("--sigma", opts.sigma_rad, "cone opening angle in radians");
  auto* ratio = cmd->add_option("--sigma-pi", opts.sigma_pi, "cone opening angle as a multiple of pi");
  rad->excludes(ratio);
  ratio->excludes(rad);
}

double resolve_sigma(const CLI::App* cmd, const CommonOpts& opts) {
  const bool has_rad = cmd->count("--sigma") > 0;
  const bool has_pi = cmd->count("--sigma-pi") > 0;
  if (has_rad == has_pi) {
    throw InvalidParams("exactly one of --sigma / --sigma-pi is required");
  }
  return has_rad ? opts.sigma_rad : opts.sigma_pi * pi;
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(out_path, std::ios::binary | std::ios::trunc);
  if (!file) throw IoError("cannot open " + out_path);
  file << text;
  if (!file.good()) throw IoError("write failed for " + out_path);
}

std::string fmt_opt_k(const std::optional<double>& k, int precision) {
  return k ? format_value(*k, precision) : std::string("none");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"optimal weighted mode constants on a planar cone"};
  app.require_subcommand(1);

  CommonOpts opts;
  double alpha = 0.0, k = 1.0, alpha_min = -1.0, alpha_max = 1.0, tol = 1e-12;
  int points = 401, n_modes = 32, cases = 100;
  std::uint64_t seed = 12345;
  std::string out_path;

  auto* eval = app.add_subcommand("eval", "per-mode constants from both closed forms");
  add_sigma_flags(eval, opts);
  eval->add_option("--alpha", alpha, "weight exponent")->required();
  eval->add_option("--k", k, "frequency")->required();
  eval->add_option("--precision", opts.precision, "printed significant digits");

  auto* sup = app.add_subcommand("sup", "supremum over k of the mode constants");
  add_sigma_flags(sup, opts);
  sup->add_option("--alpha", alpha)->required();
  sup->add_option("--precision", opts.precision);

  auto* scan = app.add_subcommand("scan", "CSV scan of the constant over alpha");
  add_sigma_flags(scan, opts);
  scan->add_option("--alpha-min", alpha_min);
  scan->add_option("--alpha-max", alpha_max);
  scan->add_option("--points", points);
  scan->add_option("--out", out_path, "output file (default: stdout)");
  scan->add_option("--precision", opts.precision);

  auto* fig = app.add_subcommand("figure1", "write the twelve standard panel CSVs");
  fig->add_option("--out", out_path, "output directory (default: .)");
  fig->add_option("--precision", opts.precision);

  auto* crit = app.add_subcommand("critical", "critical opening angle");
  crit->add_option("--tol", tol, "residual tolerance");
  crit->add_option("--precision", opts.precision);

  auto* orc = app.add_subcommand("oracle", "brute-force Rayleigh maximization at one mode");
  add_sigma_flags(orc, opts);
  orc->add_option("--alpha", alpha)->required();
  orc->add_option("--k", k)->required();
  orc->add_option("--n-modes", n_modes, "basis size");
  orc->add_option("--precision", opts.precision);

  auto* ver = app.add_subcommand("verify", "seeded cross-path verification suite");
  ver->add_option("--seed", seed);
  ver->add_option("--cases", cases);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  const int prec = opts.precision;
  try {
    if (eval->parsed()) {
      const double sigma = resolve_sigma(eval, opts);
      const ModePoint mp{{sigma, alpha}, k};
      const ModeBetas quot = beta_modes_complex(mp);
      const ModeBetas hyp = beta_modes_real(mp);
      std::cout << "sigma=" << format_exact(sigma) << " alpha=" << format_exact(alpha)
                << " k=" << format_exact(k) << "\n"
                << "complex beta_plus=" << format_value(quot.plus, prec)
                << " beta_minus=" << format_value(quot.minus, prec) << "\n"
                << "real    beta_plus=" << format_value(hyp.plus, prec)
                << " beta_minus=" << format_value(hyp.minus, prec) << "\n"
                << "beta_k=" << format_value(std::max(quot.max_component(), hyp.max_component()), prec)
                << "\n";
    } else if (sup->parsed()) {
      const double sigma = resolve_sigma(sup, opts);
      const SupResult r = beta_sup({sigma, alpha});
      std::cout << "sigma=" << format_exact(sigma) << " alpha=" << format_exact(alpha) << "\n";
      if (r.attainment == Attainment::divergent) {
        std::cout << "beta=inf k_star=none attainment=divergent\n";
      } else {
        std::cout << "beta=" << format_value(r.beta, prec)
                  << " k_star=" << fmt_opt_k(r.k_star, prec)
                  << " attainment=" << to_string(r.attainment) << "\n";
      }
    } else if (scan->parsed()) {
      const double sigma = resolve_sigma(scan, opts);
      if (points < 1 || !(alpha_min <= alpha_max)) throw InvalidParams("bad alpha range");
      std::vector<double> alphas(points);
      for (int i = 0; i < points; ++i) {
        alphas[i] = points == 1 ? alpha_min
                                : alpha_min + (alpha_max - alpha_min) * i / (points - 1);
        if (std::fabs(alphas[i] - 1.0) <= 1e-12) {
          throw InvalidParams("alpha grid must exclude 1");
        }
      }
      emit(scan_csv(alpha_scan(sigma, alphas), prec), out_path);
    } else if (fig->parsed()) {
      const std::string dir = out_path.empty() ? std::string(".") : out_path;
      for (const std::string& path : write_figure1(dir, {}, prec)) {
        std::cout << path << "\n";
      }
    } else if (crit->parsed()) {
      const double sc = critical_sigma(tol);
      std::cout << "sigma_c=" << format_value(sc, 17)
                << " sigma_c_over_pi=" << format_value(sc / pi, 17) << "\n";
    } else if (orc->parsed()) {
      const double sigma = resolve_sigma(orc, opts);
      const ModePoint mp{{sigma, alpha}, k};
      const double brute = oracle_beta(mp, n_modes);
      const double closed = beta_modes_real(mp).max_component();
      std::cout << "oracle_beta=" << format_value(brute, prec)
                << " closed_form=" << format_value(closed, prec)
                << " abs_diff=" << format_value(std::fabs(brute - closed), 3) << "\n";
    } else if (ver->parsed()) {
      const VerifyReport rep = run_verify(seed, cases);
      std::cout << render_report(rep);
      return rep.pass ? 0 : 1;
    }
  } catch (const InvalidParams& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const DenominatorNearZero& e) {
    std::cerr << "singular: " << e.what() << "\n";
    return 3;
  } catch (const ResonantMode& e) {
    std::cerr << "singular: " << e.what() << "\n";
    return 3;
  } catch (const NeumannDegenerate& e) {
    std::cerr << "singular: " << e.what() << "\n";
    return 3;
  } catch (const EnergyFormSingular& e) {
    std::cerr << "singular: " << e.what() << "\n";
    return 3;
  } catch (const SigmaOnCotPole& e) {
    std::cerr << "singular: " << e.what() << "\n";
    return 3;
  } catch (const IoError& e) {
    std::cerr << "io error: " << e.what() << "\n";
    return 4;
  }
  return 0;
}
