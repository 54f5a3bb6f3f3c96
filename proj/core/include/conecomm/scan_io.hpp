#pragma once

#include <string>
#include <vector>

#include "conecomm/sup_analysis.hpp"

// Deterministic CSV emission for scans.  Floats are rendered with
// std::to_chars (locale-free, byte-stable); divergent rows carry the literal
// sentinel "inf".

namespace conecomm {

inline constexpr const char* csv_header = "sigma,alpha,beta,log10_beta,k_star,status";

// General float at the given significant-digit budget.
std::string format_value(double v, int precision);

// Shortest round-trip decimal (used for the sigma column).
std::string format_exact(double v);

std::string scan_csv(const std::vector<ScanRow>& rows, int precision = 12);

// sigma-over-pi ratios of the twelve standard panels.
const std::vector<double>& figure1_ratios();

// 401-point alpha grid on [-1, 1].
std::vector<double> figure1_alpha_grid();

// Writes one CSV per panel into `directory` as fig1_sigma_<ratio>.csv and
// returns the file paths.  Throws IoError on write failure.
std::vector<std::string> write_figure1(const std::string& directory,
                                       const SupConfig& cfg = {}, int precision = 12);

}  // namespace conecomm
