#include "conecomm/scan_io.hpp"

#include <charconv>
#include <filesystem>
#include <fstream>

namespace conecomm {

std::string format_value(double v, int precision) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general,
                           precision);
  return std::string(buf, res.ptr);
}

std::string format_exact(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

std::string scan_csv(const std::vector<ScanRow>& rows, int precision) {
  std::string out(csv_header);
  out.push_back('\n');
  for (const ScanRow& r : rows) {
    out += format_exact(r.sigma);
    out.push_back(',');
    out += format_value(r.alpha, precision);
    out.push_back(',');
    if (r.status == RowStatus::divergent) {
      out += "inf,inf,";
    } else if (r.status == RowStatus::excluded) {
      out += "nan,nan,";
    } else {
      out += format_value(r.beta, precision);
      out.push_back(',');
      out += format_value(r.log10_beta, precision);
      out.push_back(',');
    }
    if (r.k_star) out += format_value(*r.k_star, precision);
    out.push_back(',');
    out += to_string(r.status);
    out.push_back('\n');
  }
  return out;
}

const std::vector<double>& figure1_ratios() {
  static const std::vector<double> ratios = {0.2,  0.4,  0.5, 0.65, 0.85, 0.95,
                                             1.0,  1.05, 1.2, 1.4,  1.6,  1.8};
  return ratios;
}

std::vector<double> figure1_alpha_grid() {
  std::vector<double> alphas(401);
  for (int i = 0; i <= 400; ++i) alphas[i] = -1.0 + 0.005 * i;
  return alphas;
}

std::vector<std::string> write_figure1(const std::string& directory,
                                       const SupConfig& cfg, int precision) {
  namespace fs = std::filesystem;
  std::error_code ec;
  fs::create_directories(directory, ec);
  const std::vector<double> alphas = figure1_alpha_grid();
  std::vector<std::string> paths;
  for (double ratio : figure1_ratios()) {
    const auto rows = alpha_scan(ratio * pi, alphas, cfg);
    const fs::path path = fs::path(directory) / ("fig1_sigma_" + format_exact(ratio) + ".csv");
    std::ofstream file(path, std::ios::binary | std::ios::trunc);
    if (!file) throw IoError("cannot open " + path.string());
    file << scan_csv(rows, precision);
    if (!file.good()) throw IoError("write failed for " + path.string());
    paths.push_back(path.string());
  }
  return paths;
}

}  // namespace conecomm
