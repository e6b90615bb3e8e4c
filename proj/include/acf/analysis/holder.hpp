#pragma once

#include <algorithm>
#include <cmath>
#include <istream>
#include <sstream>
#include <string>
#include <vector>

#include "acf/error.hpp"

namespace acf {

struct HolderEstimate {
  double exponent = 0;
  std::vector<double> scales_used;
  std::vector<double> oscillations;
  double r2 = 0;
};

/// Least-squares slope of log(max oscillation over windows of width h) against
/// log h, for h = 2^j grid steps up to a quarter of the grid.
inline HolderEstimate holder_estimate(const std::vector<double>& x, const std::vector<double>& y) {
  const std::size_t n = y.size();
  if (x.size() != n) throw domain_error("holder_estimate: x and y differ in length");
  if (n < 64) throw insufficient_scales("need at least 64 grid points");
  const double dx = (x.back() - x.front()) / static_cast<double>(n - 1);
  HolderEstimate h;
  for (std::size_t w = 1; 4 * w <= n; w *= 2) {
    double osc = 0;
    for (std::size_t i = 0; i + w < n; ++i) {
      const auto [lo, hi] = std::minmax_element(y.begin() + static_cast<long>(i), y.begin() + static_cast<long>(i + w + 1));
      osc = std::max(osc, *hi - *lo);
    }
    if (osc > 0) {
      h.scales_used.push_back(static_cast<double>(w) * dx);
      h.oscillations.push_back(osc);
    }
  }
  const std::size_t m = h.scales_used.size();
  if (m < 4) throw insufficient_scales("fewer than 4 usable dyadic scales");
  double sx = 0, sy = 0, sxx = 0, sxy = 0, syy = 0;
  for (std::size_t k = 0; k < m; ++k) {
    const double a = std::log(h.scales_used[k]), b = std::log(h.oscillations[k]);
    sx += a;
    sy += b;
    sxx += a * a;
    sxy += a * b;
    syy += b * b;
  }
  const double md = static_cast<double>(m);
  const double cov = sxy - sx * sy / md, vx = sxx - sx * sx / md, vy = syy - sy * sy / md;
  h.exponent = cov / vx;
  h.r2 = vy > 0 ? cov * cov / (vx * vy) : 1.0;
  return h;
}

/// Reads a figure CSV (header row, numeric columns) and returns the first
/// column and the chosen value column (default: the last one). The grid must
/// be uniform.
inline void read_figure_csv(std::istream& in, std::vector<double>& x, std::vector<double>& y,
                            int column = -1) {
  std::string line;
  if (!std::getline(in, line)) throw parse_error("empty CSV");
  const auto ncols = static_cast<int>(std::count(line.begin(), line.end(), ',') + 1);
  if (ncols < 2) throw parse_error("CSV needs at least two columns");
  const int col = column < 0 ? ncols - 1 : column;
  if (col < 1 || col >= ncols) throw parse_error("no such CSV column");
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<double> row;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) {
      try {
        std::size_t used = 0;
        row.push_back(std::stod(cell, &used));
        if (used != cell.size()) throw std::invalid_argument(cell);
      } catch (const std::logic_error&) {
        throw parse_error("bad CSV cell '" + cell + "'");
      }
    }
    if (static_cast<int>(row.size()) != ncols) throw parse_error("ragged CSV row");
    x.push_back(row[0]);
    y.push_back(row[static_cast<std::size_t>(col)]);
  }
  if (x.size() >= 3) {
    const double dx = (x.back() - x.front()) / static_cast<double>(x.size() - 1);
    for (std::size_t i = 1; i < x.size(); ++i)
      if (std::fabs(x[i] - x[i - 1] - dx) > 1e-3 * std::fabs(dx)) throw parse_error("grid is not uniform");
  }
}

}  // namespace acf
