#pragma once

#include <algorithm>
#include <cstdio>
#include <ostream>
#include <string>
#include <vector>

#include "acf/analysis/corpus.hpp"
#include "acf/brjuno/semi.hpp"

namespace acf {

/// Abscissae lo + k (hi - lo)/(points - 1), k = 0..points-1, kept exact.
/// Integers are nudged by 1/(2 10^9) so every point has a proper fractional part.
struct GridSpec {
  Rational lo{0};
  Rational hi{1};
  std::size_t points = 4096;
  Rational alpha{1};
  std::string u_name = "inv_sqrt";
  std::size_t N = 200;
  std::size_t b0_digits = default_b0_digits;
  std::uint64_t seed = 0;
  std::vector<Sample> inject;  // extra abscissae merged into the grid

  void validate() const {
    if (!(lo < hi)) throw domain_error("grid needs lo < hi");
    if (points < 2) throw domain_error("grid needs at least 2 points");
  }
};

inline const Rational& integer_nudge() {
  static const Rational h(1, 2000000000);
  return h;
}

inline std::vector<Sample> grid_points(const GridSpec& g) {
  g.validate();
  std::vector<Sample> out;
  const Rational step = (g.hi - g.lo) / Rational(static_cast<unsigned long>(g.points - 1));
  for (std::size_t k = 0; k < g.points; ++k) {
    Rational x = g.lo + step * static_cast<unsigned long>(k);
    if (is_integer(x)) x += integer_nudge();
    out.push_back({x.get_str(), RealValue(x)});
  }
  for (const auto& s : g.inject) {
    const auto at = std::find_if(out.begin(), out.end(), [&](const Sample& p) { return s.x < p.x; });
    out.insert(at, s);
  }
  return out;
}

/// One figure row: abscissa and the columns of that figure.
struct FigureRow {
  std::string label;
  double x;
  std::vector<double> values;
};

struct Figure {
  int which = 0;
  std::vector<std::string> header;
  std::vector<FigureRow> rows;
};

/// Column values shared by figures 3 and 4, so the difference in figure 4 is
/// computed from the very doubles figure 3 reports.
struct EvenPair {
  double b0even;
  double b1;
};

inline EvenPair even_pair(const RealValue& x, const GridSpec& g) {
  static const SingularityU lg = make_u("log");
  return {b0_even(x, g.b0_digits), brjuno_sum(x, Rational(1), lg, g.N).value};
}

/// Figure 1: B_{alpha,u}; 2: B_0; 3: B_0 + B_0(-x) and B_1; 4: B_1 - (B_0 + B_0(-x)).
inline Figure make_figure(int which, const GridSpec& g) {
  Figure f;
  f.which = which;
  const auto pts = grid_points(g);
  switch (which) {
    case 1: f.header = {"x", "value"}; break;
    case 2: f.header = {"x", "value"}; break;
    case 3: f.header = {"x", "b0even", "b1"}; break;
    case 4: f.header = {"x", "diff"}; break;
    default: throw domain_error("figure must be 1, 2, 3 or 4");
  }
  const SingularityU u = which == 1 ? make_u(g.u_name) : SingularityU{};
  for (const auto& p : pts) {
    FigureRow row{p.label, to_double(p.x), {}};
    if (which == 1) {
      row.values.push_back(brjuno_sum(p.x, g.alpha, u, g.N).value);
    } else if (which == 2) {
      row.values.push_back(semi_brjuno(p.x, g.b0_digits).value);
    } else {
      const EvenPair e = even_pair(p.x, g);
      if (which == 3) row.values = {e.b0even, e.b1};
      else row.values.push_back(e.b1 - e.b0even);
    }
    f.rows.push_back(std::move(row));
  }
  return f;
}

/// 15 significant digits, C locale.
inline std::string fmt15(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return buf;
}

inline void write_csv(std::ostream& os, const Figure& f) {
  for (std::size_t i = 0; i < f.header.size(); ++i) os << (i ? "," : "") << f.header[i];
  os << '\n';
  for (const auto& r : f.rows) {
    os << fmt15(r.x);
    for (double v : r.values) os << ',' << fmt15(v);
    os << '\n';
  }
}

}  // namespace acf
