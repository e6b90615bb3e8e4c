#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

#include "acf/acf.hpp"

using namespace acf;

namespace {

const double g = (std::sqrt(5.0) - 1) / 2;

GridSpec small_grid(std::size_t points) {
  GridSpec s;
  s.points = points;
  return s;
}

std::vector<double> linspace(std::size_t n) {
  std::vector<double> x;
  for (std::size_t k = 0; k < n; ++k) x.push_back(static_cast<double>(k) / static_cast<double>(n - 1));
  return x;
}

}  // namespace

TEST(Corpus, PanelFirstAndReproducible) {
  const auto a = make_corpus(1020, 7), b = make_corpus(1020, 7), c = make_corpus(1020, 8);
  ASSERT_EQ(a.size(), 1020u);
  EXPECT_EQ(a[0].label, surd_panel()[0].label);
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(a[i].label, b[i].label);
  bool differs = false;
  for (std::size_t i = surd_panel().size(); i < a.size(); ++i) differs = differs || a[i].label != c[i].label;
  EXPECT_TRUE(differs);
  for (const auto& s : random_rationals(200, 3)) {
    const Rational* q = s.x.as_rational();
    ASSERT_NE(q, nullptr);
    EXPECT_TRUE(*q > 0 && *q < 1) << s.label;
  }
}

TEST(Grid, PointsNudgesAndInjection) {
  GridSpec s = small_grid(5);
  auto pts = grid_points(s);
  ASSERT_EQ(pts.size(), 5u);
  EXPECT_TRUE(compare(pts[0].x, RealValue(integer_nudge())) == 0);
  EXPECT_TRUE(compare(pts[2].x, RealValue(Rational(1, 2))) == 0);
  EXPECT_TRUE(compare(pts[4].x, RealValue(Rational(1) + integer_nudge())) == 0);

  s.inject.push_back({"g", RealValue::surd(-1, 1, 2, 5)});
  pts = grid_points(s);
  ASSERT_EQ(pts.size(), 6u);
  EXPECT_EQ(pts[3].label, "g");
  EXPECT_TRUE(pts[2].x < pts[3].x && pts[3].x < pts[4].x);

  s.points = 1;
  EXPECT_THROW(grid_points(s), domain_error);
  s.points = 4;
  s.hi = s.lo;
  EXPECT_THROW(grid_points(s), domain_error);
}

TEST(Figure, ValuesAtKnownPoints) {
  GridSpec s = small_grid(3);
  s.inject.push_back({"g", RealValue::surd(-1, 1, 2, 5)});
  const Figure f1 = make_figure(1, s);
  ASSERT_EQ(f1.rows.size(), 4u);
  EXPECT_EQ(f1.header, (std::vector<std::string>{"x", "value"}));
  EXPECT_NEAR(f1.rows[2].values[0], 1 / std::sqrt(g) / (1 - g), 1e-9);

  const Figure f2 = make_figure(2, s);
  EXPECT_NEAR(f2.rows[1].values[0], std::log(2.0), 1e-12);
  EXPECT_NEAR(f2.rows[2].values[0], -3 * std::log(g), 1e-9);

  const Figure f3 = make_figure(3, s), f4 = make_figure(4, s);
  EXPECT_EQ(f3.header.size(), 3u);
  EXPECT_NEAR(f4.rows[2].values[0], -1.7410407, 1e-6);
  for (std::size_t i = 0; i < f3.rows.size(); ++i)
    EXPECT_EQ(f4.rows[i].values[0], f3.rows[i].values[1] - f3.rows[i].values[0]);
  EXPECT_THROW(make_figure(5, s), domain_error);
}

TEST(Figure, CsvFormat) {
  Figure f{4, {"x", "diff"}, {{"a", 0.5, {1.0 / 3}}, {"b", 1e-10, {-2.0}}}};
  std::ostringstream os;
  write_csv(os, f);
  EXPECT_EQ(os.str(), "x,diff\n0.5,0.333333333333333\n1e-10,-2\n");
  EXPECT_EQ(fmt15(0.1 + 0.2), "0.3");
}

TEST(Figure, Deterministic) {
  const GridSpec s = small_grid(17);
  std::ostringstream a, b;
  write_csv(a, make_figure(3, s));
  write_csv(b, make_figure(3, s));
  EXPECT_EQ(a.str(), b.str());
}

TEST(Holder, Calibration) {
  const auto x = linspace(4096);
  std::vector<double> half, one, smooth;
  for (double t : x) {
    half.push_back(std::sqrt(std::fabs(t - 0.3)));
    one.push_back(std::fabs(t - 0.5));
    smooth.push_back(std::sin(3 * t));
  }
  EXPECT_NEAR(holder_estimate(x, half).exponent, 0.5, 0.1);
  EXPECT_NEAR(holder_estimate(x, one).exponent, 1.0, 0.05);
  EXPECT_NEAR(holder_estimate(x, smooth).exponent, 1.0, 0.1);
  const HolderEstimate h = holder_estimate(x, half);
  EXPECT_EQ(h.scales_used.size(), h.oscillations.size());
  EXPECT_GT(h.r2, 0.95);
}

TEST(Holder, InsufficientScales) {
  const auto x = linspace(32);
  EXPECT_THROW(holder_estimate(x, std::vector<double>(32, 1.0)), insufficient_scales);
  const auto big = linspace(128);
  EXPECT_THROW(holder_estimate(big, std::vector<double>(128, 1.0)), insufficient_scales);
  EXPECT_THROW(holder_estimate(big, std::vector<double>(127, 1.0)), domain_error);
}

TEST(Holder, ReadCsv) {
  std::vector<double> x, y;
  std::istringstream ok("x,b0even,b1\n0,1,2\n0.5,3,4\n1,5,6\n");
  read_figure_csv(ok, x, y);
  EXPECT_EQ(y, (std::vector<double>{2, 4, 6}));
  x.clear();
  y.clear();
  std::istringstream ok2("x,b0even,b1\n0,1,2\n0.5,3,4\n1,5,6\n");
  read_figure_csv(ok2, x, y, 1);
  EXPECT_EQ(y, (std::vector<double>{1, 3, 5}));

  const auto fails = [](const std::string& text, int column = -1) {
    std::vector<double> a, b;
    std::istringstream in(text);
    read_figure_csv(in, a, b, column);
  };
  EXPECT_THROW(fails(""), parse_error);
  EXPECT_THROW(fails("x\n1\n"), parse_error);
  EXPECT_THROW(fails("x,v\n0,1\n0.5,abc\n"), parse_error);
  EXPECT_THROW(fails("x,v\n0,1\n0.5\n"), parse_error);
  EXPECT_THROW(fails("x,v\n0,1\n0.1,1\n1,1\n"), parse_error);
  EXPECT_THROW(fails("x,v\n0,1\n", 2), parse_error);
}

TEST(Holder, FigureRoundTrip) {
  const Figure f = make_figure(2, small_grid(257));
  std::stringstream io;
  write_csv(io, f);
  std::vector<double> x, y;
  read_figure_csv(io, x, y);
  ASSERT_EQ(y.size(), 257u);
  EXPECT_NEAR(y[128], std::log(2.0), 1e-14);
  const HolderEstimate h = holder_estimate(x, y);
  EXPECT_TRUE(std::isfinite(h.exponent));
}

TEST(Bench, Rows) {
  EXPECT_TRUE(bench({}, 100, 1).empty());
  const auto rows = bench({Rational(1), Rational(1, 2), Rational(0)}, 200, 1);
  ASSERT_EQ(rows.size(), 9u);
  for (const auto& r : rows) {
    if (r.carrier == "rational" && r.alpha != 0) {
      EXPECT_LE(r.digits, 6u);
    } else {
      EXPECT_EQ(r.digits, 200u) << r.carrier;
    }
    EXPECT_GE(r.median_seconds, 0);
  }
  EXPECT_EQ(rows[0].carrier, "rational");
  EXPECT_EQ(rows[1].carrier, "surd");
  EXPECT_EQ(rows[2].carrier, "adaptive");
  EXPECT_THROW(bench({Rational(1)}, 0, 1), domain_error);
}
