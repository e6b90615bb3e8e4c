#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numeric>

#include "acf/brjuno.hpp"

using namespace acf;

namespace {

const RealValue g = RealValue::surd(-1, 1, 2, 5);
const RealValue g2 = RealValue::surd(3, -1, 2, 5);
const RealValue s2 = RealValue::surd(-1, 1, 1, 2);
const SingularityU lg = make_u("log");
const SingularityU isq = make_u("inv_sqrt");

// Closed forms from constant orbits: x_n = c for all n gives a geometric series.
const double gd = (std::sqrt(5.0) - 1) / 2;
const double b1_g = -std::log(gd) / (1 - gd);
const double b1_s2 = -std::log(std::sqrt(2.0) - 1) / (2 - std::sqrt(2.0));
const double bhalf_g = -2 * std::log(gd) / gd;
const double b0_g = -3 * std::log(gd);
const double b0_g2 = -2 * std::log(gd) / gd;

std::vector<double> fib(int n) {
  std::vector<double> f = {0, 1};
  while (static_cast<int>(f.size()) <= n) f.push_back(f[f.size() - 1] + f[f.size() - 2]);
  return f;
}

std::vector<double> ranks(const std::vector<double>& v) {
  std::vector<std::size_t> idx(v.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](auto a, auto b) { return v[a] < v[b]; });
  std::vector<double> r(v.size());
  for (std::size_t k = 0; k < idx.size(); ++k) r[idx[k]] = static_cast<double>(k);
  return r;
}

double pearson(const std::vector<double>& a, const std::vector<double>& b) {
  const double n = static_cast<double>(a.size());
  const double ma = std::accumulate(a.begin(), a.end(), 0.0) / n, mb = std::accumulate(b.begin(), b.end(), 0.0) / n;
  double sab = 0, saa = 0, sbb = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    sab += (a[i] - ma) * (b[i] - mb);
    saa += (a[i] - ma) * (a[i] - ma);
    sbb += (b[i] - mb) * (b[i] - mb);
  }
  return sab / std::sqrt(saa * sbb);
}

}  // namespace

TEST(Weight, Constants) {
  EXPECT_NEAR(lg.M2, 0.1 * std::log(10.0), 1e-12);
  EXPECT_NEAR(lg.M1, std::log(11.0), 1e-9);
  EXPECT_NEAR(lg.M3, 0.1, 1e-12);
  EXPECT_NEAR(isq.M2, std::sqrt(0.1), 1e-12);
  EXPECT_NEAR(isq.M3, 0.5 * std::sqrt(0.1), 1e-12);
  EXPECT_NEAR(lg.M4(0.5), std::log(2.0), 1e-12);
}

TEST(Weight, Conditions) {
  EXPECT_THROW(make_power_u(0.5), condition_violation);
  EXPECT_THROW(make_u("power(1)"), condition_violation);
  EXPECT_NO_THROW(make_u("power(2)"));
  EXPECT_THROW(make_u("cosh"), parse_error);
  EXPECT_THROW(make_u("power(x)"), parse_error);
  EXPECT_THROW(make_u("inv_square", [](double x) { return 1 / (x * x); },
                      [](double x) { return -2 / (x * x * x); }),
               condition_violation);
  EXPECT_NO_THROW(make_u("inv", [](double x) { return 1 / x; }, [](double x) { return -1 / (x * x); }));
  EXPECT_THROW(make_u("bounded", [](double x) { return 2 - x; }, [](double) { return -1.0; }),
               condition_violation);
}

TEST(BrjunoSum, ClosedForms) {
  EXPECT_NEAR(brjuno_sum(g, Rational(1), lg, 60).value, b1_g, 1e-9);
  EXPECT_NEAR(brjuno_sum(s2, Rational(1), lg, 60).value, b1_s2, 1e-9);
  EXPECT_NEAR(brjuno_sum(g, Rational(1, 2), lg, 60).value, bhalf_g, 1e-9);
  EXPECT_NEAR(brjuno_sum(g, Rational(1), isq, 60).value, 1 / std::sqrt(gd) / (1 - gd), 1e-9);
  EXPECT_NEAR(b1_g, 1.259829, 1e-6);
  EXPECT_NEAR(b1_s2, 1.504598, 1e-6);
}

TEST(BrjunoSum, Diagnostics) {
  const auto r = brjuno_sum(g, Rational(1), lg, 200);
  EXPECT_TRUE(r.converged);
  EXPECT_GE(r.tail_estimate, 0);
  EXPECT_EQ(r.terms.size(), 201u);
  double s = 0;
  for (const auto& t : r.terms) {
    EXPECT_GE(t.term, 0);
    s += t.term;
  }
  EXPECT_DOUBLE_EQ(s, r.value);
  EXPECT_FALSE(brjuno_sum(g, Rational(1), lg, 10).converged);
  EXPECT_THROW(brjuno_sum(g, Rational(0), lg, 10), domain_error);
}

TEST(BrjunoSum, RationalsTerminate) {
  const auto r = brjuno_sum(RealValue(Rational(1, 2)), Rational(1), lg, 50);
  EXPECT_NEAR(r.value, std::log(2.0), 1e-15);
  EXPECT_TRUE(r.converged);
  EXPECT_EQ(r.tail_estimate, 0);
  // 5/7 = [0; 1, 2, 2]: remainders 5/7, 2/5, 1/2.
  const double v = -std::log(5.0 / 7) + (5.0 / 7) * -std::log(0.4) + (2.0 / 7) * -std::log(0.5);
  EXPECT_NEAR(brjuno_sum(RealValue(Rational(5, 7)), Rational(1), lg, 50).value, v, 1e-14);
  EXPECT_EQ(brjuno_sum(RealValue(3), Rational(1), lg, 50).value, 0);
}

TEST(BrjunoSum, PeriodicAndReflected) {
  const double a = brjuno_sum(g, Rational(1), lg, 100).value;
  EXPECT_NEAR(brjuno_sum(g + RealValue(4), Rational(1), lg, 100).value, a, 1e-12);
  // Parity on (0, min(alpha, 1-alpha)).
  const RealValue x(Rational(3, 10));
  EXPECT_NEAR(brjuno_sum(-x, Rational(2, 5), lg, 100).value, brjuno_sum(x, Rational(2, 5), lg, 100).value, 1e-14);
}

TEST(BrjunoSum, MonotoneTruncation) {
  for (const auto& s : make_corpus(60, 5))
    for (const Rational& a : {Rational(1, 10), Rational(1, 2), Rational(1)}) {
      double prev = -1;
      for (std::size_t N : {0, 1, 2, 5, 10, 20, 40}) {
        const double v = brjuno_sum(s.x, a, isq, N).value;
        ASSERT_GE(v, prev) << s.label;
        prev = v;
      }
    }
}

TEST(BrjunoSum, AdaptiveMatchesExact) {
  const RealValue ad(g.to_adaptive());
  EXPECT_NEAR(brjuno_sum(ad, Rational(1, 2), lg, 60).value, bhalf_g, 1e-9);
}

TEST(QSeries, Examples) {
  EXPECT_EQ(q_series(g, Rational(1), lg, 60), 0.0);
  // sqrt(2)-1 = [0; 2, 2, ...]: Pell denominators 1, 2, 5, 12, 29, ...
  double pell = 0, q0 = 1, q1 = 2;
  pell += 1 / q0;
  for (int n = 1; n <= 40; ++n) {
    pell += 1 / q1;
    const double q2 = 2 * q1 + q0;
    q0 = q1;
    q1 = q2;
  }
  EXPECT_NEAR(q_series(s2, Rational(1), lg, 40), std::log(2.0) * pell, 1e-12);
  // 5/7 = [0; 1, 2, 2] with q = 1, 1, 3: log 2 (1/1 + 1/3).
  EXPECT_NEAR(q_series(RealValue(Rational(5, 7)), Rational(1), lg, 40), std::log(2.0) * (1 + 1.0 / 3), 1e-14);
}

TEST(SemiBrjuno, ClosedForms) {
  EXPECT_NEAR(semi_brjuno(g, 60).value, b0_g, 1e-9);
  EXPECT_NEAR(semi_brjuno(g2, 60).value, b0_g2, 1e-9);
  EXPECT_NEAR(b0_g, 1.443635, 1e-6);
  const double v57 = std::log(7.0 / 5) + (5.0 / 7) * std::log(5.0 / 3) + (3.0 / 7) * std::log(3.0);
  const auto r = semi_brjuno(RealValue(Rational(5, 7)), 60);
  EXPECT_NEAR(r.value, v57, 1e-14);
  EXPECT_TRUE(r.reached_one);
  EXPECT_TRUE(r.converged);
  EXPECT_NEAR(semi_brjuno(RealValue(Rational(1, 2))).value, std::log(2.0), 1e-15);
  EXPECT_EQ(semi_brjuno(RealValue(2)).value, 0);
  EXPECT_NEAR(semi_brjuno(g - RealValue(3)).value, b0_g, 1e-9);
}

TEST(SemiBrjuno, RunStrideMatchesDirect) {
  for (const auto& s : random_rationals(300, 41, 3000)) {
    const auto walk = semi_brjuno(s.x, 8000);
    const auto direct = semi_brjuno_direct(minus_expand(s.x, 8001), 8000);
    ASSERT_TRUE(walk.reached_one && direct.reached_one) << s.label;
    EXPECT_NEAR(walk.value, direct.value, 1e-12) << s.label;
    EXPECT_NEAR(walk.i_star_sum, direct.i_star_sum, 1e-12) << s.label;
    EXPECT_NEAR(walk.q_series, direct.q_series, 1e-12) << s.label;
  }
  for (const auto& s : surd_panel()) {
    const auto walk = semi_brjuno(s.x, 3000);
    const auto direct = semi_brjuno_direct(minus_expand(s.x, 3001), 3000);
    EXPECT_NEAR(walk.value, direct.value, 1e-12) << s.label;
    EXPECT_NEAR(walk.q_series, direct.q_series, 1e-12) << s.label;
  }
  // A budget that ends inside a run.
  const RealValue x(Rational(999, 1000));
  const auto a = semi_brjuno(x, 100), b = semi_brjuno_direct(minus_expand(x, 101), 100);
  EXPECT_NEAR(a.value, b.value, 1e-13);
  EXPECT_FALSE(a.reached_one);
}

TEST(SemiBrjuno, AdaptiveInput) {
  EXPECT_NEAR(semi_brjuno(RealValue(g.to_adaptive()), 200).value, b0_g, 1e-9);
}

TEST(SemiBrjuno, IStarBlocksBoundedByTwo) {
  for (const auto& s : make_corpus(520, 23)) {
    const auto r = semi_brjuno(s.x, 1u << 20);
    EXPECT_LE(r.i_star_sum, 2.0) << s.label;
  }
}

TEST(B0QSeries, FibonacciOracles) {
  const auto f = fib(80);
  double odd = 0, even = 0;
  for (int n = 1; 2 * n + 1 <= 80; ++n) odd += 1 / f[2 * n + 1];
  for (int n = 1; 2 * n <= 80; ++n) even += 1 / f[2 * n];
  EXPECT_NEAR(b0_qseries(g, 200), std::log(2.0) * odd, 1e-12);
  EXPECT_NEAR(b0_qseries(g2, 200), std::log(2.0) * even, 1e-12);
  EXPECT_NEAR(b0_qseries(g, 200), 0.5715, 1e-4);
  // 1 - 1/1000 has digits 2 (998 times), then 3: only the last one counts.
  EXPECT_NEAR(b0_qseries(RealValue(Rational(999, 1000))), std::log(2.0) / 999, 1e-15);
}

TEST(B0Even, Examples) {
  EXPECT_NEAR(b0_even(g), b0_g + b0_g2, 1e-9);
  EXPECT_NEAR(b0_even(g2), b0_g + b0_g2, 1e-9);
  EXPECT_NEAR(b0_even(RealValue(Rational(1, 2))), 2 * std::log(2.0), 1e-15);
  EXPECT_THROW(b0_even(RealValue(4)), domain_error);
  for (const auto& s : random_rationals(50, 8, 5000))
    EXPECT_NEAR(b0_even(s.x), b0_even(RealValue(1) - s.x), 1e-12);
}

TEST(Residual, Examples) {
  EXPECT_LT(functional_residual(ResidualKind::b0_eq, g, Rational(1), lg, 200), 1e-12);
  EXPECT_LT(functional_residual(ResidualKind::alpha_eq, g, Rational(1), lg, 200), 1e-12);
  EXPECT_LT(functional_residual(ResidualKind::alpha_eq, RealValue(Rational(1, 2)), Rational(1), lg, 200), 1e-15);
  EXPECT_THROW(functional_residual(ResidualKind::alpha_eq, g2, Rational(1, 4), lg, 200), domain_error);
  EXPECT_THROW(functional_residual(ResidualKind::alpha_eq, RealValue(Rational(3, 5)), Rational(1, 2), lg, 200),
               domain_error);
  EXPECT_THROW(functional_residual(ResidualKind::b0_eq, RealValue(Rational(3, 2)), Rational(1), lg, 200),
               domain_error);
}

TEST(Residual, RandomExactInputs) {
  for (const auto& s : random_rationals(100, 77)) {
    EXPECT_LT(functional_residual(ResidualKind::b0_eq, s.x, Rational(0), lg, 200), 1e-8) << s.label;
    for (const Rational& a : {Rational(1), Rational(1, 2), Rational(3, 4)}) {
      const RealValue x = s.x < RealValue(a) ? s.x : RealValue(1) - s.x;
      if (!(x < RealValue(a))) continue;
      EXPECT_LT(functional_residual(ResidualKind::alpha_eq, x, a, isq, 200), 1e-8) << s.label;
    }
  }
}

TEST(DiffReport, Examples) {
  const std::vector<Sample> just_g = {{"g", g}};
  DiffConfig c;
  c.kind = DiffKind::b1_vs_b0even;
  auto r = diff_report(c, just_g);
  EXPECT_NEAR(r.observed_sup, b0_g + b0_g2 - b1_g, 1e-9);
  EXPECT_NEAR(r.observed_sup, 1.741039, 3e-6);
  EXPECT_TRUE(r.stable);
  EXPECT_EQ(r.worst_input, "g");

  c.kind = DiffKind::alpha_vs_1;
  c.alpha = Rational(1, 2);
  EXPECT_NEAR(diff_report(c, just_g).observed_sup, bhalf_g - b1_g, 1e-9);

  c.kind = DiffKind::logq_vs_loga;
  const auto f = fib(300);
  double oracle = 0;
  for (int n = 0; n <= 200; ++n) oracle += std::log(f[n + 2]) / f[n + 1];
  r = diff_report(c, just_g);
  EXPECT_NEAR(r.observed_sup, oracle, 1e-12);
  EXPECT_LE(r.aux_sup, constants::log_q_sum_bound());

  r = diff_report(c, {});
  EXPECT_EQ(r.observed_sup, 0);
  EXPECT_TRUE(r.within());
}

TEST(DiffReport, Constants) {
  EXPECT_NEAR(constants::semi_brjuno_bound(), 21.3477, 1e-4);
  EXPECT_NEAR(constants::log_q_sum_bound(), 5.21444, 1e-5);
  EXPECT_LT(constants::semi_brjuno_bound(), 25);
}

TEST(DiffReport, CorpusBounds) {
  const auto corpus = make_corpus(220, 9);
  DiffConfig c;
  c.b0_digits = 1u << 20;
  for (DiffKind k : {DiffKind::b0_vs_qseries, DiffKind::logq_vs_loga, DiffKind::b1_vs_b0even}) {
    c.kind = k;
    const auto r = diff_report(c, corpus);
    EXPECT_TRUE(r.within()) << r.kind << " sup " << r.observed_sup;
  }
  c.kind = DiffKind::brjuno_vs_qseries;
  for (const Rational& a : {Rational(1, 10), Rational(1, 2), Rational(1)})
    for (const SingularityU* u : {&lg, &isq}) {
      c.alpha = a;
      c.u = *u;
      const auto r = diff_report(c, corpus);
      EXPECT_TRUE(r.within()) << u->name << " sup " << r.observed_sup << " bound " << r.threshold;
    }
}

TEST(BrjunoSets, RankCorrelation) {
  std::vector<double> b1, b0p;
  for (const auto& s : make_corpus(400, 31)) {
    b1.push_back(brjuno_sum(s.x, Rational(1), lg, 200).value);
    b0p.push_back(b0_even(s.x, 1u << 20));
  }
  EXPECT_GT(pearson(ranks(b1), ranks(b0p)), 0.9);
  // Inputs in the top decile of B_1 keep B_0(x) + B_0(-x) just as large.
  const auto r1 = ranks(b1);
  for (std::size_t i = 0; i < b1.size(); ++i) {
    if (r1[i] >= 0.9 * static_cast<double>(b1.size())) {
      EXPECT_GT(b0p[i], b1[i] - 2) << i;
    }
  }
}
