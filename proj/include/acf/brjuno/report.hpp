#pragma once

#include <cmath>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "acf/analysis/corpus.hpp"
#include "acf/brjuno/residual.hpp"

namespace acf {

namespace constants {

inline const double g = (std::sqrt(5.0) - 1) / 2;

/// sum_{n>=1} 1/F_n.
inline constexpr double reciprocal_fibonacci = 3.359885666243177553;

/// Bound on sum_{n>=1} log q_n / q_n for regular denominators.
inline double log_q_sum_bound() { return 2 / std::numbers::e * (3 + std::sqrt(2.0) * g / (1 - std::sqrt(g))); }

/// sum log(q_{n+1}/a_{n+1}) / q_n <= log 2 sum 1/q_n + sum_{n>=1} log q_n / q_n.
inline double logq_vs_loga() { return std::log(2.0) * reciprocal_fibonacci + log_q_sum_bound(); }

/// |B_0 - sum log(b_{n+1}-1)/q*_n|: 2 from the I_* blocks, 4 log 2 + 2/(sqrt2-1)
/// + log 2 + 2 sqrt2/(sqrt2-1) on I_**, and sqrt2/(sqrt2-1) + 2 log(3/2) for
/// trading log q*_{n+1} against log(b_{n+1}-1).
inline double semi_brjuno_bound() {
  const double s = std::sqrt(2.0), l2 = std::log(2.0);
  return 2 + 4 * l2 + 2 / (s - 1) + l2 + 2 * s / (s - 1) + s / (s - 1) + 2 * std::log(1.5);
}

/// |B^N_{alpha,u} - q-series| from the two regimes x_n > delta and x_n < delta.
inline double q_series_bound(const Rational& alpha, const SingularityU& u) {
  const double a = to_double(alpha), abar = to_double(AlphaParams(alpha).alpha_bar());
  const double geo = abar / (1 - to_double(rho_alpha(alpha))) + 1;
  const double geo_q = 1 + (1 + a) * abar / (1 - to_double(rho_alpha(alpha)));
  return u.M1 * geo + u.M1 * geo_q + 2 * u.M3 * geo + (u.M2 + 2 * u.M3) * geo;
}

}  // namespace constants

enum class DiffKind { alpha_vs_1, b0_vs_qseries, b1_vs_b0even, logq_vs_loga, brjuno_vs_qseries };

inline const char* to_string(DiffKind k) {
  switch (k) {
    case DiffKind::alpha_vs_1: return "alpha_vs_1";
    case DiffKind::b0_vs_qseries: return "b0_vs_qseries";
    case DiffKind::b1_vs_b0even: return "b1_vs_b0even";
    case DiffKind::logq_vs_loga: return "logq_vs_loga";
    case DiffKind::brjuno_vs_qseries: return "brjuno_vs_qseries";
  }
  return "";
}

inline DiffKind parse_diff_kind(const std::string& s) {
  for (DiffKind k : {DiffKind::alpha_vs_1, DiffKind::b0_vs_qseries, DiffKind::b1_vs_b0even,
                     DiffKind::logq_vs_loga, DiffKind::brjuno_vs_qseries})
    if (s == to_string(k)) return k;
  throw parse_error("unknown sweep kind '" + s + "'");
}

struct DiffConfig {
  DiffKind kind = DiffKind::alpha_vs_1;
  Rational alpha{1};
  Rational alpha_prime{1};
  SingularityU u = make_u("log");
  std::size_t N = 200;                          // alpha > 0 truncation
  std::size_t b0_digits = default_b0_digits;    // by-excess digit budget
  std::optional<double> threshold;
};

/// Observed supremum of a difference over a corpus. `values` are at (N, b0_digits);
/// `stable` compares the supremum with the one at twice both budgets. For
/// logq_vs_loga, `aux` holds the per-sample sum_{n>=1} log q_n / q_n.
struct BoundReport {
  std::string kind;
  Rational alpha;
  std::string u;
  std::size_t N = 0;
  std::size_t corpus_size = 0;
  std::vector<double> values;
  double observed_sup = 0;
  double doubled_sup = 0;
  double threshold = 0;
  bool stable = true;
  std::string worst_input;
  std::vector<double> aux;
  double aux_sup = 0;
  double aux_threshold = 0;

  bool within() const { return stable && observed_sup <= threshold && aux_sup <= aux_threshold; }
};

inline double default_threshold(const DiffConfig& c) {
  switch (c.kind) {
    case DiffKind::alpha_vs_1:
    case DiffKind::b1_vs_b0even: return 1e3;
    case DiffKind::b0_vs_qseries: return constants::semi_brjuno_bound();
    case DiffKind::logq_vs_loga: return constants::logq_vs_loga();
    case DiffKind::brjuno_vs_qseries: return constants::q_series_bound(c.alpha, c.u);
  }
  return 0;
}

namespace detail {

struct SampleDiff {
  double value;
  double aux = 0;
};

inline SampleDiff sample_diff(const DiffConfig& c, const RealValue& x, std::size_t N, std::size_t digits) {
  switch (c.kind) {
    case DiffKind::alpha_vs_1:
      return {std::fabs(brjuno_sum(x, c.alpha, c.u, N).value - brjuno_sum(x, c.alpha_prime, c.u, N).value)};
    case DiffKind::brjuno_vs_qseries: {
      const BrjunoResult r = brjuno_sum(x, c.alpha, c.u, N);
      return {std::fabs(r.value - *r.companion_q_series)};
    }
    case DiffKind::b0_vs_qseries: {
      const SemiBrjunoResult r = semi_brjuno(x, digits);
      return {std::fabs(r.value - r.q_series)};
    }
    case DiffKind::b1_vs_b0even: {
      static const SingularityU log_u = make_u("log");
      return {std::fabs(brjuno_sum(x, Rational(1), log_u, N).value - b0_even(x, digits))};
    }
    case DiffKind::logq_vs_loga: {
      const AlphaExpansion e = alpha_expand(x, AlphaParams(Rational(1)), N + 1);
      double diff = 0, log_q = 0;
      for (std::size_t n = 0; n < e.digits.size(); ++n) {
        const double inv_q = reciprocal_of(e.convergents[n].q);
        diff += (log_of(e.convergents[n + 1].q) - log_of(e.digits[n].a)) * inv_q;
        if (n >= 1) log_q += log_of(e.convergents[n].q) * inv_q;
      }
      return {std::fabs(diff), log_q};
    }
  }
  return {0};
}

}  // namespace detail

inline BoundReport diff_report(const DiffConfig& c, const std::vector<Sample>& corpus) {
  BoundReport r;
  r.kind = to_string(c.kind);
  r.alpha = c.alpha;
  r.u = c.kind == DiffKind::b0_vs_qseries || c.kind == DiffKind::logq_vs_loga ? "log" : c.u.name;
  r.N = c.kind == DiffKind::b0_vs_qseries ? c.b0_digits : c.N;
  r.corpus_size = corpus.size();
  r.threshold = c.threshold.value_or(default_threshold(c));
  if (c.kind == DiffKind::logq_vs_loga) r.aux_threshold = constants::log_q_sum_bound();
  for (const auto& s : corpus) {
    const auto d = detail::sample_diff(c, s.x, c.N, c.b0_digits);
    const auto d2 = detail::sample_diff(c, s.x, 2 * c.N, 2 * c.b0_digits);
    r.values.push_back(d.value);
    if (r.worst_input.empty() || d.value > r.observed_sup) {
      r.observed_sup = d.value;
      r.worst_input = s.label;
    }
    r.doubled_sup = std::max(r.doubled_sup, d2.value);
    if (c.kind == DiffKind::logq_vs_loga) {
      r.aux.push_back(d.aux);
      r.aux_sup = std::max({r.aux_sup, d.aux, d2.aux});
    }
  }
  r.stable = std::fabs(r.doubled_sup - r.observed_sup) < 1e-6 * (1 + r.observed_sup);
  return r;
}

}  // namespace acf
