#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>

#include "acf/brjuno/series.hpp"
#include "acf/byexcess/minus_cf.hpp"

namespace acf {

/// B_0 with the split of its terms over I_* (x_n > 1/2, digit 2) and
/// I_** (x_n <= 1/2), and the by-excess q-series alongside.
struct SemiBrjunoResult : BrjunoResult {
  double i_star_sum = 0;
  double i_starstar_sum = 0;
  double q_series = 0;
  bool reached_one = false;
  std::size_t ledger_dropped = 0;  // terms summed but not listed
};

inline constexpr std::size_t default_b0_digits = 10000;
inline constexpr std::size_t ledger_cap = 10000;

namespace detail {

inline void record(SemiBrjunoResult& r, const Term& t) {
  if (r.terms.size() < ledger_cap) r.terms.push_back(t);
  else ++r.ledger_dropped;
}

// Exact inputs. A run of 2's starting at x > 1/2 is taken in one stride: with
// y = 1/(1-x) the run maps y to y-1 at each step, x_{n+k} = 1 - 1/(y-k), lasts
// ceil(y)-2 steps, and beta* shrinks by (y-k-1)/(y-k) per step. q* moves along
// an arithmetic progression there and the q-series gains nothing.
inline SemiBrjunoResult walk_exact(const RealValue& x_in, std::size_t N) {
  SemiBrjunoResult r;
  r.N = N;
  RealValue x = unit_reduce(x_in);
  const RealValue half(Rational(1, 2));
  double beta = 1;
  Integer q_prev = 0, q = 1;
  std::size_t n = 0;
  while (n <= N) {
    if (is_one(x)) {
      r.reached_one = true;
      break;
    }
    if (x > half) {
      const RealValue y = recip(RealValue(1) - x);
      const Integer m = -floor(-y) - 2;
      const std::size_t room = N + 1 - n;
      const std::size_t m_eff = m > room ? room : m.get_ui();
      const RealValue rest = y - RealValue(Integer(static_cast<unsigned long>(m_eff)));
      const double rd = to_double(rest), yd = to_double(y);
      for (std::size_t k = 0; k < m_eff; ++k) {
        const double yk = rd + static_cast<double>(m_eff - k);  // y - k
        const double b = beta * (yk / yd);
        const double t = b * std::log1p(1 / (yk - 1));
        r.i_star_sum += t;
        record(r, {n + k, b, 1 - 1 / yk, t});
      }
      beta *= rd / yd;
      const Integer d = q - q_prev;
      q_prev = q + Integer((m_eff - 1) * d);
      q += Integer(m_eff * d);
      x = RealValue(1) - recip(rest);
      n += m_eff;
    } else {
      const RealValue inv = recip(x);
      const Integer b = floor(inv) + 1;
      const double xd = to_double(x);
      const double t = beta * -std::log(xd);
      r.i_starstar_sum += t;
      record(r, {n, beta, xd, t});
      r.q_series += log_of(Integer(b - 1)) * reciprocal_of(q);
      const Integer q_next = b * q - q_prev;
      q_prev = std::move(q);
      q = q_next;
      beta *= xd;
      x = RealValue(b) - inv;
      ++n;
    }
    if (beta < 1e-300) break;
  }
  r.value = r.i_star_sum + r.i_starstar_sum;
  r.tail_estimate = r.reached_one ? 0 : 2 * beta;
  r.converged = r.reached_one || beta < 1e-300;
  return r;
}

}  // namespace detail

/// Term-by-term B_0 over a MinusExpansion; used for adaptive inputs and as an
/// independent check of the run-stride walk.
inline SemiBrjunoResult semi_brjuno_direct(const MinusExpansion& e, std::size_t N) {
  SemiBrjunoResult r;
  r.N = N;
  double beta = 1;
  const std::size_t last = std::min(N, e.remainders.size() - 1);
  for (std::size_t n = 0; n <= last; ++n) {
    if (e.reached_one && n >= e.one_index) {
      r.reached_one = true;
      break;
    }
    const double xn = to_double(e.remainders[n]);
    const double t = beta * -std::log(xn);
    (e.digits[n] == 2 ? r.i_star_sum : r.i_starstar_sum) += t;
    detail::record(r, {n, beta, xn, t});
    if (n < e.digits.size() && e.digits[n] > 2)
      r.q_series += log_of(Integer(e.digits[n] - 1)) * reciprocal_of(e.q_star[n]);
    beta *= xn;
  }
  r.value = r.i_star_sum + r.i_starstar_sum;
  r.tail_estimate = r.reached_one ? 0 : 2 * beta;
  r.converged = r.reached_one;
  return r;
}

/// B_0(x) = sum_n beta*_{n-1} log(1/x_n) over the by-excess orbit of x mod 1,
/// for n = 0..N. Once a remainder is 1 every later term vanishes.
inline SemiBrjunoResult semi_brjuno(const RealValue& x, std::size_t N = default_b0_digits,
                                    const Precision& prec = {}) {
  SemiBrjunoResult r;
  if (x.is_exact()) {
    r = detail::walk_exact(x, N);
  } else {
    r = semi_brjuno_direct(minus_expand(x, N + 1, prec), N);
  }
  r.companion_q_series = r.q_series;
  return r;
}

/// sum_{n=0}^N log(b_{n+1} - 1) / q*_n.
inline double b0_qseries(const RealValue& x, std::size_t N = default_b0_digits, const Precision& prec = {}) {
  return semi_brjuno(x, N, prec).q_series;
}

/// B_0(x) + B_0(-x); -x mod 1 is 1 - frac(x).
inline double b0_even(const RealValue& x, std::size_t N = default_b0_digits, const Precision& prec = {}) {
  if (x.is_exact() && sign(x - RealValue(floor(x))) == 0) throw domain_error("b0_even: x must not be an integer");
  return semi_brjuno(x, N, prec).value + semi_brjuno(-x, N, prec).value;
}

}  // namespace acf
