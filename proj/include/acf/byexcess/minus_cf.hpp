#pragma once

#include <cstddef>
#include <vector>

#include "acf/error.hpp"
#include "acf/numeric/real_value.hpp"

namespace acf {

/// By-excess (alpha = 0) expansion x = 1/b_1 - 1/b_2 - 1/b_3 - ... of a point
/// in (0,1]. The map A_0(x) = floor(1/x + 1) - 1/x sends 1/n to 1, and 1 is a
/// fixed point with digit 2, so rational orbits end in an infinite run of 2's.
///
/// Only one-sided approximations arise: x - p*_n/q*_n > 0 for every n. The
/// regular convergents a by-excess expansion skips over are recovered through
/// the dictionary in dictionary.hpp.
struct MinusExpansion {
  RealValue x;    // the input
  RealValue x0;   // its representative in (0,1]
  std::vector<Integer> digits;      // b_1..b_N
  std::vector<RealValue> remainders;  // x_0..x_N
  std::vector<Integer> p_star;      // p*_0..p*_N
  std::vector<Integer> q_star;      // q*_0..q*_N
  std::vector<RealValue> betas;     // beta*_0..beta*_N
  bool reached_one = false;
  std::size_t one_index = 0;        // first n with x_n = 1, if reached_one

  std::size_t size() const { return digits.size(); }
  bool exact() const { return x.is_exact(); }
};

struct MinusStep {
  Integer b;
  RealValue next;
};

/// b = floor(1/x + 1), next = b - 1/x.
inline MinusStep minus_step(const RealValue& x, const Precision& prec = {}) {
  if (sign(x, prec) <= 0 || compare(x, RealValue(1), prec) > 0)
    throw domain_error("minus_step: x outside (0, 1]");
  const RealValue inv = recip(x);
  Integer b = floor(inv + RealValue(1), prec);
  RealValue next = RealValue(b) - inv;
  return {std::move(b), std::move(next)};
}

/// x - floor(x), with integers sent to 1.
inline RealValue unit_reduce(const RealValue& x, const Precision& prec = {}) {
  const RealValue r = x - RealValue(floor(x, prec));
  return sign(r, prec) == 0 ? RealValue(1) : r;
}

namespace detail {

inline bool is_one(const RealValue& v) {
  const Rational* q = v.as_rational();
  return q && *q == 1;
}

inline void push_star(MinusExpansion& e, const Integer& b) {
  const std::size_t n = e.p_star.size();
  const Integer p_prev = n >= 2 ? e.p_star[n - 2] : Integer(-1);
  const Integer q_prev = n >= 2 ? e.q_star[n - 2] : Integer(0);
  e.p_star.push_back(b * e.p_star.back() - p_prev);
  e.q_star.push_back(b * e.q_star.back() - q_prev);
}

}  // namespace detail

/// Iterates minus_step from the reduction of x into (0,1]. Convergents use the
/// seeds p*_{-1} = -1, q*_{-1} = 0, p*_0 = 0, q*_0 = 1, so p*_1/q*_1 = 1/b_1
/// and p*_n q*_{n-1} - p*_{n-1} q*_n = 1. Once a remainder equals 1 the
/// remaining digits are 2 and are filled in without further arithmetic.
inline MinusExpansion minus_expand(const RealValue& x, std::size_t max_digits, const Precision& prec = {}) {
  MinusExpansion e;
  e.x = x;
  e.x0 = unit_reduce(x, prec);
  e.remainders.push_back(e.x0);
  e.p_star.push_back(0);
  e.q_star.push_back(1);
  e.betas.push_back(e.x0);
  if (detail::is_one(e.x0)) e.reached_one = true;

  if (x.is_exact()) {
    while (e.digits.size() < max_digits) {
      if (e.reached_one) {
        e.digits.emplace_back(2);
        e.remainders.emplace_back(1);
      } else {
        MinusStep st = minus_step(e.remainders.back(), prec);
        e.digits.push_back(std::move(st.b));
        if (detail::is_one(st.next)) {
          e.reached_one = true;
          e.one_index = e.digits.size();
        }
        e.remainders.push_back(std::move(st.next));
      }
      detail::push_star(e, e.digits.back());
      e.betas.push_back(RealValue(e.q_star.back()) * e.x0 - RealValue(e.p_star.back()));
    }
    return e;
  }

  // Adaptive: 1/x_n = beta*_{n-1}/beta*_n with beta*_n = q*_n x0 - p*_n, read
  // off one enclosure of x0 through the exact convergents.
  long bits = prec.start_bits;
  Integer lo, hi, unit;
  auto fetch = [&] {
    const Enclosure enc = e.x0.enclose(bits).rounded(bits);
    unit = pow2(static_cast<unsigned long>(bits));
    lo = floor_q(enc.lo * unit);
    hi = ceil_q(enc.hi * unit);
  };
  fetch();
  while (e.digits.size() < max_digits) {
    const std::size_t n = e.q_star.size() - 1;
    const Integer p_prev = n >= 1 ? e.p_star[n - 1] : Integer(-1);
    const Integer q_prev = n >= 1 ? e.q_star[n - 1] : Integer(0);
    const Integer num_lo = q_prev * lo - p_prev * unit, num_hi = q_prev * hi - p_prev * unit;
    const Integer den_lo = e.q_star[n] * lo - e.p_star[n] * unit;
    const Integer den_hi = e.q_star[n] * hi - e.p_star[n] * unit;
    bool certified = den_lo > 0 && num_lo > 0;
    Integer b;
    if (certified) {
      Rational r_lo(num_lo, den_hi), r_hi(num_hi, den_lo);
      r_lo.canonicalize();
      r_hi.canonicalize();
      const Rational s_lo = r_lo + 1;
      b = floor_q(s_lo);
      certified = b == floor_q(Rational(r_hi + 1)) && !is_integer(s_lo);
    }
    if (!certified) {
      bits *= 2;
      if (bits > prec.cap_bits) throw needs_precision(prec.cap_bits, "digit not certified");
      fetch();
      continue;
    }
    e.digits.push_back(b);
    detail::push_star(e, b);
    const RealValue beta = RealValue(e.q_star.back()) * e.x0 - RealValue(e.p_star.back());
    e.remainders.push_back(beta / e.betas.back());
    e.betas.push_back(beta);
  }
  return e;
}

/// Runs of 2's in a by-excess digit prefix. With b_1..b_N given, runs[i] = n_i
/// counts a block of (n_i - 1) twos closed by a digit > 2, t_j = n_1 + ... + n_j - 1
/// is the remainder index before the j-th closing digit, I_** = {t_j} are the
/// indices n < N with x_n <= 1/2 and I_* the rest.
struct RunDecomposition {
  std::vector<std::size_t> runs;
  std::vector<std::size_t> t;
  std::vector<std::size_t> i_star;
  std::vector<std::size_t> i_starstar;
  std::size_t open_run = 0;  // trailing 2's not yet closed

  bool has_open_run() const { return open_run > 0; }
};

inline RunDecomposition run_decomposition(const std::vector<Integer>& b) {
  RunDecomposition r;
  std::size_t pending = 0;
  for (std::size_t k = 0; k < b.size(); ++k) {
    if (b[k] < 2) throw malformed_stream("by-excess digits must be >= 2");
    if (b[k] == 2) {
      ++pending;
      r.i_star.push_back(k);
    } else {
      r.runs.push_back(pending + 1);
      r.t.push_back(k);
      r.i_starstar.push_back(k);
      pending = 0;
    }
  }
  r.open_run = pending;
  return r;
}

/// Indices n whose by-excess convergent p*_n/q*_n passes |x0 - p/q| < 1/(2 q^2).
inline std::vector<std::size_t> legendre_filter(const MinusExpansion& e) {
  if (!e.exact()) throw exactness_unavailable();
  std::vector<std::size_t> out;
  for (std::size_t n = 0; n < e.q_star.size(); ++n) {
    const RealValue d = abs(e.x0 - RealValue(Rational(e.p_star[n], e.q_star[n])));
    if (d < RealValue(Rational(Integer(1), Integer(2 * e.q_star[n] * e.q_star[n])))) out.push_back(n);
  }
  return out;
}

}  // namespace acf
