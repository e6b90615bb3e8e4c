#pragma once

#include <gmpxx.h>

#include <cmath>
#include <cstdint>
#include <limits>
#include <utility>

namespace acf {

using Integer = mpz_class;
using Rational = mpq_class;

inline Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

inline Integer ceil_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

inline Integer isqrt(const Integer& n) {
  Integer r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

inline Integer pow2(unsigned long k) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, k);
  return r;
}

inline Integer floor_q(const Rational& q) {
  return floor_div(q.get_num(), q.get_den());
}

inline Integer ceil_q(const Rational& q) {
  return ceil_div(q.get_num(), q.get_den());
}

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

inline std::size_t bit_length(const Integer& n) {
  return n == 0 ? 0 : mpz_sizeinbase(n.get_mpz_t(), 2);
}

/// Splits d > 0 into (s, r) with d = s^2 * r. The radical r is square-free when
/// every prime factor of d below the trial bound has been found; a leftover
/// cofactor above the bound is only checked for being a perfect square.
inline std::pair<Integer, Integer> square_split(Integer d) {
  Integer s = 1;
  Integer r = 1;
  unsigned long p = 2;
  constexpr unsigned long trial_bound = 1000000;
  while (p <= trial_bound && Integer(p) * p <= d) {
    unsigned e = 0;
    while (mpz_divisible_ui_p(d.get_mpz_t(), p)) {
      mpz_divexact_ui(d.get_mpz_t(), d.get_mpz_t(), p);
      ++e;
    }
    for (unsigned i = 0; i + 1 < e; i += 2) s *= p;
    if (e % 2 == 1) r *= p;
    p += (p == 2) ? 1 : 2;
  }
  if (d > 1) {
    if (mpz_perfect_square_p(d.get_mpz_t())) {
      s *= isqrt(d);
    } else {
      r *= d;
    }
  }
  return {s, r};
}

// Conversions that stay finite for integers far beyond the double range.
inline double log_of(const Integer& n) {
  long exp = 0;
  const double m = mpz_get_d_2exp(&exp, n.get_mpz_t());
  return std::log(std::fabs(m)) + static_cast<double>(exp) * std::log(2.0);
}

inline double reciprocal_of(const Integer& n) {
  long exp = 0;
  const double m = mpz_get_d_2exp(&exp, n.get_mpz_t());
  if (exp > std::numeric_limits<double>::max_exponent + 60) return 0.0;
  return std::ldexp(1.0 / m, static_cast<int>(-exp));
}

inline double to_double(const Rational& q) {
  long en = 0;
  long ed = 0;
  const double mn = mpz_get_d_2exp(&en, q.get_num_mpz_t());
  const double md = mpz_get_d_2exp(&ed, q.get_den_mpz_t());
  if (mn == 0.0) return 0.0;
  const long e = en - ed;
  if (e > 2000) return mn > 0 ? std::numeric_limits<double>::infinity()
                              : -std::numeric_limits<double>::infinity();
  if (e < -2000) return 0.0;
  return std::ldexp(mn / md, static_cast<int>(e));
}

}  // namespace acf
