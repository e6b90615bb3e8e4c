#pragma once

#include <algorithm>

#include "acf/error.hpp"
#include "acf/numeric/integer.hpp"

namespace acf {

/// Closed rational interval [lo, hi] certified to contain a real value.
struct Enclosure {
  Rational lo;
  Rational hi;

  Rational width() const { return hi - lo; }
  bool contains(const Rational& v) const { return lo <= v && v <= hi; }
  bool contains_zero() const { return lo <= 0 && hi >= 0; }
  Rational midpoint() const { return (lo + hi) / 2; }

  /// True when width <= 2^(1-p).
  bool within(long p) const {
    Rational w = width();
    if (p >= 1) {
      mpq_mul_2exp(w.get_mpq_t(), w.get_mpq_t(), static_cast<unsigned long>(p - 1));
    } else {
      mpq_div_2exp(w.get_mpq_t(), w.get_mpq_t(), static_cast<unsigned long>(1 - p));
    }
    return w <= 1;
  }

  /// Widens to endpoints on the grid 2^-p so the numbers stay small.
  Enclosure rounded(long p) const {
    const Integer scale = pow2(static_cast<unsigned long>(p));
    Rational l(floor_q(lo * scale), scale);
    Rational h(ceil_q(hi * scale), scale);
    l.canonicalize();
    h.canonicalize();
    return {l, h};
  }

  static Enclosure point(const Rational& v) { return {v, v}; }
};

inline Enclosure operator+(const Enclosure& a, const Enclosure& b) {
  return {a.lo + b.lo, a.hi + b.hi};
}

inline Enclosure operator-(const Enclosure& a) { return {-a.hi, -a.lo}; }

inline Enclosure operator-(const Enclosure& a, const Enclosure& b) { return a + (-b); }

inline Enclosure operator*(const Enclosure& a, const Enclosure& b) {
  const Rational c[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
  return {*std::min_element(c, c + 4), *std::max_element(c, c + 4)};
}

inline Enclosure recip(const Enclosure& a) {
  if (a.contains_zero()) throw zero_division();
  return {1 / a.hi, 1 / a.lo};
}

inline Enclosure abs(const Enclosure& a) {
  if (a.lo >= 0) return a;
  if (a.hi <= 0) return -a;
  return {Rational(0), std::max(Rational(-a.lo), a.hi)};
}

}  // namespace acf
