#pragma once

#include <compare>
#include <ostream>
#include <string>
#include <variant>

#include "acf/error.hpp"
#include "acf/numeric/adaptive_real.hpp"
#include "acf/numeric/integer.hpp"
#include "acf/numeric/quadratic_surd.hpp"

namespace acf {

/// The input carrier: an exact rational, an exact quadratic surd, or an
/// adaptive real. Arithmetic between exact variants stays exact; anything that
/// touches an AdaptiveReal (or mixes radicands) becomes adaptive.
class RealValue {
 public:
  enum class Kind { rational, surd, adaptive };

  RealValue() : v_(Rational(0)) {}
  RealValue(Rational q) : v_(std::move(q)) {}  // NOLINT(google-explicit-constructor)
  RealValue(long n) : v_(Rational(n)) {}       // NOLINT(google-explicit-constructor)
  RealValue(int n) : v_(Rational(n)) {}        // NOLINT(google-explicit-constructor)
  RealValue(const Integer& n) : v_(Rational(n)) {}  // NOLINT(google-explicit-constructor)
  RealValue(QuadraticSurd s) : v_(std::move(s)) {}  // NOLINT(google-explicit-constructor)
  RealValue(AdaptiveReal a) : v_(std::move(a)) {}   // NOLINT(google-explicit-constructor)
  template <class T, class U>
  RealValue(const __gmp_expr<T, U>& e) : v_(Rational(e)) {}  // NOLINT(google-explicit-constructor)

  /// (a + b sqrt(d)) / c, collapsing to a rational when the surd part vanishes.
  static RealValue surd(const Integer& a, const Integer& b, const Integer& c, const Integer& d) {
    try {
      return QuadraticSurd::canonicalize(a, b, c, d);
    } catch (const not_a_surd&) {
      auto [s, r] = square_split(d);
      Rational q(a + (r == 1 ? b * s : Integer(0)), c);
      q.canonicalize();
      return q;
    }
  }

  Kind kind() const { return static_cast<Kind>(v_.index()); }
  bool is_exact() const { return kind() != Kind::adaptive; }

  const Rational* as_rational() const { return std::get_if<Rational>(&v_); }
  const QuadraticSurd* as_surd() const { return std::get_if<QuadraticSurd>(&v_); }
  const AdaptiveReal* as_adaptive() const { return std::get_if<AdaptiveReal>(&v_); }

  Enclosure enclose(long p) const {
    return std::visit(
        [p](const auto& v) -> Enclosure {
          using T = std::decay_t<decltype(v)>;
          if constexpr (std::is_same_v<T, Rational>) {
            return Enclosure::point(v);
          } else {
            return v.enclose(p);
          }
        },
        v_);
  }

  AdaptiveReal to_adaptive(long cap_bits = Precision{}.cap_bits) const {
    if (const auto* a = as_adaptive()) return *a;
    RealValue self = *this;
    return AdaptiveReal([self](long p) { return self.enclose(p); }, cap_bits);
  }

  std::string to_string() const {
    if (const auto* q = as_rational()) return q->get_str();
    if (const auto* s = as_surd()) return s->to_string();
    const Enclosure e = as_adaptive()->enclose(64);
    return "[" + e.lo.get_str() + ", " + e.hi.get_str() + "]";
  }

  /// Structural equality of exact values (adaptive values compare unequal).
  friend bool operator==(const RealValue& x, const RealValue& y) {
    if (x.v_.index() != y.v_.index() || !x.is_exact()) return false;
    if (const auto* q = x.as_rational()) return *q == *y.as_rational();
    return *x.as_surd() == *y.as_surd();
  }

 private:
  std::variant<Rational, QuadraticSurd, AdaptiveReal> v_;
};

inline std::ostream& operator<<(std::ostream& os, const RealValue& x) { return os << x.to_string(); }

namespace detail {

inline long cap_of(const RealValue& x, const RealValue& y) {
  long c = Precision{}.cap_bits;
  if (const auto* a = x.as_adaptive()) c = a->cap();
  if (const auto* a = y.as_adaptive()) c = std::max(c, a->cap());
  return c;
}

inline bool same_radicand(const QuadraticSurd& s, const QuadraticSurd& t) { return s.d() == t.d(); }

}  // namespace detail

inline RealValue operator-(const RealValue& x) {
  if (const auto* q = x.as_rational()) return Rational(-*q);
  if (const auto* s = x.as_surd()) return -*s;
  return adaptive::negate(*x.as_adaptive());
}

inline RealValue operator+(const RealValue& x, const RealValue& y) {
  const auto *qx = x.as_rational(), *qy = y.as_rational();
  const auto *sx = x.as_surd(), *sy = y.as_surd();
  if (qx && qy) return Rational(*qx + *qy);
  if (sx && qy) return sx->plus(*qy);
  if (qx && sy) return sy->plus(*qx);
  if (sx && sy && detail::same_radicand(*sx, *sy)) {
    return RealValue::surd(sx->a() * sy->c() + sy->a() * sx->c(),
                           sx->b() * sy->c() + sy->b() * sx->c(), sx->c() * sy->c(), sx->d());
  }
  const long cap = detail::cap_of(x, y);
  return adaptive::add(x.to_adaptive(cap), y.to_adaptive(cap));
}

inline RealValue operator-(const RealValue& x, const RealValue& y) { return x + (-y); }

inline RealValue operator*(const RealValue& x, const RealValue& y) {
  const auto *qx = x.as_rational(), *qy = y.as_rational();
  const auto *sx = x.as_surd(), *sy = y.as_surd();
  if (qx && qy) return Rational(*qx * *qy);
  if (sx && qy) return *qy == 0 ? RealValue(0) : RealValue(sx->times(*qy));
  if (qx && sy) return *qx == 0 ? RealValue(0) : RealValue(sy->times(*qx));
  if (sx && sy && detail::same_radicand(*sx, *sy)) {
    const Integer& d = sx->d();
    return RealValue::surd(sx->a() * sy->a() + sx->b() * sy->b() * d,
                           sx->a() * sy->b() + sy->a() * sx->b(), sx->c() * sy->c(), d);
  }
  const long cap = detail::cap_of(x, y);
  return adaptive::mul(x.to_adaptive(cap), y.to_adaptive(cap));
}

/// 1/x. Exact carriers raise zero_division at 0; adaptive ones refine until
/// the enclosure excludes 0 or raise needs_precision at the cap.
inline RealValue recip(const RealValue& x) {
  if (const auto* q = x.as_rational()) {
    if (*q == 0) throw zero_division();
    return Rational(1 / *q);
  }
  if (const auto* s = x.as_surd()) return s->recip();
  return adaptive::recip(*x.as_adaptive());
}

inline RealValue operator/(const RealValue& x, const RealValue& y) { return x * recip(y); }

inline RealValue abs(const RealValue& x) {
  if (const auto* q = x.as_rational()) return Rational(::abs(*q));
  if (const auto* s = x.as_surd()) return s->sign() < 0 ? RealValue(-*s) : x;
  return adaptive::abs(*x.as_adaptive());
}

/// Sign of x. Adaptive values refine from start_bits, doubling, to cap_bits.
inline int sign(const RealValue& x, const Precision& prec = {}) {
  if (const auto* q = x.as_rational()) return sgn(*q);
  if (const auto* s = x.as_surd()) return s->sign();
  for (long p = prec.start_bits; p <= prec.cap_bits; p *= 2) {
    const Enclosure e = x.enclose(p);
    if (e.lo > 0) return 1;
    if (e.hi < 0) return -1;
  }
  throw needs_precision(prec.cap_bits, "cannot separate value from zero");
}

/// Exact total order on exact carriers; refinement on adaptive ones.
inline std::strong_ordering compare(const RealValue& x, const RealValue& y,
                                    const Precision& prec = {}) {
  const auto *qx = x.as_rational(), *qy = y.as_rational();
  const auto *sx = x.as_surd(), *sy = y.as_surd();
  int s = 0;
  if (qx && qy) {
    s = cmp(*qx, *qy);
  } else if (sx && qy) {
    s = sx->compare(*qy);
  } else if (qx && sy) {
    s = -sy->compare(*qx);
  } else if (sx && sy && detail::same_radicand(*sx, *sy)) {
    s = sx->compare_same_radicand(*sy);
  } else if (sx && sy) {
    // Distinct square-free radicands: the values differ, so refinement ends.
    for (long p = 64;; p *= 2) {
      const Enclosure ex = sx->enclose(p), ey = sy->enclose(p);
      if (ex.hi < ey.lo) return std::strong_ordering::less;
      if (ey.hi < ex.lo) return std::strong_ordering::greater;
    }
  } else {
    for (long p = prec.start_bits; p <= prec.cap_bits; p *= 2) {
      const Enclosure ex = x.enclose(p), ey = y.enclose(p);
      if (ex.hi < ey.lo) return std::strong_ordering::less;
      if (ey.hi < ex.lo) return std::strong_ordering::greater;
    }
    throw needs_precision(prec.cap_bits, "cannot separate values");
  }
  return s < 0 ? std::strong_ordering::less
               : (s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

inline bool operator<(const RealValue& x, const RealValue& y) { return compare(x, y) < 0; }
inline bool operator>(const RealValue& x, const RealValue& y) { return compare(x, y) > 0; }
inline bool operator<=(const RealValue& x, const RealValue& y) { return compare(x, y) <= 0; }
inline bool operator>=(const RealValue& x, const RealValue& y) { return compare(x, y) >= 0; }

/// floor(x). Exact on exact carriers; adaptive values refine until the whole
/// enclosure sits strictly inside one integer cell, which never happens at an
/// exact integer.
inline Integer floor(const RealValue& x, const Precision& prec = {}) {
  if (const auto* q = x.as_rational()) return floor_q(*q);
  if (const auto* s = x.as_surd()) return s->floor();
  for (long p = prec.start_bits; p <= prec.cap_bits; p *= 2) {
    const Enclosure e = x.enclose(p);
    Integer lo = floor_q(e.lo);
    if (lo == floor_q(e.hi) && !is_integer(e.lo)) return lo;
  }
  throw needs_precision(prec.cap_bits, "floor not certified");
}

/// The shifted floor floor(x + 1 - alpha).
inline Integer floor_shift(const RealValue& x, const Rational& alpha, const Precision& prec = {}) {
  return floor(x + RealValue(Rational(1 - alpha)), prec);
}

/// floor_shift with a real-valued shift; exact when both carriers are exact.
inline Integer floor_shift(const RealValue& x, const RealValue& alpha, const Precision& prec = {}) {
  return floor(x + RealValue(1) - alpha, prec);
}

/// Nearest double, correct to a few ulps for every carrier.
inline double to_double(const RealValue& x) {
  if (const auto* q = x.as_rational()) return to_double(*q);
  for (long p = 64; p <= 1 << 20; p *= 2) {
    const Enclosure e = x.enclose(p);
    const double lo = to_double(e.lo), hi = to_double(e.hi);
    if (lo == hi) return lo;
    if (e.lo > 0 || e.hi < 0) {
      if (std::fabs(hi - lo) <= 1e-16 * std::max(std::fabs(lo), std::fabs(hi)))
        return to_double(e.midpoint());
    }
    if (const auto* a = x.as_adaptive(); a && p * 2 > a->cap()) return to_double(e.midpoint());
  }
  return to_double(x.enclose(1 << 20).midpoint());
}

}  // namespace acf
