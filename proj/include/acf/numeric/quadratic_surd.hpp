#pragma once

#include <compare>
#include <numeric>
#include <string>

#include "acf/error.hpp"
#include "acf/numeric/enclosure.hpp"
#include "acf/numeric/integer.hpp"

namespace acf {

/// Exact real (a + b*sqrt(d)) / c with d square-free, b != 0, c > 0 and
/// gcd(a, b, c) = 1. Values with b = 0 are rational and never stored here.
class QuadraticSurd {
 public:
  /// Brings (a + b*sqrt(d)) / c into canonical form.
  static QuadraticSurd canonicalize(Integer a, Integer b, Integer c, const Integer& d) {
    if (d <= 0) throw invalid_radicand();
    if (c == 0) throw zero_division();
    auto [s, r] = square_split(d);
    b *= s;
    if (r == 1) {
      a += b;
      b = 0;
    }
    return reduce(std::move(a), std::move(b), std::move(c), std::move(r));
  }

  /// Same as canonicalize for a radicand already known to be square-free.
  static QuadraticSurd reduce(Integer a, Integer b, Integer c, Integer d) {
    if (c == 0) throw zero_division();
    if (b == 0) throw not_a_surd();
    if (c < 0) {
      a = -a;
      b = -b;
      c = -c;
    }
    Integer g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g != 1) {
      mpz_divexact(a.get_mpz_t(), a.get_mpz_t(), g.get_mpz_t());
      mpz_divexact(b.get_mpz_t(), b.get_mpz_t(), g.get_mpz_t());
      mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    }
    return QuadraticSurd(std::move(a), std::move(b), std::move(c), std::move(d));
  }

  const Integer& a() const { return a_; }
  const Integer& b() const { return b_; }
  const Integer& c() const { return c_; }
  const Integer& d() const { return d_; }

  /// Sign of A + B*sqrt(d) for integers A, B; never zero unless A = B = 0.
  static int sign_of(const Integer& A, const Integer& B, const Integer& d) {
    const int sa = sgn(A);
    const int sb = sgn(B);
    if (sb == 0) return sa;
    if (sa == 0 || sa == sb) return sb;
    // Opposite signs: compare A^2 with B^2 d.
    const Integer lhs = A * A;
    const Integer rhs = B * B * d;
    return lhs > rhs ? sa : sb;
  }

  int sign() const { return sign_of(a_, b_, d_); }

  Integer floor() const {
    const Integer s = isqrt(b_ * b_ * d_);
    // b*sqrt(d) is irrational, strictly between consecutive integers.
    return b_ > 0 ? floor_div(a_ + s, c_) : floor_div(a_ - s - 1, c_);
  }

  QuadraticSurd operator-() const { return QuadraticSurd(-a_, -b_, c_, d_); }

  QuadraticSurd plus(const Rational& r) const {
    const Integer& p = r.get_num();
    const Integer& q = r.get_den();
    return reduce(a_ * q + p * c_, b_ * q, c_ * q, d_);
  }

  QuadraticSurd times(const Rational& r) const {
    if (r == 0) throw not_a_surd();
    return reduce(a_ * r.get_num(), b_ * r.get_num(), c_ * r.get_den(), d_);
  }

  QuadraticSurd recip() const {
    // c / (a + b sqrt d) = c (a - b sqrt d) / (a^2 - b^2 d); the norm is never 0.
    const Integer norm = a_ * a_ - b_ * b_ * d_;
    return reduce(c_ * a_, -c_ * b_, norm, d_);
  }

  /// Sign of (this - r), exact.
  int compare(const Rational& r) const {
    // (a + b sqrt d)/c - p/q has the sign of (a q - p c) + b q sqrt d.
    return sign_of(a_ * r.get_den() - r.get_num() * c_, b_ * r.get_den(), d_);
  }

  /// Sign of (this - other) when both share the radicand.
  int compare_same_radicand(const QuadraticSurd& o) const {
    return sign_of(a_ * o.c_ - o.a_ * c_, b_ * o.c_ - o.b_ * c_, d_);
  }

  /// Certified enclosure of width at most 2^(1-p).
  Enclosure enclose(long p) const {
    const long q = std::max(p, 0L) + 2;
    const Integer scale = pow2(static_cast<unsigned long>(2 * q));
    const Integer s = isqrt(b_ * b_ * d_ * scale);  // floor(|b| sqrt(d) 2^q)
    const Integer unit = pow2(static_cast<unsigned long>(q));
    Rational lo, hi;
    if (b_ > 0) {
      lo = Rational(a_ * unit + s, unit * c_);
      hi = Rational(a_ * unit + s + 1, unit * c_);
    } else {
      lo = Rational(a_ * unit - s - 1, unit * c_);
      hi = Rational(a_ * unit - s, unit * c_);
    }
    lo.canonicalize();
    hi.canonicalize();
    return Enclosure{lo, hi}.rounded(q);
  }

  std::string to_string() const {
    std::string s = "(" + a_.get_str() + (b_ < 0 ? "-" : "+") + Integer(abs(b_)).get_str() +
                    "*sqrt(" + d_.get_str() + "))";
    if (c_ != 1) s += "/" + c_.get_str();
    return s;
  }

  friend bool operator==(const QuadraticSurd& x, const QuadraticSurd& y) {
    return x.a_ == y.a_ && x.b_ == y.b_ && x.c_ == y.c_ && x.d_ == y.d_;
  }

 private:
  QuadraticSurd(Integer a, Integer b, Integer c, Integer d)
      : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {}

  Integer a_, b_, c_, d_;
};

}  // namespace acf
