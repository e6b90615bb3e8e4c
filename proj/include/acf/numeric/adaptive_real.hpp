#pragma once

#include <algorithm>
#include <functional>
#include <memory>
#include <utility>

#include "acf/error.hpp"
#include "acf/numeric/enclosure.hpp"

namespace acf {

/// Working-precision policy for adaptive computations. Operations are pure in
/// the precision they are handed; escalation doubles from `start_bits` and
/// gives up with needs_precision beyond `cap_bits`.
struct Precision {
  long start_bits = 128;
  long cap_bits = 65536;
};

/// A real number known through a rule that produces a certified enclosure
/// at any requested precision p, of width at most 2^(1-p).
class AdaptiveReal {
 public:
  using Generator = std::function<Enclosure(long)>;

  explicit AdaptiveReal(Generator g, long cap_bits = Precision{}.cap_bits)
      : gen_(std::make_shared<const Generator>(std::move(g))), cap_(cap_bits) {}

  static AdaptiveReal constant(const Rational& v, long cap_bits = Precision{}.cap_bits) {
    return AdaptiveReal([v](long) { return Enclosure::point(v); }, cap_bits);
  }

  long cap() const { return cap_; }

  /// Enclosure of width at most 2^(1-p). A generator that under-delivers is
  /// asked again with more bits until the cap.
  Enclosure enclose(long p) const {
    for (long q = p; q <= std::max(p, cap_); q += std::max(16L, q / 2)) {
      if (q > cap_) break;
      Enclosure e = (*gen_)(q);
      if (e.within(p)) return e;
    }
    throw needs_precision(cap_);
  }

 private:
  std::shared_ptr<const Generator> gen_;
  long cap_;
};

namespace adaptive {

inline AdaptiveReal negate(const AdaptiveReal& a) {
  return AdaptiveReal([a](long p) { return -a.enclose(p); }, a.cap());
}

inline AdaptiveReal add(const AdaptiveReal& a, const AdaptiveReal& b) {
  return AdaptiveReal(
      [a, b](long p) { return (a.enclose(p + 2) + b.enclose(p + 2)).rounded(p + 2); },
      std::max(a.cap(), b.cap()));
}

inline AdaptiveReal sub(const AdaptiveReal& a, const AdaptiveReal& b) {
  return add(a, negate(b));
}

inline Rational magnitude(const Enclosure& e) {
  return std::max(Rational(abs(e.lo)), Rational(abs(e.hi)));
}

inline AdaptiveReal mul(const AdaptiveReal& a, const AdaptiveReal& b) {
  return AdaptiveReal(
      [a, b](long p) {
        const Rational m = magnitude(a.enclose(4)) + magnitude(b.enclose(4)) + 1;
        const long q = p + 3 + static_cast<long>(bit_length(ceil_q(m)));
        return (a.enclose(q) * b.enclose(q)).rounded(p + 2);
      },
      std::max(a.cap(), b.cap()));
}

inline AdaptiveReal recip(const AdaptiveReal& a) {
  return AdaptiveReal(
      [a](long p) {
        // Locate |a| away from zero first, then spend the bits the
        // reciprocal's conditioning requires.
        long q = 8;
        Enclosure e = a.enclose(q);
        while (e.contains_zero()) {
          q *= 2;
          if (q > a.cap()) throw needs_precision(a.cap(), "enclosure straddles zero");
          e = a.enclose(q);
        }
        const Rational m = std::min(Rational(abs(e.lo)), Rational(abs(e.hi)));
        const long lost = static_cast<long>(bit_length(ceil_q(1 / m)));
        for (long r = p + 4 + 2 * lost; r <= a.cap(); r += 16) {
          Enclosure f = a.enclose(r);
          if (f.contains_zero()) continue;
          Enclosure g = acf::recip(f).rounded(p + 2);
          if (g.within(p)) return g;
        }
        throw needs_precision(a.cap());
      },
      a.cap());
}

inline AdaptiveReal abs(const AdaptiveReal& a) {
  return AdaptiveReal([a](long p) { return acf::abs(a.enclose(p)); }, a.cap());
}

}  // namespace adaptive
}  // namespace acf
