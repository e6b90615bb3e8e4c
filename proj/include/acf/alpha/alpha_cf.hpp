#pragma once

#include <cstddef>
#include <vector>

#include "acf/error.hpp"
#include "acf/numeric/real_value.hpp"

namespace acf {

/// The parameter alpha in [0,1] together with alpha_bar = max(alpha, 1-alpha).
/// The map A_alpha acts on (0, alpha_bar).
class AlphaParams {
 public:
  explicit AlphaParams(Rational alpha) : alpha_(std::move(alpha)) {
    if (alpha_ < 0 || alpha_ > 1) throw domain_error("alpha must lie in [0,1]");
    alpha_bar_ = alpha_ >= Rational(1, 2) ? alpha_ : Rational(1 - alpha_);
  }
  const Rational& alpha() const { return alpha_; }
  const Rational& alpha_bar() const { return alpha_bar_; }

 private:
  Rational alpha_;
  Rational alpha_bar_;
};

struct AlphaDigit {
  Integer a;
  int eps = 1;
};

/// Columns (p_{n-1}, p_n ; q_{n-1}, q_n) of the convergent matrix at index n.
/// `p` includes the integer part, so p/q approximates x itself.
struct ConvergentPair {
  Integer p_prev, q_prev, p, q;
  int det() const { return sgn(Integer(p_prev * q - q_prev * p)); }
};

/// alpha-expansion of x: x = integer_part + eps0 * x_0 and, for n >= 1,
/// 1/x_{n-1} = a_n + eps_n * x_n.
///
/// Index conventions: digits[k] holds (a_{k+1}, eps_{k+1}); remainders,
/// convergents and betas are indexed by n = 0..N.
struct AlphaExpansion {
  AlphaParams params{Rational(1)};
  RealValue x;
  Integer integer_part;
  int eps0 = 1;
  std::vector<AlphaDigit> digits;
  std::vector<RealValue> remainders;
  std::vector<ConvergentPair> convergents;
  std::vector<RealValue> betas;
  bool terminated = false;

  bool exact() const { return x.is_exact(); }
  std::size_t size() const { return digits.size(); }
  const RealValue& x0() const { return remainders.front(); }
};

struct AlphaReduction {
  Integer integer_part;
  RealValue x0;
  int eps0 = 1;
};

/// x0 = |x - floor(x + 1 - alpha)|, which lies in [0, alpha_bar].
inline AlphaReduction alpha_reduce(const RealValue& x, const AlphaParams& params,
                                   const Precision& prec = {}) {
  Integer k = floor_shift(x, params.alpha(), prec);
  const RealValue d = x - RealValue(k);
  const int s = sign(d, prec);
  return {std::move(k), s < 0 ? -d : d, s < 0 ? -1 : 1};
}

struct AlphaStep {
  AlphaDigit digit;
  RealValue next;
};

/// One application of A_alpha. Accepts 0 < x <= alpha_bar: the right end is
/// reached by exact orbits (e.g. 2/5 under the nearest-integer map), and the
/// formula is well defined there.
inline AlphaStep alpha_step(const RealValue& x, const AlphaParams& params, const Precision& prec = {}) {
  if (sign(x, prec) <= 0 || compare(x, RealValue(params.alpha_bar()), prec) > 0)
    throw domain_error("alpha_step: x outside (0, alpha_bar]");
  const RealValue inv = recip(x);
  Integer a = floor_shift(inv, params.alpha(), prec);
  const RealValue diff = inv - RealValue(a);
  const int s = sign(diff, prec);
  return {{std::move(a), s < 0 ? -1 : 1}, s < 0 ? -diff : diff};
}

namespace detail {

inline void push_convergent(std::vector<ConvergentPair>& cv, const Integer& a, int eps_prev) {
  const ConvergentPair& c = cv.back();
  ConvergentPair n;
  n.p_prev = c.p;
  n.q_prev = c.q;
  n.p = a * c.p + eps_prev * c.p_prev;
  n.q = a * c.q + eps_prev * c.q_prev;
  cv.push_back(std::move(n));
}

inline AlphaExpansion expand_exact(const RealValue& x, const AlphaParams& params,
                                   std::size_t max_digits) {
  AlphaExpansion e;
  e.params = params;
  e.x = x;
  AlphaReduction r = alpha_reduce(x, params);
  e.integer_part = r.integer_part;
  e.eps0 = r.eps0;
  e.remainders.push_back(r.x0);
  e.betas.push_back(r.x0);
  e.convergents.push_back({Integer(1), Integer(0), e.integer_part, Integer(1)});
  int eps_prev = e.eps0;
  e.terminated = sign(r.x0) == 0;
  while (!e.terminated && e.digits.size() < max_digits) {
    AlphaStep st = alpha_step(e.remainders.back(), params);
    push_convergent(e.convergents, st.digit.a, eps_prev);
    eps_prev = st.digit.eps;
    e.betas.push_back(e.betas.back() * st.next);
    e.terminated = sign(st.next) == 0;
    e.remainders.push_back(std::move(st.next));
    e.digits.push_back(std::move(st.digit));
  }
  return e;
}

// Adaptive inputs: x_n = |q_n x - p_n| / |q_{n-1} x - p_{n-1}|, so every digit
// is read off one enclosure of x through the exact convergents. Certified
// digits stay valid when the working precision is raised.
inline AlphaExpansion expand_adaptive(const RealValue& x, const AlphaParams& params,
                                      std::size_t max_digits, const Precision& prec) {
  AlphaExpansion e;
  e.params = params;
  e.x = x;
  AlphaReduction r = alpha_reduce(x, params, prec);
  e.integer_part = r.integer_part;
  e.eps0 = r.eps0;
  e.remainders.push_back(r.x0);
  e.betas.push_back(r.x0);
  e.convergents.push_back({Integer(1), Integer(0), e.integer_part, Integer(1)});
  int eps_prev = e.eps0;

  const Rational shift = 1 - params.alpha();
  long bits = prec.start_bits;
  Integer lo, hi, unit;
  auto fetch = [&] {
    const Enclosure enc = x.enclose(bits).rounded(bits);
    unit = pow2(static_cast<unsigned long>(bits));
    lo = floor_q(enc.lo * unit);
    hi = ceil_q(enc.hi * unit);
  };
  fetch();
  while (e.digits.size() < max_digits) {
    const ConvergentPair& c = e.convergents.back();
    // |q x - p| over the enclosure, scaled by 2^bits.
    auto span = [&](const Integer& q, const Integer& p) -> Enclosure {
      Integer l = q * lo - p * unit, h = q * hi - p * unit;
      return acf::abs(Enclosure{Rational(l), Rational(h)});
    };
    const Enclosure num = span(c.q_prev, c.p_prev);
    const Enclosure den = span(c.q, c.p);
    bool certified = den.lo > 0;
    Integer a;
    int eps = 1;
    if (certified) {
      const Rational r_lo = num.lo / den.hi, r_hi = num.hi / den.lo;
      const Rational s_lo = r_lo + shift;
      a = floor_q(s_lo);
      certified = a == floor_q(r_hi + shift) && !is_integer(s_lo);
      if (certified) {
        if (r_lo > a) eps = 1;
        else if (r_hi < a) eps = -1;
        else certified = false;  // x_{n+1} could be 0
      }
    }
    if (!certified) {
      bits *= 2;
      if (bits > prec.cap_bits) throw needs_precision(prec.cap_bits, "digit not certified");
      fetch();
      continue;
    }
    push_convergent(e.convergents, a, eps_prev);
    eps_prev = eps;
    const ConvergentPair& n = e.convergents.back();
    const RealValue beta = abs(RealValue(n.q) * x - RealValue(n.p));
    e.remainders.push_back(beta / e.betas.back());
    e.betas.push_back(beta);
    e.digits.push_back({std::move(a), eps});
  }
  return e;
}

}  // namespace detail

/// Reduces x and iterates A_alpha until max_digits digits or a zero remainder.
/// Convergents follow p_n = a_n p_{n-1} + eps_{n-1} p_{n-2} from the identity
/// seed, sheared by the integer part.
inline AlphaExpansion alpha_expand(const RealValue& x, const AlphaParams& params,
                                   std::size_t max_digits, const Precision& prec = {}) {
  return x.is_exact() ? detail::expand_exact(x, params, max_digits)
                      : detail::expand_adaptive(x, params, max_digits, prec);
}

}  // namespace acf
