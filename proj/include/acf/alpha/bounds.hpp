#pragma once

#include <cstddef>
#include <vector>

#include "acf/alpha/alpha_cf.hpp"

namespace acf {

/// The decay rate in the bounds on beta: g on (g, 1], sqrt(2)-1 on
/// [sqrt(2)-1, g] and sqrt(1-2 alpha) below sqrt(2)-1.
inline RealValue rho_alpha(const Rational& alpha) {
  if (alpha <= 0 || alpha > 1) throw domain_error("rho_alpha: alpha must lie in (0,1]");
  const RealValue g = RealValue::surd(-1, 1, 2, 5);
  const RealValue gamma = RealValue::surd(-1, 1, 1, 2);
  const RealValue a(alpha);
  if (a > g) return g;
  if (a >= gamma) return gamma;
  const Rational r = 1 - 2 * alpha;  // sqrt(n/d) = sqrt(n d)/d
  return RealValue::surd(0, 1, r.get_den(), Integer(r.get_num() * r.get_den()));
}

inline RealValue pow(const RealValue& x, unsigned n) {
  RealValue r(1), b = x;
  for (; n; n >>= 1, b = b * b)
    if (n & 1) r = r * b;
  return r;
}

/// Per-index outcome of the exact identities attached to an expansion. Index n
/// runs over 0..N; `sandwich` entries are only meaningful where `sandwich_checked`.
struct BetaReport {
  std::vector<bool> beta_identity;
  std::vector<bool> sandwich;
  std::vector<bool> sandwich_checked;
  std::vector<bool> determinant;
  std::vector<bool> reconstruction;

  bool all() const {
    for (const auto* v : {&beta_identity, &determinant, &reconstruction})
      for (bool b : *v)
        if (!b) return false;
    for (std::size_t i = 0; i < sandwich.size(); ++i)
      if (sandwich_checked[i] && !sandwich[i]) return false;
    return true;
  }
};

inline void require_exact(const AlphaExpansion& e) {
  if (!e.exact()) throw exactness_unavailable();
}

inline int eps_at(const AlphaExpansion& e, std::size_t n) { return n == 0 ? e.eps0 : e.digits[n - 1].eps; }

/// Checks, exactly and at every index: beta_n = |q_n x - p_n|, the sandwich
/// 1/(1+alpha) < beta_n q_{n+1} < 1/alpha wherever x_{n+1} > 0, the
/// determinant sign law, and x = (p_n + eps_n p_{n-1} x_n)/(q_n + eps_n q_{n-1} x_n).
inline BetaReport beta_check(const AlphaExpansion& e) {
  require_exact(e);
  BetaReport r;
  const std::size_t N = e.convergents.size();
  const Rational& alpha = e.params.alpha();
  int plus_count = 0;
  for (std::size_t n = 0; n < N; ++n) {
    const ConvergentPair& c = e.convergents[n];
    const RealValue qx_p = abs(RealValue(c.q) * e.x - RealValue(c.p));
    r.beta_identity.push_back(compare(e.betas[n], qx_p) == 0);

    const bool check = n + 1 < N && sign(e.remainders[n + 1]) > 0;
    bool ok = true;
    if (check) {
      const RealValue prod = e.betas[n] * RealValue(e.convergents[n + 1].q);
      ok = prod > RealValue(Rational(Rational(1) / (1 + alpha)));
      if (alpha > 0) ok = ok && prod < RealValue(Rational(Rational(1) / alpha));
    }
    r.sandwich_checked.push_back(check);
    r.sandwich.push_back(ok);

    r.determinant.push_back(c.det() == (plus_count % 2 == 0 ? 1 : -1) &&
                            Integer(c.p_prev * c.q - c.q_prev * c.p) == c.det());
    if (eps_at(e, n) > 0) ++plus_count;

    const int eps = eps_at(e, n);
    const RealValue& xn = e.remainders[n];
    const RealValue num = RealValue(c.p) + RealValue(eps * c.p_prev) * xn;
    const RealValue den = RealValue(c.q) + RealValue(eps * c.q_prev) * xn;
    r.reconstruction.push_back(compare(num, e.x * den) == 0);
  }
  return r;
}

/// Checks beta_n <= alpha_bar rho^n and 1/q_{n+1} < (1+alpha) alpha_bar rho^n
/// exactly for n up to `max_n`; returns the failing indices.
inline std::vector<std::size_t> decay_violations(const AlphaExpansion& e, std::size_t max_n = 50) {
  require_exact(e);
  const Rational& alpha = e.params.alpha();
  const RealValue rho = rho_alpha(alpha);
  const RealValue abar(e.params.alpha_bar());
  std::vector<std::size_t> bad;
  RealValue bound = abar;  // alpha_bar rho^n
  for (std::size_t n = 0; n < e.convergents.size() && n <= max_n; ++n, bound = bound * rho) {
    bool ok = e.betas[n] <= bound;
    if (n + 1 < e.convergents.size())
      ok = ok && RealValue(Rational(Integer(1), e.convergents[n + 1].q)) < RealValue(Rational(1 + alpha)) * bound;
    if (!ok) bad.push_back(n);
  }
  return bad;
}

/// |x - p/q| < 1/(2 q^2).
inline bool legendre_test(const RealValue& x, const Integer& p, const Integer& q) {
  const RealValue d = abs(x - RealValue(Rational(p, q)));
  return d < RealValue(Rational(Integer(1), Integer(2 * q * q)));
}

/// Indices n whose convergent passes the one-half Legendre test, hence is a
/// convergent of the regular expansion.
inline std::vector<std::size_t> legendre_filter(const RealValue& x, const AlphaExpansion& e) {
  require_exact(e);
  if (!x.is_exact()) throw exactness_unavailable();
  std::vector<std::size_t> out;
  for (std::size_t n = 0; n < e.convergents.size(); ++n)
    if (legendre_test(x, e.convergents[n].p, e.convergents[n].q)) out.push_back(n);
  return out;
}

}  // namespace acf
