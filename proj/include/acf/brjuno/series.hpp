#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>
#include <vector>

#include "acf/alpha/bounds.hpp"
#include "acf/brjuno/weight.hpp"

namespace acf {

struct Term {
  std::size_t n;
  double beta_prev;  // beta_{n-1}
  double x_n;
  double term;
};

/// Truncated sum B^N = sum_{n<=N} beta_{n-1} u(x_n) with its diagnostics.
struct BrjunoResult {
  double value = 0;
  std::size_t N = 0;
  std::vector<Term> terms;
  double tail_estimate = 0;
  bool converged = false;
  std::optional<double> companion_q_series;
};

namespace detail {

inline void require_positive_alpha(const Rational& alpha) {
  if (alpha == 0) throw domain_error("alpha = 0 has no general-weight Brjuno function; use semi_brjuno");
}

// u(1/a) without forming 1/a when a is large.
inline double u_of_inverse(const SingularityU& u, const Integer& a) {
  if (u.name == "log") return log_of(a);
  return u(reciprocal_of(a));
}

inline BrjunoResult sum_expansion(const AlphaExpansion& e, const SingularityU& u, std::size_t N) {
  BrjunoResult r;
  r.N = N;
  double beta = 1;
  const std::size_t last = std::min(N, e.remainders.size() - 1);
  for (std::size_t n = 0; n <= last; ++n) {
    if (e.terminated && n + 1 == e.remainders.size()) break;  // B(0) := 0 at the end of a finite orbit
    const double xn = to_double(e.remainders[n]);
    const double t = beta * u(xn);
    r.terms.push_back({n, beta, xn, t});
    r.value += t;
    beta *= xn;
  }
  double q = 0;
  const std::size_t qlast = std::min(N + 1, e.digits.size());
  for (std::size_t n = 0; n < qlast; ++n)
    q += u_of_inverse(u, e.digits[n].a) * reciprocal_of(e.convergents[n].q);
  r.companion_q_series = q;

  if (e.terminated || r.terms.empty()) {
    r.tail_estimate = 0;
    r.converged = true;
    return r;
  }
  const Rational& alpha = e.params.alpha();
  const double rho = to_double(rho_alpha(alpha));
  const double abar = to_double(e.params.alpha_bar());
  double recent = u.M1;
  for (std::size_t k = r.terms.size() >= 5 ? r.terms.size() - 5 : 0; k < r.terms.size(); ++k)
    recent = std::max(recent, u(r.terms[k].x_n));
  r.tail_estimate = abar * std::pow(rho, static_cast<double>(N)) / (1 - rho) * recent;
  r.converged = r.terms.back().term < 1e-12 && r.tail_estimate < 1e-6;
  return r;
}

}  // namespace detail

/// B^N_{alpha,u}(x) for alpha in (0,1]: x is reduced to x_0 = |x - floor(x+1-alpha)|,
/// expanded, and beta_{n-1} u(x_n) summed for n = 0..N. A finite orbit stops
/// at its zero remainder. The companion q-series is filled in as well.
inline BrjunoResult brjuno_sum(const RealValue& x, const Rational& alpha, const SingularityU& u,
                               std::size_t N, const Precision& prec = {}) {
  detail::require_positive_alpha(alpha);
  const AlphaExpansion e = alpha_expand(x, AlphaParams(alpha), N + 1, prec);
  return detail::sum_expansion(e, u, N);
}

/// sum_{n=0}^N u(1/a_{n+1}) / q_n over the alpha-expansion of x.
inline double q_series(const RealValue& x, const Rational& alpha, const SingularityU& u, std::size_t N,
                       const Precision& prec = {}) {
  return *brjuno_sum(x, alpha, u, N, prec).companion_q_series;
}

}  // namespace acf
