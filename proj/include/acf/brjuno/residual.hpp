#pragma once

#include <cmath>

#include "acf/brjuno/semi.hpp"

namespace acf {

enum class ResidualKind { alpha_eq, b0_eq };

/// |B(x) - u(x) - x B(step x)| with the left side truncated at N and the right
/// at N-1, so only rounding remains. alpha_eq uses A_alpha for alpha in
/// [1/2, 1] and x in (0, alpha); b0_eq uses x -> -1/x mod 1 on (0, 1].
/// B(0) := 0 at the end of a finite orbit.
inline double functional_residual(ResidualKind kind, const RealValue& x, const Rational& alpha,
                                  const SingularityU& u, std::size_t N) {
  if (N == 0) throw domain_error("functional_residual needs N >= 1");
  if (kind == ResidualKind::alpha_eq) {
    if (alpha < Rational(1, 2) || alpha > 1) throw domain_error("alpha_eq needs alpha in [1/2, 1]");
    const AlphaParams params(alpha);
    if (sign(x) <= 0 || !(x < RealValue(params.alpha_bar())))
      throw domain_error("alpha_eq needs x in (0, alpha_bar)");
    const double lhs = brjuno_sum(x, alpha, u, N).value;
    const AlphaStep st = alpha_step(x, params);
    const double next = sign(st.next) == 0 ? 0.0 : brjuno_sum(st.next, alpha, u, N - 1).value;
    const double xd = to_double(x);
    return std::fabs(lhs - u(xd) - xd * next);
  }
  if (sign(x) <= 0 || x > RealValue(1)) throw domain_error("b0_eq needs x in (0, 1]");
  const double lhs = semi_brjuno(x, N).value;
  const double next = semi_brjuno(-recip(x), N - 1).value;
  const double xd = to_double(x);
  return std::fabs(lhs + std::log(xd) - xd * next);
}

}  // namespace acf
