// Walkthrough: expansions of the golden mean, Brjuno sums and the B_1 - B_0 gap.

#include <cstdio>

#include "acf/acf.hpp"

using namespace acf;

int main() {
  const RealValue g = RealValue::surd(-1, 1, 2, 5);

  for (const Rational& a : {Rational(1), Rational(1, 2)}) {
    const AlphaExpansion e = alpha_expand(g, AlphaParams(a), 6);
    std::printf("alpha = %s digits:", a.get_str().c_str());
    for (const auto& d : e.digits) std::printf(" (%s,%+d)", d.a.get_str().c_str(), d.eps);
    std::printf("\n");
  }

  const MinusExpansion m = minus_expand(RealValue(Rational(5, 7)), 10);
  std::printf("5/7 by excess:");
  for (const auto& b : m.digits) std::printf(" %s", b.get_str().c_str());
  std::printf("  regular: %s\n", format_stream(minus_to_regular(to_stream(m))).c_str());

  const SingularityU lg = make_u("log");
  const double b1 = brjuno_sum(g, Rational(1), lg, 60).value;
  const SemiBrjunoResult b0 = semi_brjuno(g);
  std::printf("B_1(g) = %.10f\nB_1/2(g) = %.10f\n", b1, brjuno_sum(g, Rational(1, 2), lg, 60).value);
  std::printf("B_0(g) = %.10f  q-series %.10f\n", b0.value, b0.q_series);
  std::printf("B_0(g) + B_0(-g) - B_1(g) = %.10f\n", b0_even(g) - b1);

  DiffConfig c;
  c.kind = DiffKind::b0_vs_qseries;
  const BoundReport r = diff_report(c, make_corpus(200, 1));
  std::printf("sup |B_0 - q-series| over 200 inputs: %.4f (bound %.4f) at %s\n", r.observed_sup, r.threshold,
              r.worst_input.c_str());
}
