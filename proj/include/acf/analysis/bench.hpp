#pragma once

#include <algorithm>
#include <chrono>
#include <string>
#include <vector>

#include "acf/alpha/alpha_cf.hpp"
#include "acf/byexcess/minus_cf.hpp"

namespace acf {

struct BenchRow {
  Rational alpha;
  std::string carrier;  // rational, surd or adaptive
  std::size_t digits = 0;
  double median_seconds = 0;
  double digits_per_second = 0;
};

/// Expansion throughput per alpha and carrier: 5/7, g as a surd, and g as an
/// adaptive real. alpha = 0 runs the by-excess expansion.
inline std::vector<BenchRow> bench(const std::vector<Rational>& alphas, std::size_t digit_target,
                                   std::size_t repetitions) {
  if (digit_target < 1) throw domain_error("digit target must be at least 1");
  repetitions = std::max<std::size_t>(repetitions, 1);
  const RealValue g = RealValue::surd(-1, 1, 2, 5);
  const std::vector<std::pair<std::string, RealValue>> carriers = {
      {"rational", RealValue(Rational(5, 7))}, {"surd", g}, {"adaptive", RealValue(g.to_adaptive())}};
  std::vector<BenchRow> out;
  for (const Rational& a : alphas) {
    const AlphaParams params(a);
    for (const auto& [name, x] : carriers) {
      std::vector<double> times;
      std::size_t digits = 0;
      for (std::size_t r = 0; r < repetitions; ++r) {
        const auto t0 = std::chrono::steady_clock::now();
        digits = a == 0 ? minus_expand(x, digit_target).digits.size()
                        : alpha_expand(x, params, digit_target).digits.size();
        times.push_back(std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
      }
      std::nth_element(times.begin(), times.begin() + static_cast<long>(times.size() / 2), times.end());
      const double med = times[times.size() / 2];
      out.push_back({a, name, digits, med, med > 0 ? static_cast<double>(digits) / med : 0.0});
    }
  }
  return out;
}

}  // namespace acf
