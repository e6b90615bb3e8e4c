#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "acf/numeric/real_value.hpp"

namespace acf {

struct Sample {
  std::string label;
  RealValue x;
};

/// Quadratic irrationals that sit at or near the fixed points of the maps:
/// g, g^2, sqrt(2)-1, sqrt(3)-1, (sqrt(5)+1)/2 (taken as is; reduction mod 1
/// gives g again) and frac(sqrt(d)) for fifteen non-square d.
inline std::vector<Sample> surd_panel() {
  std::vector<Sample> out = {
      {"(-1+sqrt(5))/2", RealValue::surd(-1, 1, 2, 5)},
      {"(3-sqrt(5))/2", RealValue::surd(3, -1, 2, 5)},
      {"sqrt(2)-1", RealValue::surd(-1, 1, 1, 2)},
      {"sqrt(3)-1", RealValue::surd(-1, 1, 1, 3)},
      {"(1+sqrt(5))/2", RealValue::surd(1, 1, 2, 5)},
  };
  for (long d : {5, 6, 7, 10, 11, 13, 14, 15, 17, 19, 21, 22, 23, 26, 29}) {
    const Integer s = isqrt(Integer(d));
    out.push_back({"sqrt(" + std::to_string(d) + ")-" + s.get_str(), RealValue::surd(-s, 1, 1, d)});
  }
  return out;
}

/// Random rationals p/q in (0,1) with 2 <= q <= max_den, reproducible from the seed.
inline std::vector<Sample> random_rationals(std::size_t count, std::uint64_t seed,
                                            std::uint64_t max_den = 1000000) {
  std::mt19937_64 rng(seed);
  std::vector<Sample> out;
  out.reserve(count);
  while (out.size() < count) {
    const std::uint64_t q = 2 + rng() % (max_den - 1);
    const std::uint64_t p = 1 + rng() % (q - 1);
    Rational x(Integer(static_cast<unsigned long>(p)), Integer(static_cast<unsigned long>(q)));
    x.canonicalize();
    out.push_back({x.get_str(), x});
  }
  return out;
}

/// The sweep corpus: the surd panel first, then random rationals, `size`
/// samples in total.
inline std::vector<Sample> make_corpus(std::size_t size, std::uint64_t seed) {
  std::vector<Sample> out = surd_panel();
  if (out.size() > size) out.resize(size);
  auto r = random_rationals(size - out.size(), seed);
  out.insert(out.end(), r.begin(), r.end());
  return out;
}

}  // namespace acf
