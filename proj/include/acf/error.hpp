#pragma once

#include <stdexcept>
#include <string>

namespace acf {

// Every failure raised by the library derives from acf::error so callers can
// catch the whole family at once and still dispatch on the concrete type.
struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct zero_division : error {
  zero_division() : error("division by zero") {}
};

// An adaptive computation could not separate a value from a boundary at the
// precision cap. Exact inputs never raise this.
struct needs_precision : error {
  long bits;
  explicit needs_precision(long at_bits, const std::string& what = "precision cap reached")
      : error(what + " (" + std::to_string(at_bits) + " bits)"), bits(at_bits) {}
};

struct not_a_surd : error {
  not_a_surd() : error("value is rational, not a quadratic surd") {}
};

struct invalid_radicand : error {
  invalid_radicand() : error("radicand must be positive") {}
};

struct domain_error : error {
  using error::error;
};

struct exactness_unavailable : error {
  exactness_unavailable() : error("operation requires an exact expansion") {}
};

struct side_mismatch : error {
  using error::error;
};

struct malformed_stream : error {
  using error::error;
};

struct condition_violation : error {
  using error::error;
};

struct parse_error : error {
  using error::error;
};

struct insufficient_scales : error {
  using error::error;
};

}  // namespace acf
