#pragma once

#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "acf/byexcess/minus_cf.hpp"

namespace acf {

/// A digit stream as exchanged between the regular and by-excess worlds.
/// `finite`: the listed digits are the whole expansion (regular CF of a
/// rational). `truncated`: a prefix of a longer expansion. `twos_forever`:
/// the digits are followed by an infinite run of 2's (by-excess expansion of
/// a rational).
struct DigitStream {
  enum class Tail { finite, truncated, twos_forever };
  std::vector<Integer> digits;
  Tail tail = Tail::finite;

  friend bool operator==(const DigitStream&, const DigitStream&) = default;
};

enum class Side { above_half, below_half };

namespace detail {

// Regular CF canonical form: a finite expansion never ends in 1, except the
// one-digit expansion [1] of x = 1.
inline void canonical_tail(std::vector<Integer>& a) {
  if (a.size() >= 2 && a.back() == 1) {
    a.pop_back();
    a.back() += 1;
  }
}

// Trailing 2's before an infinite run of 2's carry no information.
inline void strip_twos(std::vector<Integer>& b) {
  while (!b.empty() && b.back() == 2) b.pop_back();
}

constexpr unsigned long max_run = 1ul << 26;

inline void emit_twos(std::vector<Integer>& b, const Integer& count) {
  if (count < 0) throw malformed_stream("negative run length");
  if (count > max_run) throw domain_error("run of 2's too long to materialize");
  b.insert(b.end(), count.get_ui(), Integer(2));
}

}  // namespace detail

/// The by-excess stream of a MinusExpansion: exact once the remainder reaches
/// 1, a truncated prefix otherwise.
inline DigitStream to_stream(const MinusExpansion& e) {
  DigitStream s;
  if (e.reached_one) {
    s.digits.assign(e.digits.begin(), e.digits.begin() + static_cast<long>(std::min(e.one_index, e.digits.size())));
    detail::strip_twos(s.digits);
    s.tail = DigitStream::Tail::twos_forever;
  } else {
    s.digits = e.digits;
    s.tail = DigitStream::Tail::truncated;
  }
  return s;
}

/// Regular digits of x from its by-excess digits. With blocks of m_i twos
/// closed by B_i > 2:
///   above half (b_1 = 2): a = [1, m_1, B_1-2, m_2+1, B_2-2, m_3+1, ...]
///   below half (b_1 > 2): a = [B_1-1, m_2+1, B_2-2, m_3+1, ...]
/// An infinite run of 2's ends the expansion after the last B-2; a truncated
/// stream yields the digits its complete blocks determine.
inline DigitStream minus_to_regular(const DigitStream& b, Side side) {
  for (const auto& d : b.digits)
    if (d < 2) throw malformed_stream("by-excess digits must be >= 2");
  const bool forever = b.tail == DigitStream::Tail::twos_forever;
  if (b.digits.empty() && !forever) return {{}, DigitStream::Tail::truncated};
  const bool starts_with_two = b.digits.empty() || b.digits.front() == 2;
  if (starts_with_two != (side == Side::above_half))
    throw side_mismatch("side does not match the first by-excess digit");

  DigitStream a;
  a.tail = forever ? DigitStream::Tail::finite : DigitStream::Tail::truncated;
  if (forever && b.digits.empty()) {  // x = 1
    a.digits.emplace_back(1);
    return a;
  }
  if (side == Side::above_half) a.digits.emplace_back(1);
  unsigned long twos = 0;
  bool first = true;
  for (const auto& d : b.digits) {
    if (d == 2) {
      ++twos;
      continue;
    }
    if (first) {
      if (side == Side::above_half) {
        a.digits.emplace_back(twos);
        a.digits.push_back(d - 2);
      } else {
        a.digits.push_back(d - 1);
      }
      first = false;
    } else {
      a.digits.emplace_back(twos + 1);
      a.digits.push_back(d - 2);
    }
    twos = 0;
  }
  if (forever) detail::canonical_tail(a.digits);
  return a;
}

inline Side side_of(const DigitStream& b) {
  return b.digits.empty() || b.digits.front() == 2 ? Side::above_half : Side::below_half;
}

inline DigitStream minus_to_regular(const DigitStream& b) { return minus_to_regular(b, side_of(b)); }

/// Inverse of minus_to_regular. If a_1 = 1: a_2 twos, then a_3+2, then a_4-1
/// twos, a_5+2, ...; if a_1 >= 2: a_1+1, then a_2-1 twos, a_3+2, ... A finite
/// stream ends in an infinite run of 2's; one that stops on a run length k is
/// read as ending in (k-1, 1).
inline DigitStream regular_to_minus(const DigitStream& a) {
  for (const auto& d : a.digits)
    if (d < 1) throw malformed_stream("regular digits must be >= 1");
  const bool finite = a.tail == DigitStream::Tail::finite;
  DigitStream b;
  b.tail = finite ? DigitStream::Tail::twos_forever : DigitStream::Tail::truncated;
  if (a.digits.empty()) {
    if (finite) throw malformed_stream("empty finite expansion");
    return b;
  }
  std::vector<Integer> d = a.digits;
  if (finite && d.size() == 1 && d[0] == 1) return b;  // x = 1
  // Slots alternate between closing digits B (odd positions) and run lengths.
  if (finite && d.size() % 2 == 0) {
    d.back() -= 1;
    if (d.back() < 1) throw malformed_stream("finite expansion must end in a digit >= 2");
    d.emplace_back(1);
  }
  const bool above = d[0] == 1;
  for (std::size_t k = 0; k < d.size(); ++k) {
    if (k == 0) {
      if (!above) b.digits.push_back(d[0] + 1);
    } else if (k % 2 == 1) {
      detail::emit_twos(b.digits, above && k == 1 ? d[k] : Integer(d[k] - 1));
    } else {
      b.digits.push_back(d[k] + 2);
    }
  }
  if (finite) detail::strip_twos(b.digits);
  return b;
}

/// Regular digits of 1 - x from those of x in (0, 1/2): [a_1, a_2, ...] maps
/// to [1, a_1 - 1, a_2, ...]. At x = 1/2 the result [1, 1] is not canonical and
/// `boundary` is set.
struct Complement {
  DigitStream digits;
  bool boundary = false;
};

inline Complement complement_regular(const DigitStream& a) {
  if (a.digits.empty() || a.digits.front() < 2) throw domain_error("complement_regular needs a_1 >= 2");
  Complement c;
  c.digits.tail = a.tail;
  c.digits.digits.reserve(a.digits.size() + 1);
  c.digits.digits.emplace_back(1);
  c.digits.digits.push_back(a.digits.front() - 1);
  c.digits.digits.insert(c.digits.digits.end(), a.digits.begin() + 1, a.digits.end());
  c.boundary = a.tail == DigitStream::Tail::finite && a.digits.size() == 1 && a.digits.front() == 2;
  return c;
}

/// [1, c, a_2, ...] back to [c + 1, a_2, ...].
inline DigitStream uncomplement_regular(const DigitStream& a) {
  if (a.digits.size() < 2 || a.digits.front() != 1) throw domain_error("expected [1, c, ...]");
  DigitStream out;
  out.tail = a.tail;
  out.digits.push_back(a.digits[1] + 1);
  out.digits.insert(out.digits.end(), a.digits.begin() + 2, a.digits.end());
  return out;
}

/// Whitespace-separated digits; a final "tail2" (or "2̄", "…2̄") marks an
/// infinite run of 2's and "..." (or "…") a truncated stream.
inline DigitStream parse_stream(const std::string& text) {
  std::istringstream in(text);
  DigitStream s;
  std::string tok;
  bool closed = false;
  while (in >> tok) {
    if (closed) throw parse_error("digits after end-of-stream marker");
    if (tok == "tail2" || tok == "2\xCC\x84" || tok == "\xE2\x80\xA6" "2\xCC\x84") {
      s.tail = DigitStream::Tail::twos_forever;
      closed = true;
    } else if (tok == "..." || tok == "\xE2\x80\xA6") {
      s.tail = DigitStream::Tail::truncated;
      closed = true;
    } else {
      if (tok.find_first_not_of("0123456789") != std::string::npos)
        throw parse_error("bad digit '" + tok + "'");
      s.digits.emplace_back(tok);
    }
  }
  return s;
}

inline std::string format_stream(const DigitStream& s) {
  std::string out;
  for (const auto& d : s.digits) {
    if (!out.empty()) out += ' ';
    out += d.get_str();
  }
  const char* mark = s.tail == DigitStream::Tail::twos_forever ? "tail2"
                     : s.tail == DigitStream::Tail::truncated  ? "..."
                                                               : nullptr;
  if (mark) out += out.empty() ? mark : std::string(" ") + mark;
  return out;
}

inline std::ostream& operator<<(std::ostream& os, const DigitStream& s) { return os << format_stream(s); }

}  // namespace acf
