#pragma once

#include <cctype>
#include <regex>
#include <string>

#include "acf/error.hpp"
#include "acf/numeric/real_value.hpp"

namespace acf {

namespace detail {

inline std::string strip(std::string s) {
  // Accept the typographic minus sign as well as ASCII '-'.
  for (std::size_t pos; (pos = s.find("\xE2\x88\x92")) != std::string::npos;) s.replace(pos, 3, "-");
  std::string out;
  for (char ch : s)
    if (ch != ' ' && ch != '\t') out += ch;
  return out;
}

inline Integer to_integer(const std::string& s) {
  if (s.empty() || s == "+") return 1;
  if (s == "-") return -1;
  return Integer(s[0] == '+' ? s.substr(1) : s);
}

}  // namespace detail

/// Parses a decimal literal such as "0.3", "-12.5e-3" or "7" into the exact
/// rational it denotes.
inline Rational parse_decimal(const std::string& text) {
  static const std::regex re(R"(([+-]?)(\d*)(?:\.(\d*))?(?:[eE]([+-]?\d+))?)");
  std::smatch m;
  const std::string s = detail::strip(text);
  if (!std::regex_match(s, m, re) || (m[2].length() == 0 && m[3].length() == 0))
    throw parse_error("not a decimal number: '" + text + "'");
  const std::string digits = m[2].str() + m[3].str();
  Rational q(Integer(digits.empty() ? "0" : digits));
  long exp = m[4].matched ? std::stol(m[4].str()) : 0;
  exp -= static_cast<long>(m[3].length());
  Integer ten;
  mpz_ui_pow_ui(ten.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(exp)));
  if (exp >= 0) q *= ten; else q /= ten;
  if (m[1] == "-") q = -q;
  q.canonicalize();
  return q;
}

namespace detail {

// Sum of integer terms and integer multiples of a single sqrt(d):
//   term := int | [int ['*']] 'sqrt(' int ')'
inline bool parse_surd_body(const std::string& s, Integer& a, Integer& b, Integer& d) {
  std::size_t i = 0;
  bool have_d = false;
  a = 0;
  b = 0;
  auto digits = [&](std::string& out) {
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) out += s[i++];
    return !out.empty();
  };
  while (i < s.size()) {
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    } else if (i != 0) {
      return false;
    }
    std::string num;
    const bool has_num = digits(num);
    if (i < s.size() && s[i] == '*') ++i;
    if (s.compare(i, 5, "sqrt(") == 0) {
      i += 5;
      std::string rad;
      if (!digits(rad) || i >= s.size() || s[i] != ')') return false;
      ++i;
      const Integer r(rad);
      if (have_d && r != d) return false;
      have_d = true;
      d = r;
      b += sign * (has_num ? Integer(num) : Integer(1));
    } else {
      if (!has_num) return false;
      a += sign * Integer(num);
    }
  }
  return have_d;
}

}  // namespace detail

/// Parses "p/q", "(a+b*sqrt(d))/c" (also abbreviations like "sqrt(2)-1" or
/// "(1+sqrt(5))/2") or a decimal literal.
inline RealValue parse_real(const std::string& text) {
  const std::string s = detail::strip(text);
  static const std::regex frac(R"(([+-]?\d+)/(\d+))");
  std::smatch m;
  if (std::regex_match(s, m, frac)) {
    const Integer den(m[2].str());
    if (den == 0) throw parse_error("zero denominator in '" + text + "'");
    Rational q(Integer(m[1].str()), den);
    q.canonicalize();
    return q;
  }
  if (s.find("sqrt") != std::string::npos) {
    std::string body = s;
    Integer c = 1;
    if (const auto slash = body.rfind('/'); slash != std::string::npos) {
      const std::string den = body.substr(slash + 1);
      if (den.empty() || den.find_first_not_of("0123456789") != std::string::npos)
        throw parse_error("malformed surd: '" + text + "'");
      c = Integer(den);
      body = body.substr(0, slash);
    }
    if (body.size() >= 2 && body.front() == '(' && body.back() == ')')
      body = body.substr(1, body.size() - 2);
    Integer a, b, d;
    if (!detail::parse_surd_body(body, a, b, d)) throw parse_error("malformed surd: '" + text + "'");
    if (c == 0) throw parse_error("zero denominator in '" + text + "'");
    if (d == 0) throw parse_error("radicand must be positive in '" + text + "'");
    return RealValue::surd(a, b, c, d);
  }
  return parse_decimal(s);
}

}  // namespace acf
