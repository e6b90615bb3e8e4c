#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>

#include "acf/error.hpp"

namespace acf {

/// A weight u: (0,1) -> (0, inf) singular at 0, with the constants the
/// q-series estimate is built from:
///   M1 = sup u on (delta/(1+delta), 1)
///   M2 = sup x u(x) on (0, delta)
///   M3 = sup x^2 |u'(x)| on (0, delta)
/// and M4(cut) = sup u on [cut, 1].
struct SingularityU {
  std::string name;
  std::function<double(double)> eval;
  std::function<double(double)> deriv;
  double delta = 0.1;
  double M1 = 0, M2 = 0, M3 = 0;

  double operator()(double x) const { return eval(x); }

  double M4(double cut) const {
    double s = 0;
    constexpr int steps = 4000;
    for (int k = 0; k <= steps; ++k) {
      const double x = cut + (1.0 - cut) * k / steps;
      if (x > 0 && x < 1) s = std::max(s, eval(x));
    }
    return std::max(s, eval(std::nextafter(1.0, 0.0)));
  }
};

namespace detail {

// Sup of f over (lo, hi) sampled on a geometric grid toward lo = 0 or a linear
// grid otherwise; endpoints are included since all the weights here are
// monotone near them.
template <class F>
double grid_sup(F f, double lo, double hi) {
  double s = -HUGE_VAL;
  if (lo == 0) {
    for (int k = 0; k <= 8 * 120; ++k) s = std::max(s, f(hi * std::exp2(-k / 8.0)));
  } else {
    constexpr int steps = 4000;
    for (int k = 0; k <= steps; ++k) s = std::max(s, f(lo + (hi - lo) * k / steps));
  }
  return s;
}

inline void check_conditions(const SingularityU& u) {
  auto at = [](int k) { return std::exp2(-k); };
  for (int k = 1; k <= 60; ++k) {
    const double x = at(k), y = 1 - at(std::min(k, 40));
    if (!(u.eval(x) > 0) || !(u.eval(y) > 0) || !std::isfinite(u.eval(x)))
      throw condition_violation(u.name + ": u must be positive and finite on (0,1)");
    if (k > 1 && u.eval(x) < u.eval(at(k - 1)))
      throw condition_violation(u.name + ": u must grow toward 0");
  }
  // Growth over the deep half of the grid must stay comparable to the shallow half.
  if (!(u.eval(at(60)) - u.eval(at(30)) > 0.1 * (u.eval(at(30)) - u.eval(at(1)))))
    throw condition_violation(u.name + ": u does not blow up at 0");
  double xu_near = 0, xu_far = 0, xd_near = 0, xd_far = 0;
  for (int k = 1; k <= 60; ++k) {
    const double x = at(k);
    const double xu = x * u.eval(x), xd = x * x * std::fabs(u.deriv(x));
    if (!std::isfinite(xu) || !std::isfinite(xd)) throw condition_violation(u.name + ": non-finite limit");
    double& su = k <= 30 ? xu_far : xu_near;
    double& sd = k <= 30 ? xd_far : xd_near;
    su = std::max(su, xu);
    sd = std::max(sd, xd);
  }
  if (xu_near > 2 * xu_far + 1) throw condition_violation(u.name + ": x u(x) unbounded at 0");
  if (xd_near > 2 * xd_far + 1) throw condition_violation(u.name + ": x^2 u'(x) unbounded at 0");
}

}  // namespace detail

/// A weight from an (eval, deriv) pair; checks the conditions on u and fills
/// in M1..M3 for the cut delta.
inline SingularityU make_u(std::string name, std::function<double(double)> eval,
                           std::function<double(double)> deriv, double delta = 0.1) {
  if (!(delta > 0 && delta < 1)) throw domain_error("delta must lie in (0,1)");
  SingularityU u{std::move(name), std::move(eval), std::move(deriv), delta};
  detail::check_conditions(u);
  u.M1 = detail::grid_sup([&](double x) { return x < 1 ? u.eval(x) : u.eval(std::nextafter(1.0, 0.0)); },
                          delta / (1 + delta), 1.0);
  u.M2 = detail::grid_sup([&](double x) { return x * u.eval(x); }, 0.0, delta);
  u.M3 = detail::grid_sup([&](double x) { return x * x * std::fabs(u.deriv(x)); }, 0.0, delta);
  return u;
}

inline SingularityU make_power_u(double sigma, double delta = 0.1) {
  if (!(sigma > 1)) throw condition_violation("power weight needs sigma > 1");
  const double s = -1 / sigma;
  return make_u(
      "power(" + std::to_string(sigma) + ")", [s](double x) { return std::pow(x, s); },
      [s](double x) { return s * std::pow(x, s - 1); }, delta);
}

/// "log", "inv_sqrt" or "power(sigma)".
inline SingularityU make_u(const std::string& name, double delta = 0.1) {
  if (name == "log")
    return make_u("log", [](double x) { return -std::log(x); }, [](double x) { return -1 / x; }, delta);
  if (name == "inv_sqrt")
    return make_u("inv_sqrt", [](double x) { return 1 / std::sqrt(x); },
                  [](double x) { return -0.5 / (x * std::sqrt(x)); }, delta);
  if (name.rfind("power(", 0) == 0 && name.back() == ')') {
    double sigma = 0;
    try {
      std::size_t used = 0;
      const std::string body = name.substr(6, name.size() - 7);
      sigma = std::stod(body, &used);
      if (used != body.size()) throw std::invalid_argument(body);
    } catch (const std::logic_error&) {
      throw parse_error("bad weight '" + name + "'");
    }
    SingularityU u = make_power_u(sigma, delta);
    u.name = name;
    return u;
  }
  throw parse_error("unknown weight '" + name + "'");
}

}  // namespace acf
