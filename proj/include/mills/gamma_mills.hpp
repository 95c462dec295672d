#pragma once

// Continued fractions for the Gamma Mills ratio
//
//   M_s(x) = x^{1-s} e^x Gamma(s, x) = integral_0^inf (1 + u/x)^{s-1} e^{-u} du,
//
// which satisfies M' = (1 + (1-s)/x) M - 1 and M(inf) = 1. Four forms are
// provided: Lagrange's fraction in alternating x/1 denominators, Laguerre's
// contraction of it, Winitzki's fraction in v = 1/x, and the companion
// fraction for the lower incomplete integral.
//
// The integral representation R_s(x) = int (1 + u/x)^s e^{-u} du found in
// the literature is M_{s+1}(x) in this normalization.

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <functional>
#include <string>
#include <utility>

#include "mills/cf_engine.hpp"
#include "mills/errors.hpp"

namespace mills::gamma {

inline constexpr double kIntegerSnap = 1e-13;
inline constexpr double kAdaptiveTolerance = 1e-12;
inline constexpr int kAdaptiveCap = 500;

namespace detail {

// Shapes within kIntegerSnap of an integer are treated as that integer so
// the vanishing numerators terminate the fraction exactly.
inline double snap_shape(double s) {
  const double k = std::round(s);
  return std::abs(s - k) < kIntegerSnap ? k : s;
}

inline void check_shape(double s) {
  if (!(s > 0.0) || !std::isfinite(s)) {
    throw domain_error("gamma: shape s must be positive and finite");
  }
}

inline void check_positive_x(double x, const char* who) {
  if (!(x > 0.0) || !std::isfinite(x)) {
    throw domain_error(std::string(who) + ": x must be positive");
  }
}

}  // namespace detail

/// x/(x + (1-s)/(1 + 1/(x + (2-s)/(1 + 2/(x + ...))))).
inline CFSpec l1_spec(double s) {
  s = detail::snap_shape(s);
  CFSpec c;
  c.a = [s](int k, double x) {
    if (k == 1) return x;
    const int j = k / 2;
    return (k % 2 == 0) ? j - s : static_cast<double>((k - 1) / 2);
  };
  c.b = [](int k, double x) { return (k % 2 == 1) ? x : 1.0; };
  c.b0 = [](double) { return 0.0; };
  c.domain = Interval{0.0, std::numeric_limits<double>::infinity(), true};
  return c;
}

/// x/(x + 1 - s + (s-1)/(x + 3 - s + 2(s-2)/(x + 5 - s + ...))). This is
/// Laguerre's fraction for e^x Gamma(s, x) divided through by x^{s-1}.
inline CFSpec laguerre_spec(double s) {
  s = detail::snap_shape(s);
  CFSpec c;
  c.a = [s](int k, double x) {
    if (k == 1) return x;
    const double m = k - 1;
    return m * (s - m);
  };
  c.b = [s](int k, double x) { return x + 2.0 * k - 1.0 - s; };
  c.b0 = [](double) { return 0.0; };
  c.domain = Interval{0.0, std::numeric_limits<double>::infinity(), true};
  return c;
}

/// 1/(1 + (1-s)v/(1 + v/(1 + (2-s)v/(1 + 2v/(1 + ...))))), v = 1/x.
inline CFSpec winitzki_spec(double s) {
  s = detail::snap_shape(s);
  CFSpec c;
  c.a = [s](int k, double x) {
    if (k == 1) return 1.0;
    const double v = 1.0 / x;
    const int j = k / 2;
    return (k % 2 == 0) ? (j - s) * v : ((k - 1) / 2) * v;
  };
  c.b = [](int, double) { return 1.0; };
  c.b0 = [](double) { return 0.0; };
  c.domain = Interval{0.0, std::numeric_limits<double>::infinity(), true};
  return c;
}

/// x/(s - s x/(1 + s + x - (1 + s) x/(2 + s + x - ...))) for
/// x^{1-s} e^x gamma(s, x), the lower incomplete counterpart.
inline CFSpec lower_spec(double s) {
  CFSpec c;
  c.a = [s](int k, double x) { return k == 1 ? x : -(s + k - 2.0) * x; };
  c.b = [s](int k, double x) { return k == 1 ? s : (k - 1.0) + s + x; };
  c.b0 = [](double) { return 0.0; };
  c.domain = Interval{0.0, std::numeric_limits<double>::infinity(), false};
  return c;
}

/// Depth-n convergent of `spec` (n >= 1), evaluated backward.
inline double fixed_depth(const CFSpec& spec, double x, int n) {
  if (n < 1) throw domain_error("gamma: depth must be at least 1");
  return eval_convergent(spec, x, n);
}

struct AdaptiveResult {
  double value = 0.0;
  int depth = 0;
  bool terminated = false;  // a zero numerator ended the fraction
};

/// Runs the forward recurrence until two successive convergents agree to
/// `rel_tol`, then re-evaluates that depth backward. A vanishing numerator
/// ends the fraction exactly.
inline AdaptiveResult evaluate_adaptive(const CFSpec& spec, double x,
                                        double rel_tol = kAdaptiveTolerance,
                                        int cap = kAdaptiveCap) {
  ConvergentState state = initial_state(spec, x);
  advance(spec, x, state);
  double previous = state.value();
  for (int n = 1; n <= cap; ++n) {
    if (spec.a(n + 1, x) == 0.0) {
      return {eval_convergent(spec, x, n), n, true};
    }
    advance(spec, x, state);
    const double current = state.value();
    if (std::abs(current - previous) < rel_tol * std::abs(current)) {
      return {eval_convergent(spec, x, n + 1), n + 1, false};
    }
    previous = current;
  }
  throw convergence_error("gamma: continued fraction did not settle within " +
                          std::to_string(cap) + " levels");
}

inline double cf_l1(double s, double x, int n) {
  detail::check_shape(s);
  detail::check_positive_x(x, "cf_l1");
  return fixed_depth(l1_spec(s), x, n);
}

inline double laguerre(double s, double x, int n) {
  detail::check_shape(s);
  detail::check_positive_x(x, "laguerre");
  return fixed_depth(laguerre_spec(s), x, n);
}

inline double winitzki_cf(double s, double x, int n) {
  detail::check_shape(s);
  detail::check_positive_x(x, "winitzki_cf");
  return fixed_depth(winitzki_spec(s), x, n);
}

inline double lower_cf(double s, double x, int n) {
  detail::check_shape(s);
  if (!(x >= 0.0)) throw domain_error("lower_cf: x must be non-negative");
  if (x == 0.0) return 0.0;
  return fixed_depth(lower_spec(s), x, n);
}

enum class Form { L1, Laguerre, Winitzki };

inline CFSpec form_spec(Form form, double s) {
  switch (form) {
    case Form::L1: return l1_spec(s);
    case Form::Laguerre: return laguerre_spec(s);
    case Form::Winitzki: return winitzki_spec(s);
  }
  throw std::logic_error("gamma: unknown form");
}

/// M_s(x) by the chosen form with the adaptive stopping rule.
inline double mills(Form form, double s, double x,
                    double rel_tol = kAdaptiveTolerance, int cap = kAdaptiveCap) {
  detail::check_shape(s);
  detail::check_positive_x(x, "gamma::mills");
  return evaluate_adaptive(form_spec(form, s), x, rel_tol, cap).value;
}

inline double lower_mills(double s, double x, double rel_tol = kAdaptiveTolerance,
                          int cap = kAdaptiveCap) {
  detail::check_shape(s);
  if (!(x >= 0.0)) throw domain_error("lower_mills: x must be non-negative");
  if (x == 0.0) return 0.0;
  return evaluate_adaptive(lower_spec(s), x, rel_tol, cap).value;
}

using Evaluator = std::function<double(double s, double x)>;

inline double default_evaluator(double s, double x) {
  return mills(Form::L1, s, x);
}

/// Brings s down into (0, 1] with M_s = 1 + ((s-1)/x) M_{s-1}, evaluates
/// there and unwinds.
inline double reduce_s(double s, double x,
                       const Evaluator& evaluator = default_evaluator) {
  detail::check_shape(s);
  detail::check_positive_x(x, "reduce_s");
  s = detail::snap_shape(s);
  const int steps = s > 1.0 ? static_cast<int>(std::ceil(s)) - 1 : 0;
  const double base = s - steps;
  double m = evaluator(base, x);
  for (int i = 1; i <= steps; ++i) {
    const double si = base + i;
    m = 1.0 + ((si - 1.0) / x) * m;
  }
  return m;
}

struct Bracket {
  double lower = 0.0;
  double upper = 0.0;

  bool contains(double v) const { return lower <= v && v <= upper; }
  double width() const { return upper - lower; }
};

/// Consecutive L1 convergents at depths n and n + 1. For s in (0, 1] every
/// coefficient is positive and the pair brackets M_s(x).
inline Bracket bounds_s01(double s, double x, int n) {
  if (!(s > 0.0 && s <= 1.0)) {
    throw domain_error("bounds_s01: s must lie in (0, 1]");
  }
  detail::check_positive_x(x, "bounds_s01");
  const double a = cf_l1(s, x, n);
  const double b = cf_l1(s, x, n + 1);
  return {std::min(a, b), std::max(a, b)};
}

}  // namespace mills::gamma
