#pragma once

// Building blocks for the Gaussian Mills ratio R(x) = (1 - Phi(x)) / phi(x):
// the density, Laplace's continued fraction and its (1/x^2)-form, the
// Taylor series at 0, the divergent Laurent series at infinity and the
// simplest two-point Pade approximant.
//
// Index convention. Laplace's fraction repeats the numerator 1, so R_n
// denotes the fraction whose last numerator is n:
//
//   R_0 = 1/x,  R_1 = 1/(x + 1/x),  R_2 = 1/(x + 1/(x + 2/x)), ...
//
// In engine depth (number of partial quotients) R_n sits at depth n + 1.

#include <cmath>
#include <numbers>

#include "mills/cf_engine.hpp"
#include "mills/errors.hpp"
#include "mills/jet.hpp"

namespace mills {

inline constexpr double kSqrtHalfPi = 1.2533141373155002512;   // sqrt(pi/2)
inline constexpr double kInvSqrt2Pi = 0.39894228040143267794;  // 1/sqrt(2 pi)

constexpr int to_engine_depth(int n) { return n + 1; }
constexpr int to_numerator_index(int engine_depth) { return engine_depth - 1; }

/// Standard Gaussian density.
inline double phi(double x) { return kInvSqrt2Pi * std::exp(-0.5 * x * x); }

/// 1/(x + 1/(x + 2/(x + 3/(x + ...)))) in engine indexing:
/// a_1 = 1, a_k = k - 1 (k >= 2), b_k = x, b_0 = 0.
inline CFSpec laplace_spec() {
  CFSpec s;
  s.a = [](int k, double) { return k == 1 ? 1.0 : static_cast<double>(k - 1); };
  s.b = [](int, double x) { return x; };
  s.b0 = [](double) { return 0.0; };
  s.domain = Interval{0.0, std::numeric_limits<double>::infinity(), true};
  return s;
}

/// The same fraction before clearing powers of x: with v = 1/x^2,
/// (1/x) * 1/(1 + v/(1 + 2v/(1 + 3v/(1 + ...)))). The 1/x prefactor is folded
/// into the first numerator so convergents equal those of laplace_spec().
inline CFSpec laplace_v_spec() {
  CFSpec s;
  s.a = [](int k, double x) {
    return k == 1 ? 1.0 / x : static_cast<double>(k - 1) / (x * x);
  };
  s.b = [](int, double) { return 1.0; };
  s.b0 = [](double) { return 0.0; };
  s.domain = Interval{0.0, std::numeric_limits<double>::infinity(), true};
  return s;
}

/// R_n(x) with the denominator under numerator n replaced by `tail`. For
/// n = 0 this is 1/tail. Works on doubles or on Jets, in which case the
/// result carries exact first and second derivatives in x.
template <class T>
T laplace_terminated(T x, int n, T tail) {
  if (n < 0) throw domain_error("laplace_terminated: negative index");
  T t = tail;
  for (int k = n; k >= 1; --k) {
    if (value_of(t) == 0.0) throw evaluation_error("zero denominator", k + 1);
    t = x + T(static_cast<double>(k)) / t;
  }
  if (value_of(t) == 0.0) throw evaluation_error("zero denominator", 1);
  return T(1.0) / t;
}

struct SeriesResult {
  double value = 0.0;
  /// Taylor: bound on the omitted tail. Asymptotic: magnitude of the next
  /// term.
  double error_estimate = 0.0;
  /// Asymptotic series only: the next term is larger than the last one kept.
  bool diverging = false;
};

/// Partial sum (1/x) * sum_{j=0..m} (-1)^j (2j-1)!! / x^{2j}.
inline SeriesResult asymptotic_series(double x, int m) {
  if (!(x > 0.0)) throw domain_error("asymptotic_series: x must be positive");
  if (m < 0) throw domain_error("asymptotic_series: negative term count");
  const double inv_x2 = 1.0 / (x * x);
  double term = 1.0;
  double sum = 1.0;
  for (int j = 1; j <= m; ++j) {
    term *= -(2.0 * j - 1.0) * inv_x2;
    sum += term;
  }
  const double next = -term * (2.0 * m + 1.0) * inv_x2;
  SeriesResult r;
  r.value = sum / x;
  r.error_estimate = std::abs(next) / x;
  r.diverging = std::abs(next) > std::abs(term);
  return r;
}

inline constexpr double kTaylorMaxAbsX = 4.0;

/// Taylor coefficients of R at 0 from R' = xR - 1:
/// c_0 = sqrt(pi/2), c_1 = -1, c_{k+1} = c_{k-1} / (k + 1).
inline double taylor_coefficient(int k) {
  double even = kSqrtHalfPi;
  double odd = -1.0;
  for (int j = 2; j <= k; ++j) {
    if (j % 2 == 0) even /= j;
    else odd /= j;
  }
  return k % 2 == 0 ? even : odd;
}

/// First m Taylor terms (k = 0..m-1). The error estimate is twice the first
/// omitted term, a valid bound once m >= 2 x^2 (successive omitted terms
/// then shrink by at least half).
inline SeriesResult taylor_mills(double x, int m) {
  if (!(std::abs(x) <= kTaylorMaxAbsX)) {
    throw domain_error("taylor_mills: |x| must not exceed 4");
  }
  if (m < 1) throw domain_error("taylor_mills: need at least one term");
  double even = kSqrtHalfPi;  // c_{2j}
  double odd = -1.0;          // c_{2j+1}
  double xpow = 1.0;
  double sum = 0.0;
  for (int k = 0; k < m; ++k) {
    if (k >= 2) {
      if (k % 2 == 0) even /= k;
      else odd /= k;
    }
    sum += (k % 2 == 0 ? even : odd) * xpow;
    xpow *= x;
  }
  const double next_c = (m % 2 == 0) ? even / m : odd / m;
  SeriesResult r;
  r.value = sum;
  r.error_estimate = 2.0 * std::abs(next_c * xpow);
  return r;
}

/// Two-point Pade approximant fitting one coefficient at 0 and two at
/// infinity.
inline double pade_r2(double x) {
  if (!(x >= 0.0)) throw domain_error("pade_r2: x must be non-negative");
  constexpr double pi = std::numbers::pi;
  const double s2pi = std::sqrt(2.0 * pi);
  const double num = (pi - 2.0) * s2pi + x * (4.0 - pi);
  const double den = 2.0 * (pi - 2.0) + x * s2pi + x * x * (4.0 - pi);
  return num / den;
}

/// The terminating denominator that turns R_1 into pade_r2:
/// pade_r2(x) = 1/(x + 1/pade_beta1(x)).
inline double pade_beta1(double x) {
  constexpr double pi = std::numbers::pi;
  const double s2pi = std::sqrt(2.0 * pi);
  return ((pi - 2.0) * s2pi + x * (4.0 - pi)) /
         (2.0 * (pi - 2.0) + x * (3.0 - pi) * s2pi);
}

}  // namespace mills
