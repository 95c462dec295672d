#pragma once

// Reference values with explicit error budgets, built only from the
// expansions in this library: the Taylor series at 0 below x = 1 and a deep
// Laplace fraction above, with depth chosen from the Euler bound
// n!/(B_n B_{n+1}). Gamma values come from Laguerre's fraction and are
// checked against quadrature of the integral representation.

#include <algorithm>
#include <cmath>
#include <string>

#include "mills/errors.hpp"
#include "mills/gamma_mills.hpp"
#include "mills/laplace.hpp"

namespace mills::oracle {

inline constexpr double kTargetRelError = 1e-15;
inline constexpr double kTaylorTermFloor = 1e-18;
inline constexpr int kTaylorMaxTerms = 200;
inline constexpr int kMaxCfDepth = 200000;
inline constexpr double kBranchSwitch = 1.0;

/// Taylor branch: terms until |c_k x^k| < 1e-18.
inline double mills_taylor(double x) {
  if (!(std::abs(x) <= kTaylorMaxAbsX)) {
    throw domain_error("oracle: Taylor branch needs |x| <= 4");
  }
  double even = kSqrtHalfPi;
  double odd = -1.0;
  double xpow = 1.0;
  double sum = 0.0;
  for (int k = 0; k < kTaylorMaxTerms; ++k) {
    if (k >= 2) {
      if (k % 2 == 0) even /= k;
      else odd /= k;
    }
    const double term = (k % 2 == 0 ? even : odd) * xpow;
    sum += term;
    if (k >= 2 && std::abs(term) < kTaylorTermFloor) return sum;
    xpow *= x;
  }
  return sum;
}

/// Smallest n with n!/(B_n B_{n+1}) < 1e-15 * x/(x^2 + 1), a lower bound on
/// R(x). Works with rho_n = B_n/B_{n+1} so nothing overflows.
inline int laplace_depth_for(double x, double rel_target = kTargetRelError) {
  if (!(x > 0.0)) throw domain_error("oracle: continued fraction branch needs x > 0");
  const double target = rel_target * x / (x * x + 1.0);
  double rho_prev = 1.0 / x;  // B_0/B_1
  double bound = 1.0 / x;     // 0!/(B_0 B_1)
  for (int n = 1; n <= kMaxCfDepth; ++n) {
    const double rho = 1.0 / (x + n * rho_prev);  // B_n/B_{n+1}
    bound *= n * rho_prev * rho;
    if (bound < target) return n;
    rho_prev = rho;
  }
  throw oracle_error("oracle: depth cap exceeded for x = " + std::to_string(x));
}

/// Continued-fraction branch. The convergent R_n (numerator n) lies within
/// the same Euler bound as its predecessor.
inline double mills_cf(double x) {
  const int n = laplace_depth_for(x);
  return laplace_terminated(x, n, x);
}

/// Gaussian Mills ratio (1 - Phi(x)) / phi(x) for x >= 0.
inline double reference_mills(double x) {
  if (!(x >= 0.0)) throw domain_error("reference_mills: x must be non-negative");
  if (std::isinf(x)) return 0.0;
  return x < kBranchSwitch ? mills_taylor(x) : mills_cf(x);
}

/// Upper Gaussian tail 1 - Phi(x) = phi(x) R(x), x >= 0.
inline double reference_tail(double x) { return phi(x) * reference_mills(x); }

inline constexpr double kGammaCfTolerance = 1e-12;
inline constexpr int kGammaCfCap = 5000;
inline constexpr double kGammaBranchTolerance = 1e-7;
inline constexpr double kQuadratureLimit = 60.0;
inline constexpr int kQuadraturePanels = 12000;

struct QuadratureResult {
  double value = 0.0;
  double remainder_bound = 0.0;
  double upper_limit = 0.0;
};

/// Composite Simpson rule for int_0^U (1 + u/x)^{s-1} e^{-u} du = M_s(x).
/// U starts at 60 and grows while the tail estimate
/// 4 e^{-U} (1 + U/x)^{max(s-1, 0)} exceeds 1e-14.
inline QuadratureResult gamma_mills_quadrature(double s, double x) {
  if (!(s > 0.0) || !(x > 0.0)) {
    throw domain_error("gamma_mills_quadrature: need s > 0 and x > 0");
  }
  auto f = [s, x](double u) { return std::pow(1.0 + u / x, s - 1.0) * std::exp(-u); };
  auto tail = [s, x](double u) {
    return 4.0 * std::exp(-u) * std::pow(1.0 + u / x, std::max(s - 1.0, 0.0));
  };
  double upper = kQuadratureLimit;
  while (tail(upper) > 1e-14 && upper < 2000.0) upper += 20.0;
  const int panels = static_cast<int>(kQuadraturePanels * (upper / kQuadratureLimit));
  const double h = upper / (2.0 * panels);
  double sum = f(0.0) + f(upper);
  for (int i = 1; i < 2 * panels; ++i) sum += (i % 2 == 1 ? 4.0 : 2.0) * f(i * h);
  return {sum * h / 3.0, tail(upper), upper};
}

/// Laguerre branch alone.
inline double gamma_mills_cf(double s, double x) {
  return gamma::mills(gamma::Form::Laguerre, s, x, kGammaCfTolerance, kGammaCfCap);
}

/// Gamma Mills ratio M_s(x). For x >= 1 the fraction is cross-checked
/// against quadrature and a relative disagreement above 1e-7 is an error.
inline double reference_gamma_mills(double s, double x) {
  const double cf = gamma_mills_cf(s, x);
  if (x >= 1.0) {
    const double quad = gamma_mills_quadrature(s, x).value;
    if (std::abs(quad - cf) > kGammaBranchTolerance * std::abs(cf)) {
      throw oracle_error("reference_gamma_mills: branches disagree at s = " +
                         std::to_string(s) + ", x = " + std::to_string(x));
    }
  }
  return cf;
}

}  // namespace mills::oracle
