#pragma once

// Modified Laplace convergents for the Gaussian Mills ratio and the error
// functionals used to study them.
//
// For a terminating denominator beta_n the approximant is
//
//   R_n(x) = 1/(x + 1/(x + 2/(x + ... + n/beta_n(x)))),
//
// its tail error is Delta_n(x) = (1 - Phi(x)) - phi(x) R_n(x), and
// delta_n = 1 + R_n' - x R_n = -Delta_n'/phi is the quantity whose sign
// decides whether R_n is an upper or a lower bound.

#include <cmath>
#include <optional>
#include <string>

#include "mills/cf_engine.hpp"
#include "mills/errors.hpp"
#include "mills/jet.hpp"
#include "mills/laplace.hpp"
#include "mills/oracle.hpp"
#include "mills/tail_family.hpp"

namespace mills {

enum class BoundSide { Upper, Lower, Unknown };

inline std::string_view bound_side_name(BoundSide side) {
  switch (side) {
    case BoundSide::Upper: return "upper";
    case BoundSide::Lower: return "lower";
    case BoundSide::Unknown: return "unknown";
  }
  return "unknown";
}

/// Which side of R the approximant falls on. Only families whose alternation
/// is proven report a side: R_0 = 1/x is above R, so even n are upper
/// bounds and odd n lower bounds.
inline BoundSide bound_side(FamilyKind kind, int n) {
  switch (kind) {
    case FamilyKind::Classic:
    case FamilyKind::SqrtDuembgen:
    case FamilyKind::Linear:
      return n % 2 == 0 ? BoundSide::Upper : BoundSide::Lower;
    default:
      return BoundSide::Unknown;
  }
}

struct Approximation {
  double value = 0.0;
  int n = 0;  // numerator index of the last level
  FamilyKind family = FamilyKind::Classic;
  BoundSide bound_side = BoundSide::Unknown;
  std::optional<double> trunc_bound;  // classic family only
};

namespace detail {

inline void check_mills_domain(double x, FamilyKind kind, int n) {
  if (n < 0) throw domain_error("mills: negative index");
  if (std::isnan(x)) throw domain_error("mills: x is NaN");
  if (kind == FamilyKind::Classic) {
    if (!(x > 0.0)) throw domain_error("mills: classic convergents need x > 0");
  } else if (!(x >= 0.0)) {
    throw domain_error("mills: modified convergents need x >= 0");
  }
}

}  // namespace detail

/// R_n with value, first and second derivative in x.
inline Jet mills_jet(double x, const TailFamily& family, int n) {
  detail::check_mills_domain(x, family.kind(), n);
  const Jet xj = Jet::variable(x);
  return laplace_terminated(xj, n, family.jet(n, xj));
}

inline double mills_value(double x, const TailFamily& family, int n) {
  detail::check_mills_domain(x, family.kind(), n);
  return laplace_terminated(x, n, family.value(n, x));
}

/// n!/(B_n B_{n+1}) with B_k the denominators of Laplace's fraction
/// (B_0 = 1, B_1 = x, B_{k+1} = x B_k + k B_{k-1}). This is |R_{n-1} - R_n|
/// (with R_{-1} = 0), and R lies strictly between the two, so it bounds
/// |R - R_n|.
inline double truncation_bound(double x, int n) {
  if (!(x > 0.0)) throw domain_error("truncation_bound: x must be positive");
  if (n < 0) throw domain_error("truncation_bound: negative index");
  const ConvergentState s = forward_recurrence(laplace_spec(), x, n + 1);
  return std::exp(std::lgamma(n + 1.0) - s.log_abs_B_prev() - s.log_abs_B());
}

inline Approximation mills(double x, const TailFamily& family, int n) {
  Approximation a;
  a.value = mills_value(x, family, n);
  a.n = n;
  a.family = family.kind();
  a.bound_side = bound_side(family.kind(), n);
  if (family.kind() == FamilyKind::Classic) a.trunc_bound = truncation_bound(x, n);
  return a;
}

/// Reciprocal of R. Negative x uses R(-x) = 1/phi(x) - R(x).
inline double hazard(double x) {
  if (std::isnan(x)) throw domain_error("hazard: x is NaN");
  if (x >= 0.0) return 1.0 / oracle::reference_mills(x);
  return 1.0 / (1.0 / phi(x) - oracle::reference_mills(-x));
}

/// Delta_n(x) = (1 - Phi(x)) - phi(x) R_n(x).
inline double delta(int n, const TailFamily& family, double x) {
  const double approx = mills_value(x, family, n);
  return oracle::reference_tail(x) - phi(x) * approx;
}

/// delta_n(u) = 1 + R_n'(u) - u R_n(u).
inline double error_integrand(int n, const TailFamily& family, double u) {
  const Jet r = mills_jet(u, family, n);
  return 1.0 + r.d1 - u * r.v;
}

/// R_n'' - 2u R_n' + (u^2 - 1) R_n - u, i.e. -Delta_n''/phi.
inline double second_error_integrand(int n, const TailFamily& family,
                                     double u) {
  const Jet r = mills_jet(u, family, n);
  return r.d2 - 2.0 * u * r.d1 + (u * u - 1.0) * r.v - u;
}

/// u beta(u) + beta'(u) + n - beta(u)^2, whose sign times (-1)^{n-1} is the
/// sign of delta_n(u).
inline double sign_operator(int n, const TailFamily& family, double u) {
  const Jet b = family.jet(n, Jet::variable(u));
  return u * b.v + b.d1 + n - b.v * b.v;
}

/// Denominator of the modified convergent, beta B_n + n B_{n-1} in terms of
/// the classic denominators; delta_n = (-1)^{n-1} n! G / D^2 exactly.
inline double modified_denominator(int n, const TailFamily& family, double u) {
  const double beta = family.value(n, u);
  if (n == 0) return beta;
  const ConvergentState s = forward_recurrence(laplace_spec(), u, n);
  // s.B = B_n, s.B_prev = B_{n-1}, both scaled by 2^-exp2.
  return std::ldexp(beta * s.B + n * s.B_prev, static_cast<int>(s.exp2));
}

}  // namespace mills
