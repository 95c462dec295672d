#pragma once

// Generic evaluation of continued fractions
//
//   b0(x) + a(1,x)/(b(1,x) + a(2,x)/(b(2,x) + ... a(n,x)/b(n,x)))
//
// Depth n counts partial quotients, so depth 0 is b0 alone and depth 1 is
// b0 + a1/b1. The Gaussian module layers its own "numerator n" indexing on
// top of this (see laplace.hpp).

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "mills/errors.hpp"

namespace mills {

struct Interval {
  double lo = 0.0;
  double hi = std::numeric_limits<double>::infinity();
  bool lo_open = true;

  bool contains(double x) const {
    return (lo_open ? x > lo : x >= lo) && x < hi;
  }
};

struct CFSpec {
  std::function<double(int, double)> a;  // k >= 1
  std::function<double(int, double)> b;  // k >= 1
  std::function<double(double)> b0;
  Interval domain;
};

// Canonical numerator/denominator pair at depth n. All four values share a
// common factor 2^-exp2 so that A/B ratios stay exact while B_n grows
// factorially.
struct ConvergentState {
  int n = 0;
  double A = 0.0;
  double A_prev = 1.0;
  double B = 1.0;
  double B_prev = 0.0;
  std::int64_t exp2 = 0;

  double value() const { return A / B; }
  double logscale() const { return static_cast<double>(exp2) * std::log(2.0); }
  // log|B_n| and log|B_{n-1}| with the rescaling undone.
  double log_abs_B() const { return std::log(std::abs(B)) + logscale(); }
  double log_abs_B_prev() const {
    return std::log(std::abs(B_prev)) + logscale();
  }
};

namespace detail {

inline constexpr int kRescaleExp2 = 500;
inline const double kRescaleThreshold = std::ldexp(1.0, kRescaleExp2);

inline double checked(double v, int k, const char* which) {
  if (!std::isfinite(v)) {
    throw evaluation_error(std::string("non-finite coefficient ") + which, k);
  }
  return v;
}

}  // namespace detail

// Advances `state` by one level using x_k = b_k x_{k-1} + a_k x_{k-2}.
inline void advance(const CFSpec& spec, double x, ConvergentState& state) {
  const int k = state.n + 1;
  const double ak = detail::checked(spec.a(k, x), k, "a");
  const double bk = detail::checked(spec.b(k, x), k, "b");
  const double A = bk * state.A + ak * state.A_prev;
  const double B = bk * state.B + ak * state.B_prev;
  state.A_prev = state.A;
  state.B_prev = state.B;
  state.A = A;
  state.B = B;
  state.n = k;
  if (std::abs(state.B) > detail::kRescaleThreshold) {
    state.A = std::ldexp(state.A, -detail::kRescaleExp2);
    state.A_prev = std::ldexp(state.A_prev, -detail::kRescaleExp2);
    state.B = std::ldexp(state.B, -detail::kRescaleExp2);
    state.B_prev = std::ldexp(state.B_prev, -detail::kRescaleExp2);
    state.exp2 += detail::kRescaleExp2;
  }
}

inline ConvergentState initial_state(const CFSpec& spec, double x) {
  ConvergentState s;
  s.A = detail::checked(spec.b0(x), 0, "b0");
  return s;
}

/// Forward Wallis-Euler recursion to depth n.
inline ConvergentState forward_recurrence(const CFSpec& spec, double x, int n) {
  if (n < 0) throw domain_error("forward_recurrence: negative depth");
  if (!spec.domain.contains(x)) {
    throw domain_error("forward_recurrence: x outside the domain of the fraction");
  }
  ConvergentState s = initial_state(spec, x);
  for (int k = 0; k < n; ++k) advance(spec, x, s);
  return s;
}

/// Backward recurrence R_m = b_m + a_{m+1}/R_{m+1}, started from R_n = tail
/// in place of b_n. With tail = b(n, x) this is the plain convergent. Depth 0
/// ignores the tail and returns b0.
inline double eval_backward(const CFSpec& spec, double x, int n, double tail) {
  if (n < 0) throw domain_error("eval_backward: negative depth");
  if (n == 0) return detail::checked(spec.b0(x), 0, "b0");
  double t = tail;
  for (int m = n - 1; m >= 1; --m) {
    if (t == 0.0) throw evaluation_error("zero denominator", m + 1);
    t = detail::checked(spec.b(m, x), m, "b") +
        detail::checked(spec.a(m + 1, x), m + 1, "a") / t;
  }
  if (t == 0.0) throw evaluation_error("zero denominator", 1);
  return detail::checked(spec.b0(x), 0, "b0") +
         detail::checked(spec.a(1, x), 1, "a") / t;
}

/// Plain depth-n convergent through the backward path.
inline double eval_convergent(const CFSpec& spec, double x, int n) {
  if (n == 0) return spec.b0(x);
  return eval_backward(spec, x, n, spec.b(n, x));
}

/// Lee-style convergent with the last numerator replaced by alpha and the
/// last denominator by b_n + gamma.
inline double eval_doubly_modified(const CFSpec& spec, double x, int n,
                                   double alpha, double gamma) {
  if (n < 1) throw domain_error("eval_doubly_modified: depth must be >= 1");
  ConvergentState s = forward_recurrence(spec, x, n - 1);
  // s holds (A_{n-1}, A_{n-2}) and (B_{n-1}, B_{n-2}).
  const double bn = detail::checked(spec.b(n, x), n, "b") + gamma;
  const double num = bn * s.A + alpha * s.A_prev;
  const double den = bn * s.B + alpha * s.B_prev;
  if (den == 0.0) throw evaluation_error("vanishing modified denominator", n);
  return num / den;
}

/// Equivalence transformation a'_k = p_{k-1} p_k a_k, b'_k = p_k b_k with
/// p_0 = 1. Every convergent is preserved.
inline CFSpec equivalence_transform(const CFSpec& spec,
                                    std::function<double(int, double)> p) {
  auto checked_p = [p](int k, double x) {
    if (k == 0) return 1.0;
    const double v = p(k, x);
    if (v == 0.0 || !std::isfinite(v)) {
      throw invalid_transform("equivalence_transform: p_" + std::to_string(k) +
                              " must be finite and nonzero");
    }
    return v;
  };
  CFSpec out;
  out.domain = spec.domain;
  out.b0 = spec.b0;
  out.a = [a = spec.a, checked_p](int k, double x) {
    return checked_p(k - 1, x) * checked_p(k, x) * a(k, x);
  };
  out.b = [b = spec.b, checked_p](int k, double x) {
    return checked_p(k, x) * b(k, x);
  };
  return out;
}

inline CFSpec equivalence_transform(const CFSpec& spec,
                                    std::function<double(int)> p) {
  return equivalence_transform(
      spec, std::function<double(int, double)>(
                [p = std::move(p)](int k, double) { return p(k); }));
}

namespace detail {

// Leibniz expansion over all permutations; fine for the n <= 9 matrices the
// continuant oracle builds.
inline double leibniz_det(const std::vector<std::vector<double>>& m) {
  const std::size_t size = m.size();
  if (size == 0) return 1.0;
  std::vector<std::size_t> perm(size);
  std::iota(perm.begin(), perm.end(), 0);
  double det = 0.0;
  do {
    double term = 1.0;
    for (std::size_t i = 0; i < size && term != 0.0; ++i) term *= m[i][perm[i]];
    if (term == 0.0) continue;
    int inversions = 0;
    for (std::size_t i = 0; i < size; ++i)
      for (std::size_t j = i + 1; j < size; ++j)
        if (perm[i] > perm[j]) ++inversions;
    det += (inversions % 2 == 0) ? term : -term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

}  // namespace detail

inline constexpr int kContinuantMaxDepth = 8;

/// (A_n, B_n) from the tridiagonal continuant determinants, expanded
/// directly. Test-scale only.
inline std::pair<double, double> continuant_oracle(const CFSpec& spec, double x,
                                                   int n) {
  if (n < 0 || n > kContinuantMaxDepth) {
    throw std::out_of_range("continuant_oracle: depth must lie in [0, 8]");
  }
  // A_n: diagonal b_0..b_n, sub-diagonal a_1..a_n, super-diagonal -1.
  const std::size_t na = static_cast<std::size_t>(n) + 1;
  std::vector<std::vector<double>> ma(na, std::vector<double>(na, 0.0));
  for (std::size_t i = 0; i < na; ++i) {
    const int k = static_cast<int>(i);
    ma[i][i] = (k == 0) ? spec.b0(x) : spec.b(k, x);
    if (i + 1 < na) ma[i][i + 1] = -1.0;
    if (i > 0) ma[i][i - 1] = spec.a(k, x);
  }
  // B_n: same pattern starting at b_1, sub-diagonal a_2..a_n.
  const std::size_t nb = static_cast<std::size_t>(n);
  std::vector<std::vector<double>> mb(nb, std::vector<double>(nb, 0.0));
  for (std::size_t i = 0; i < nb; ++i) {
    const int k = static_cast<int>(i) + 1;
    mb[i][i] = spec.b(k, x);
    if (i + 1 < nb) mb[i][i + 1] = -1.0;
    if (i > 0) mb[i][i - 1] = spec.a(k, x);
  }
  return {detail::leibniz_det(ma), detail::leibniz_det(mb)};
}

}  // namespace mills
