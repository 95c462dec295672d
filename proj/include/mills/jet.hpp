#pragma once

#include <cmath>

namespace mills {

// Second-order forward-mode number: value, first and second derivative with
// respect to a single variable. Propagating one through the backward
// recurrence differentiates a terminated continued fraction exactly.
struct Jet {
  double v = 0.0;
  double d1 = 0.0;
  double d2 = 0.0;

  constexpr Jet() = default;
  constexpr Jet(double value) : v(value) {}
  constexpr Jet(double value, double first, double second)
      : v(value), d1(first), d2(second) {}

  static constexpr Jet variable(double x) { return {x, 1.0, 0.0}; }
};

constexpr Jet operator+(const Jet& a, const Jet& b) {
  return {a.v + b.v, a.d1 + b.d1, a.d2 + b.d2};
}
constexpr Jet operator-(const Jet& a, const Jet& b) {
  return {a.v - b.v, a.d1 - b.d1, a.d2 - b.d2};
}
constexpr Jet operator-(const Jet& a) { return {-a.v, -a.d1, -a.d2}; }
constexpr Jet operator*(const Jet& a, const Jet& b) {
  return {a.v * b.v, a.d1 * b.v + a.v * b.d1,
          a.d2 * b.v + 2.0 * a.d1 * b.d1 + a.v * b.d2};
}
constexpr Jet operator/(const Jet& a, const Jet& b) {
  // q = a/b, q' = (a' - q b')/b, q'' = (a'' - 2 q' b' - q b'')/b
  const double q = a.v / b.v;
  const double q1 = (a.d1 - q * b.d1) / b.v;
  const double q2 = (a.d2 - 2.0 * q1 * b.d1 - q * b.d2) / b.v;
  return {q, q1, q2};
}

inline Jet sqrt(const Jet& a) {
  const double r = std::sqrt(a.v);
  const double r1 = a.d1 / (2.0 * r);
  const double r2 = (a.d2 - 2.0 * r1 * r1) / (2.0 * r);
  return {r, r1, r2};
}

inline Jet exp(const Jet& a) {
  const double e = std::exp(a.v);
  return {e, e * a.d1, e * (a.d2 + a.d1 * a.d1)};
}

inline double value_of(double x) { return x; }
inline double value_of(const Jet& x) { return x.v; }

}  // namespace mills
