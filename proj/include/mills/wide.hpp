#pragma once

// Extended-precision scalar for checks whose left and right sides differ by
// far less than a double ulp of the operands (Euler identities at depth 12,
// determinant identities at depth 15).

#include <cmath>

namespace mills {

#if defined(__SIZEOF_FLOAT128__)
using wide_float = __float128;
#else
using wide_float = long double;
#endif

inline wide_float wide_abs(wide_float v) { return v < 0 ? -v : v; }

/// A_k, B_k of Laplace's fraction (engine indexing, k = 0..depth) in wide
/// precision.
struct WideLaplace {
  static constexpr int kMax = 64;
  wide_float A[kMax + 1];
  wide_float B[kMax + 1];

  WideLaplace(double x, int depth) {
    const wide_float wx = x;
    A[0] = 0;
    B[0] = 1;
    wide_float a_prev = 1, b_prev = 0;  // A_{-1}, B_{-1}
    for (int k = 1; k <= depth && k <= kMax; ++k) {
      const wide_float ak = (k == 1) ? 1 : k - 1;
      const wide_float na = wx * A[k - 1] + ak * a_prev;
      const wide_float nb = wx * B[k - 1] + ak * b_prev;
      a_prev = A[k - 1];
      b_prev = B[k - 1];
      A[k] = na;
      B[k] = nb;
    }
  }

  wide_float convergent(int k) const { return A[k] / B[k]; }
};

}  // namespace mills
