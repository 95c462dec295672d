#pragma once

// Location and size of max |Delta_n| over a half line: a uniform grid, then
// golden-section refinement around the grid maximum, then a spot check that
// |Delta_n| keeps decaying past the right end.

#include <array>
#include <cmath>
#include <cstddef>
#include <vector>

#include "mills/gauss_mills.hpp"
#include "mills/parallel.hpp"

namespace mills {

struct MaxErrorOptions {
  double xmin = 0.0;
  double xmax = 20.0;
  double step = 1e-3;
  double refine_width = 1e-8;
};

struct MaxErrorResult {
  int n = 0;
  double max_abs = 0.0;
  double argmax = 0.0;
  double signed_value = 0.0;  // Delta_n at the argmax
  bool decays_beyond = false; // |Delta| shrinks at xmax + 5, +10, +15
};

namespace detail {

inline std::vector<double> uniform_grid(double lo, double hi, double step) {
  std::vector<double> xs;
  const auto count = static_cast<std::size_t>(std::floor((hi - lo) / step + 1e-9)) + 1;
  xs.reserve(count);
  for (std::size_t i = 0; i < count; ++i) xs.push_back(lo + static_cast<double>(i) * step);
  return xs;
}

}  // namespace detail

inline MaxErrorResult max_abs_delta(const TailFamily& family, int n,
                                    const MaxErrorOptions& opt = {}) {
  const std::vector<double> xs = detail::uniform_grid(opt.xmin, opt.xmax, opt.step);
  std::vector<double> values(xs.size());
  parallel_for(xs.size(), [&](std::size_t i) {
    values[i] = std::abs(delta(n, family, xs[i]));
  });
  std::size_t best = 0;
  for (std::size_t i = 1; i < values.size(); ++i) {
    if (values[i] > values[best]) best = i;
  }

  auto f = [&](double x) { return std::abs(delta(n, family, x)); };
  double lo = std::max(opt.xmin, xs[best] - opt.step);
  double hi = std::min(opt.xmax, xs[best] + opt.step);
  const double inv_phi = 0.6180339887498949;
  double c = hi - inv_phi * (hi - lo);
  double d = lo + inv_phi * (hi - lo);
  double fc = f(c);
  double fd = f(d);
  while (hi - lo > opt.refine_width) {
    if (fc > fd) {
      hi = d;
      d = c;
      fd = fc;
      c = hi - inv_phi * (hi - lo);
      fc = f(c);
    } else {
      lo = c;
      c = d;
      fc = fd;
      d = lo + inv_phi * (hi - lo);
      fd = f(d);
    }
  }

  MaxErrorResult r;
  r.n = n;
  r.argmax = xs[best];
  r.max_abs = values[best];
  const double mid = 0.5 * (lo + hi);
  const double fmid = f(mid);
  if (fmid > r.max_abs) {
    r.max_abs = fmid;
    r.argmax = mid;
  }
  r.signed_value = delta(n, family, r.argmax);

  const std::array<double, 4> probes = {opt.xmax, opt.xmax + 5.0, opt.xmax + 10.0,
                                        opt.xmax + 15.0};
  r.decays_beyond = true;
  double previous = f(probes[0]);
  for (std::size_t i = 1; i < probes.size(); ++i) {
    const double v = f(probes[i]);
    if (v > previous || v > r.max_abs) r.decays_beyond = false;
    previous = v;
  }
  return r;
}

}  // namespace mills
