#pragma once

#include <cmath>
#include <utility>

namespace gha::detail {

// Bisection on [lo, hi] (f(lo) <= 0 <= f(hi)) for a fixed number of halvings,
// then Newton steps accepted only while they reduce |f|.
template <typename F, typename DF>
double bisect_then_polish(F&& f, DF&& df, double lo, double hi, int bisection_steps = 80,
                          int newton_steps = 8) {
  for (int step = 0; step < bisection_steps; ++step) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (f(mid) > 0.0) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  double x = std::abs(f(lo)) <= std::abs(f(hi)) ? lo : hi;
  double fx = f(x);
  for (int step = 0; step < newton_steps && fx != 0.0; ++step) {
    const double slope = df(x);
    if (slope == 0.0 || !std::isfinite(slope)) break;
    const double candidate = x - fx / slope;
    const double fc = f(candidate);
    if (!(std::abs(fc) < std::abs(fx))) break;
    x = candidate;
    fx = fc;
  }
  return x;
}

}  // namespace gha::detail
