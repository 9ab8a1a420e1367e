#pragma once

#include <cmath>
#include <string>

#include "wdiam/error.hpp"

namespace wdiam::detail {

struct RootResult {
  double x = 0.0;
  int iterations = 0;
};

inline constexpr int kMaxBisections = 200;
inline constexpr int kMaxNewtonSteps = 20;

/// Bisection on [lo, hi] followed by Newton polishing. Expects f(lo) <= 0 <=
/// f(hi) (values passed in). Bisection stops once the bracket is no wider
/// than `xtol` or stops shrinking in floating point.
template <class F, class DF>
RootResult bracketed_root(F&& f, DF&& df, double lo, double hi, double flo, double fhi,
                          double xtol = 0.0) {
  RootResult out;
  if (flo == 0.0) return {lo, 0};
  if (fhi == 0.0) return {hi, 0};
  if (!(flo < 0.0 && fhi > 0.0)) {
    throw Error(Errc::ConvergenceFailure, "root is not bracketed");
  }
  int it = 0;
  for (; it < kMaxBisections; ++it) {
    const double mid = lo + 0.5 * (hi - lo);
    if (mid <= lo || mid >= hi || hi - lo <= xtol) break;
    const double fm = f(mid);
    if (fm == 0.0) return {mid, it + 1};
    if (fm < 0.0) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
      fhi = fm;
    }
  }
  if (it == kMaxBisections) throw Error(Errc::ConvergenceFailure, "bisection iteration cap hit");

  double x = (-flo < fhi) ? lo : hi;
  double fx = (-flo < fhi) ? flo : fhi;
  for (int k = 0; k < kMaxNewtonSteps && fx != 0.0; ++k) {
    const double d = df(x);
    if (!(std::isfinite(d) && d != 0.0)) break;
    const double next = x - fx / d;
    if (!(next >= lo && next <= hi)) break;
    const double fn = f(next);
    ++it;
    if (!(std::abs(fn) < std::abs(fx))) break;
    x = next;
    fx = fn;
  }
  out.x = x;
  out.iterations = it;
  return out;
}

}  // namespace wdiam::detail
