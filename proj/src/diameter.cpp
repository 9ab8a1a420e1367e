#include "wdiam/diameter.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <span>

#include "root_find.hpp"
#include "wdiam/error.hpp"

namespace wdiam {

std::string_view to_string(Branch branch) noexcept {
  switch (branch) {
    case Branch::SymmetricEq: return "symmetric";
    case Branch::AsymmetricEq: return "asymmetric";
    case Branch::NoDiameter: return "none";
  }
  return "unknown";
}

namespace {

constexpr double kSymmetricUpper = 0.70710678118654752440 + 1e-6;
constexpr double kDivergenceGap = 1e-12;
constexpr int kAmbiguityScan = 64;

double refine_top_root(std::span<const double> sorted, double r, double sign);

// x/(1 + sqrt(1 - x)) == 1 - sqrt(1 - x), without the cancellation.
double one_minus_root(double x) { return x / (1.0 + std::sqrt(std::max(0.0, 1.0 - x))); }

// Symmetric equation over r: 2 - sum_i x_i/(1 + s_i), increasing in r.
// The ratio is formed before squaring so x is exactly 1 at r = c_N; the
// square-root singularity there turns one ulp into ~1e-8.
double symmetric_function(std::span<const double> c, double r) {
  double acc = 0.0;
  for (double v : c) {
    const double q = v / r;
    acc += one_minus_root(q * q);
  }
  return 2.0 - acc;
}

double symmetric_derivative(std::span<const double> c, double r) {
  double acc = 0.0;
  for (double v : c) {
    const double x = v * v / (r * r);
    const double s = std::sqrt(std::max(0.0, 1.0 - x));
    if (s == 0.0) return INFINITY;
    acc += x / (r * s);
  }
  return acc;
}

// Asymmetric equation divided by u^2 = 1/r^2:
//   c_N^2/(1 + s_N) - sum_{i<N} c_i^2/(1 + s_i),  s_i = sqrt(1 - c_i^2 u^2).
// Negative at u = 0 whenever c_N < r2, so the trivial u = 0 root is removed.
double asymmetric_function(std::span<const double> sorted, double u) {
  const std::size_t last = sorted.size() - 1;
  auto term = [u](double c) {
    const double c2 = c * c;
    return c2 / (1.0 + std::sqrt(std::max(0.0, 1.0 - c2 * u * u)));
  };
  double acc = term(sorted[last]);
  for (std::size_t i = 0; i < last; ++i) acc -= term(sorted[i]);
  return acc;
}

// asymmetric_function at u = 1/c_N with s_N = 0 exactly.
double asymmetric_at_top(std::span<const double> sorted) {
  const std::size_t last = sorted.size() - 1;
  const double cn = sorted[last];
  double acc = cn * cn;
  for (std::size_t i = 0; i < last; ++i) {
    const double q = sorted[i] / cn;
    acc -= sorted[i] * sorted[i] / (1.0 + std::sqrt(std::max(0.0, 1.0 - q * q)));
  }
  return acc;
}

double asymmetric_derivative(std::span<const double> sorted, double u) {
  const std::size_t last = sorted.size() - 1;
  auto dterm = [u](double c) {
    const double c2 = c * c;
    const double s = std::sqrt(std::max(0.0, 1.0 - c2 * u * u));
    if (s == 0.0) return static_cast<double>(INFINITY);
    return c2 * c2 * u / (s * (1.0 + s) * (1.0 + s));
  };
  double acc = dterm(sorted[last]);
  for (std::size_t i = 0; i < last; ++i) acc -= dterm(sorted[i]);
  return acc;
}

DiameterSolution symmetric_impl(const WState& state) {
  const auto c = state.sorted();
  const double lo = state.largest();
  auto f = [&](double r) { return symmetric_function(c, r); };
  auto df = [&](double r) { return symmetric_derivative(c, r); };
  const double flo = f(lo);
  const double fhi = f(kSymmetricUpper);
  DiameterSolution sol;
  sol.branch = Branch::SymmetricEq;
  if (flo >= 0.0) {
    // On the r1 boundary the root sits at r = c_N; anything larger than
    // rounding noise means the caller misclassified the state.
    if (flo > 1e-12) throw Error(Errc::WrongRegion, "largest coefficient exceeds r1");
    sol.r = lo;
    sol.residual = flo;
    sol.s_top = 0.0;
    return sol;
  }
  if (!(fhi > 0.0)) {
    throw Error(Errc::ConvergenceFailure, "symmetric diameter not bracketed by [c_N, 1/sqrt(2)]");
  }
  const auto root = detail::bracketed_root(f, df, lo, kSymmetricUpper, flo, fhi);
  sol.r = root.x;
  sol.iterations = root.iterations;
  sol.residual = f(root.x);
  sol.s_top = refine_top_root(c, sol.r, 1.0);
  return sol;
}

DiameterSolution asymmetric_impl(const WState& state, const RegionReport& rep) {
  if (rep.r2 - rep.largest <= kDivergenceGap) {
    throw Error(Errc::DivergedToInfinity,
                "largest coefficient is within 1e-12 of r2; the diameter is infinite");
  }
  const auto c = state.sorted();
  const double umax = 1.0 / rep.largest;
  auto f = [&](double u) { return asymmetric_function(c, u); };
  auto df = [&](double u) { return asymmetric_derivative(c, u); };

  // Coarse scan: the root should be the only sign change on (0, 1/c_N].
  double lo = 0.0, hi = umax;
  double flo = f(0.0), fhi = asymmetric_at_top(c);
  int changes = 0;
  double prev_u = 0.0, prev_f = flo;
  for (int j = 1; j <= kAmbiguityScan; ++j) {
    const double u = umax * j / kAmbiguityScan;
    const double fu = (j == kAmbiguityScan) ? fhi : f(u);
    if ((prev_f < 0.0 && fu >= 0.0) || (prev_f > 0.0 && fu <= 0.0)) {
      if (changes == 0) {
        lo = prev_u;
        flo = prev_f;
        hi = u;
        fhi = fu;
      }
      ++changes;
    }
    prev_u = u;
    prev_f = fu;
  }
  if (changes > 1) throw Error(Errc::AmbiguousRoot, "asymmetric equation has several roots");

  DiameterSolution sol;
  sol.branch = Branch::AsymmetricEq;
  if (changes == 0) {
    // Root at u = 1/c_N up to rounding (r1 boundary approached from above).
    if (fhi > -1e-12 && fhi <= 0.0) {
      sol.r = rep.largest;
      sol.residual = fhi * umax * umax;
      sol.s_top = 0.0;
      return sol;
    }
    throw Error(Errc::ConvergenceFailure, "asymmetric diameter not bracketed in (0, 1/c_N]");
  }
  const auto root = detail::bracketed_root(f, df, lo, hi, flo, fhi);
  const double u = root.x;
  sol.r = 1.0 / u;
  sol.iterations = root.iterations;
  sol.residual = f(u) * u * u;
  sol.s_top = refine_top_root(c, sol.r, -1.0);
  return sol;
}

// Newton on the diameter equation written in s = s_N, with companions
//   s_i = sqrt((1 - q_i^2) + q_i^2 s^2),  q_i = c_i / c_N,
// which stays well conditioned as s -> 0; only used there, since s follows
// from r accurately once it is not small. sign is +1 (symmetric) or -1.
double refine_top_root(std::span<const double> sorted, double r, double sign) {
  const std::size_t last = sorted.size() - 1;
  const double cn = sorted[last];
  double s = std::sqrt(std::max(0.0, (r - cn) * (r + cn))) / r;
  if (s >= 1e-2) return s;
  auto eval = [&](double t, double* deriv) {
    double g = sign * t - static_cast<double>(sorted.size() - 2);
    double dg = sign;
    for (std::size_t i = 0; i < last; ++i) {
      const double q = sorted[i] / cn;
      const double si = std::sqrt(std::max(0.0, (1.0 - q) * (1.0 + q) + q * q * t * t));
      g += si;
      if (si > 0.0) dg += q * q * t / si;
    }
    if (deriv) *deriv = dg;
    return g;
  };
  double dg = 0.0;
  double g = eval(s, &dg);
  for (int it = 0; it < 8 && g != 0.0 && dg != 0.0; ++it) {
    const double next = std::clamp(s - g / dg, 0.0, 1.0);
    double dnext = 0.0;
    const double gnext = eval(next, &dnext);
    if (!(std::abs(gnext) < std::abs(g))) break;
    s = next;
    g = gnext;
    dg = dnext;
  }
  return s;
}

}  // namespace

DiameterSolution solve_symmetric(const WState& state) {
  const auto rep = classify(state);
  if (rep.region != Region::Symmetric) {
    throw Error(Errc::WrongRegion, "state is in the " + std::string(to_string(rep.region)) + " region");
  }
  return symmetric_impl(state);
}

DiameterSolution solve_asymmetric(const WState& state) {
  const auto rep = classify(state);
  if (rep.region != Region::Asymmetric) {
    throw Error(Errc::WrongRegion, "state is in the " + std::string(to_string(rep.region)) + " region");
  }
  return asymmetric_impl(state, rep);
}

DiameterSolution solve(const WState& state) { return solve(state, classify(state)); }

DiameterSolution solve(const WState& state, const RegionReport& rep) {
  switch (rep.region) {
    case Region::Symmetric:
      return symmetric_impl(state);
    case Region::Asymmetric:
      if (rep.r2 - rep.largest > kDivergenceGap) return asymmetric_impl(state, rep);
      break;
    case Region::Slight:
      break;
  }
  DiameterSolution sol;
  sol.branch = Branch::NoDiameter;
  sol.r = std::numeric_limits<double>::quiet_NaN();
  return sol;
}

double symmetric_equation_residual(const WState& state, double r) {
  double acc = 0.0;
  for (double c : state.sorted()) acc += std::sqrt(std::max(0.0, r * r - c * c));
  return acc - static_cast<double>(state.size() - 2) * r;
}

double asymmetric_equation_residual(const WState& state, double r) {
  const auto c = state.sorted();
  const std::size_t last = c.size() - 1;
  double acc = -std::sqrt(std::max(0.0, r * r - c[last] * c[last]));
  for (std::size_t i = 0; i < last; ++i) acc += std::sqrt(std::max(0.0, r * r - c[i] * c[i]));
  return acc - static_cast<double>(state.size() - 2) * r;
}

}  // namespace wdiam
