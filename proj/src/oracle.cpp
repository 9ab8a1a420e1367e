#include "wdiam/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>

#include "wdiam/error.hpp"
#include "wdiam/random.hpp"

namespace wdiam {

namespace {

struct Ascent {
  double value = 0.0;
  std::vector<double> x;  // <0|u_k> = sin(theta_k)
  std::vector<double> y;  // <1|u_k> = cos(theta_k)
  int sweeps = 0;
  bool converged = false;
};

double overlap_of(std::span<const double> c, const std::vector<double>& x, const std::vector<double>& y) {
  // sum_k c_k y_k prod_{j != k} x_j, accumulated left to right
  double prod = 1.0, acc = 0.0;
  for (std::size_t j = 0; j < c.size(); ++j) {
    acc = acc * x[j] + c[j] * y[j] * prod;
    prod *= x[j];
  }
  return acc;
}

// Holding every qubit but k fixed the overlap is y_k A + x_k B with
// A = c_k prod_{j!=k} x_j and B = sum_{l!=k} c_l y_l prod_{j!=k,l} x_j, so the
// best local state is (x_k, y_k) = (B, A)/|(A, B)| and each step is monotone.
void ascend(std::span<const double> c, Ascent& st, const OracleOptions& opts) {
  const std::size_t n = c.size();
  st.value = overlap_of(c, st.x, st.y);
  for (st.sweeps = 0; st.sweeps < opts.max_sweeps;) {
    double last = st.value;
    for (std::size_t k = 0; k < n; ++k) {
      double prod = 1.0, sum = 0.0;
      for (std::size_t j = 0; j < n; ++j) {
        if (j == k) continue;
        sum = sum * st.x[j] + c[j] * st.y[j] * prod;
        prod *= st.x[j];
      }
      const double a = c[k] * prod;
      const double norm = std::hypot(a, sum);
      if (norm > 0.0) {
        st.x[k] = sum / norm;
        st.y[k] = a / norm;
        last = norm;
      }
    }
    ++st.sweeps;
    const double gain = last - st.value;
    st.value = std::max(st.value, last);
    if (gain < opts.tolerance) {
      st.converged = true;
      return;
    }
  }
}

}  // namespace

OracleResult maximize_overlap(const WState& state, const OracleOptions& opts) {
  if (opts.starts < 1) throw Error(Errc::InvalidConfig, "oracle needs at least one start");
  const auto c = state.coeffs();
  const std::size_t n = c.size();

  OracleResult res;
  res.starts_used = opts.starts;
  double best_conv = -INFINITY, worst_conv = INFINITY;
  bool have_best = false;
  for (int s = 0; s < opts.starts; ++s) {
    Ascent st;
    st.x.assign(n, 1.0);
    st.y.assign(n, 0.0);
    if (s == 0) {
      st.x[state.max_index()] = 0.0;
      st.y[state.max_index()] = 1.0;
    } else {
      Rng rng(mix_seed(opts.seed, static_cast<std::uint64_t>(s)));
      for (std::size_t j = 0; j < n; ++j) {
        const double t = rng.uniform(0.0, std::numbers::pi / 2);
        st.x[j] = std::sin(t);
        st.y[j] = std::cos(t);
      }
    }
    ascend(c, st, opts);
    if (st.converged) {
      ++res.converged_starts;
      best_conv = std::max(best_conv, st.value);
      worst_conv = std::min(worst_conv, st.value);
    }
    if (!have_best || st.value > res.g_best) {
      have_best = true;
      res.g_best = st.value;
      res.converged = st.converged;
      res.sweeps_best = st.sweeps;
      res.thetas_best.resize(n);
      for (std::size_t j = 0; j < n; ++j) res.thetas_best[j] = std::atan2(st.x[j], st.y[j]);
    }
  }
  if (res.converged_starts == 0) {
    throw Error(Errc::NoConvergedStart, "every oracle start hit the sweep cap");
  }
  res.spread = best_conv - worst_conv;
  return res;
}

OracleResult maximize_overlap(const WState& state, int n_starts, std::uint64_t seed) {
  OracleOptions opts;
  opts.starts = n_starts;
  opts.seed = seed;
  return maximize_overlap(state, opts);
}

double maximize_overlap_complex(const WState& state, const OracleOptions& opts) {
  using cplx = std::complex<double>;
  const auto c = state.coeffs();
  const std::size_t n = c.size();
  double best = 0.0;
  for (int s = 0; s < opts.starts; ++s) {
    Rng rng(mix_seed(opts.seed ^ 0x5bd1e995ULL, static_cast<std::uint64_t>(s)));
    std::vector<cplx> alpha(n), beta(n);
    for (std::size_t j = 0; j < n; ++j) {
      // uniform point on the unit sphere in C^2 via normalized Gaussians
      double g[4];
      for (double& v : g) {
        v = std::sqrt(-2.0 * std::log(rng.open_uniform())) * std::cos(2.0 * std::numbers::pi * rng.uniform());
      }
      const double norm = std::sqrt(g[0] * g[0] + g[1] * g[1] + g[2] * g[2] + g[3] * g[3]);
      alpha[j] = cplx(g[0], g[1]) / norm;
      beta[j] = cplx(g[2], g[3]) / norm;
    }
    double value = 0.0;
    for (int sweep = 0; sweep < opts.max_sweeps; ++sweep) {
      double last = value;
      for (std::size_t k = 0; k < n; ++k) {
        cplx prod = 1.0, sum = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
          if (j == k) continue;
          sum = sum * alpha[j] + c[j] * beta[j] * prod;
          prod *= alpha[j];
        }
        const cplx a = c[k] * prod;
        const double norm = std::sqrt(std::norm(a) + std::norm(sum));
        if (norm > 0.0) {
          alpha[k] = std::conj(sum) / norm;
          beta[k] = std::conj(a) / norm;
          last = norm;
        }
      }
      const double gain = last - value;
      value = std::max(value, last);
      if (sweep > 0 && gain < opts.tolerance) break;
    }
    best = std::max(best, value);
  }
  return best;
}

StationarityReport stationarity_check(const WState& state, const std::vector<double>& thetas) {
  if (thetas.size() != state.size()) throw Error(Errc::InconsistentInput, "angle vector length mismatch");
  double lo = INFINITY, hi = -INFINITY, sum = 0.0;
  std::size_t count = 0;
  for (std::size_t k = 0; k < state.size(); ++k) {
    const double ck = state.coeff(k);
    if (ck <= 1e-12) continue;
    const double s2 = std::sin(2.0 * thetas[k]);
    if (s2 < 1e-9) {
      throw Error(Errc::BoundaryOptimum, "optimum is a basis product state; stationarity relations do not apply");
    }
    const double ratio = s2 / ck;
    lo = std::min(lo, ratio);
    hi = std::max(hi, ratio);
    sum += ratio;
    ++count;
  }
  if (count == 0) throw Error(Errc::InconsistentInput, "no nonzero coefficients");
  const double mean = sum / static_cast<double>(count);
  return {(hi - lo) / mean, 1.0 / mean};
}

StationarityReport stationarity_check(const WState& state, const OracleResult& res) {
  return stationarity_check(state, res.thetas_best);
}

}  // namespace wdiam
