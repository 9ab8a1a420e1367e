#include "wdiam/overlap.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "overlap_impl.hpp"
#include "wdiam/error.hpp"

namespace wdiam {

namespace {

double one_minus_root(double x) { return x / (1.0 + std::sqrt(std::max(0.0, 1.0 - x))); }

void check_branch(const DiameterSolution& sol, const RegionReport& rep) {
  bool ok = false;
  switch (rep.region) {
    case Region::Symmetric: ok = sol.branch == Branch::SymmetricEq; break;
    // solve() hands back NoDiameter when c_N sits on r2 within 1e-12.
    case Region::Asymmetric:
      ok = sol.branch == Branch::AsymmetricEq ||
           (sol.branch == Branch::NoDiameter && rep.r2 - rep.largest <= 1e-12);
      break;
    case Region::Slight: ok = sol.branch == Branch::NoDiameter; break;
  }
  if (!ok) {
    throw Error(Errc::InconsistentInput, std::string("diameter branch '") +
                                             std::string(to_string(sol.branch)) +
                                             "' does not match the " +
                                             std::string(to_string(rep.region)) + " region");
  }
  if (sol.branch != Branch::NoDiameter && !(std::isfinite(sol.r) && sol.r > 0.0)) {
    throw Error(Errc::InconsistentInput, "diameter must be finite and positive");
  }
}

double top_root(const DiameterSolution& sol, double cn) {
  if (std::isfinite(sol.s_top)) return sol.s_top;
  return std::sqrt(std::max(0.0, (sol.r - cn) * (sol.r + cn))) / sol.r;
}

}  // namespace

double OverlapReport::e_g_bits() const noexcept { return e_g / std::numbers::ln2; }

namespace detail {

OverlapReport overlap_with_report(const WState& state, const DiameterSolution& sol,
                                  const RegionReport& rep) {
  check_branch(sol, rep);
  const double cn = state.largest();
  OverlapReport out;
  if (sol.branch == Branch::NoDiameter) {
    out.g = cn;
    out.g_squared = cn * cn;
    out.e_g = -2.0 * std::log(cn);
    return out;
  }
  double log_g2 = 0.0;
  {
    const auto c = state.sorted();
    const double inv2 = 1.0 / (sol.r * sol.r);
    const std::size_t last = c.size() - 1;
    // sum of log((1 + s_i)/2) over the + radicals, in log space for large N
    for (std::size_t i = 0; i < last; ++i) {
      log_g2 += std::log1p(-0.5 * one_minus_root(c[i] * c[i] * inv2));
    }
    const double sn = top_root(sol, cn);
    if (sol.branch == Branch::SymmetricEq) {
      log_g2 += std::log(4.0 * sol.r * sol.r) + std::log(0.5 * (1.0 + sn));
    } else {
      // 4 r^2 (1 - s_N)/2 = 2 c_N^2/(1 + s_N), finite as r -> infinity
      log_g2 += std::log(2.0 * cn * cn / (1.0 + sn));
    }
  }
  out.g_squared = std::exp(log_g2);
  out.g = std::exp(0.5 * log_g2);
  out.e_g = -log_g2;
  return out;
}

ProductState product_with_report(const WState& state, const DiameterSolution& sol,
                                 const RegionReport& rep) {
  check_branch(sol, rep);
  const std::size_t n = state.size();
  const std::size_t top = state.max_index();
  ProductState out;
  out.thetas.assign(n, std::numbers::pi / 2);
  if (sol.branch == Branch::NoDiameter) {
    out.thetas[top] = 0.0;
    return out;
  }
  const double cn = state.largest();
  const double sn = top_root(sol, cn);
  for (std::size_t k = 0; k < n; ++k) {
    const double q = state.coeff(k) / sol.r;
    const double x = q * q;
    // ties with c_N share its well-conditioned root
    const double s = state.coeff(k) == cn ? sn : std::sqrt(std::max(0.0, 1.0 - x));
    double sin2 = 0.5 * (1.0 + s);
    double cos2 = state.coeff(k) == cn ? 0.5 * (1.0 - sn) : 0.5 * one_minus_root(x);
    if (k == top && sol.branch == Branch::AsymmetricEq) std::swap(sin2, cos2);
    out.thetas[k] = std::atan2(std::sqrt(sin2), std::sqrt(cos2));
  }
  return out;
}

}  // namespace detail

OverlapReport overlap_from_diameter(const WState& state, const DiameterSolution& sol) {
  return detail::overlap_with_report(state, sol, classify(state));
}

double geometric_measure(double g) {
  if (!(g > 0.0 && g <= 1.0 + 1e-15)) throw Error(Errc::OutOfDomain, "g must lie in (0, 1]");
  return -2.0 * std::log(std::min(g, 1.0));
}

double geometric_measure(const OverlapReport& report) { return geometric_measure(report.g); }

ProductState nearest_product(const WState& state, const DiameterSolution& sol) {
  return detail::product_with_report(state, sol, classify(state));
}

double product_overlap_value(const WState& state, const ProductState& prod) {
  const std::size_t n = state.size();
  if (prod.thetas.size() != n) {
    throw Error(Errc::InconsistentInput, "angle vector length does not match qubit count");
  }
  std::vector<double> suffix(n + 1, 1.0);
  for (std::size_t j = n; j-- > 0;) suffix[j] = suffix[j + 1] * std::sin(prod.thetas[j]);
  double prefix = 1.0;
  double acc = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    acc += state.coeff(k) * std::cos(prod.thetas[k]) * prefix * suffix[k + 1];
    prefix *= std::sin(prod.thetas[k]);
  }
  return acc;
}

double direction_cosine_sum(const ProductState& prod) {
  double acc = 0.0;
  for (double t : prod.thetas) acc += std::cos(t) * std::cos(t);
  return acc;
}

}  // namespace wdiam
