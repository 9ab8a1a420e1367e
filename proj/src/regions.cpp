#include "wdiam/regions.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "root_find.hpp"
#include "wdiam/error.hpp"

namespace wdiam {

std::string_view to_string(Region region) noexcept {
  switch (region) {
    case Region::Symmetric: return "symmetric";
    case Region::Asymmetric: return "asymmetric";
    case Region::Slight: return "slight";
  }
  return "unknown";
}

namespace {

// sum_i sqrt(1 - o_i^2/r^2) - (n - 1), written as 1 - sum_i x_i/(1 + s_i) so
// nothing cancels; increasing in r.
double critical_function(std::span<const double> others, double r) {
  double acc = 0.0;
  for (double o : others) {
    const double q = o / r;
    const double x = q * q;
    acc += x / (1.0 + std::sqrt(std::max(0.0, 1.0 - x)));
  }
  return 1.0 - acc;
}

double critical_derivative(std::span<const double> others, double r) {
  double acc = 0.0;
  for (double o : others) {
    const double x = o * o / (r * r);
    const double s = std::sqrt(std::max(0.0, 1.0 - x));
    if (s == 0.0) return INFINITY;
    acc += x / (r * s);
  }
  return acc;
}

std::vector<double> all_but(const WState& state, std::size_t index) {
  if (index >= state.size()) throw Error(Errc::OutOfDomain, "qubit index out of range");
  std::vector<double> out;
  out.reserve(state.size() - 1);
  for (std::size_t i = 0; i < state.size(); ++i) {
    if (i != index) out.push_back(state.coeff(i));
  }
  return out;
}

}  // namespace

double first_critical_of(std::span<const double> others) {
  if (others.size() < 2) throw Error(Errc::TooFewQubits, "need at least two companion coefficients");
  const double lo = *std::max_element(others.begin(), others.end());
  if (lo == 0.0) return 0.0;
  auto f = [&](double r) { return critical_function(others, r); };
  auto df = [&](double r) { return critical_derivative(others, r); };

  const double flo = f(lo);
  if (flo >= 0.0) return lo;  // a single nonzero companion: root at the bracket edge
  double hi = 1.0;
  double fhi = f(hi);
  if (!(fhi >= 0.0)) {
    hi = 2.0;
    fhi = f(hi);
  }
  if (!(fhi >= 0.0)) {
    throw Error(Errc::ConvergenceFailure, "first critical value is not bracketed in [max c_i, 2]");
  }
  return detail::bracketed_root(f, df, lo, hi, flo, fhi).x;
}

double first_critical(const WState& state) {
  const auto sorted = state.sorted();
  return first_critical_of(sorted.first(sorted.size() - 1));
}

double first_critical(const WState& state, std::size_t index) {
  const auto others = all_but(state, index);
  return first_critical_of(others);
}

double second_critical(const WState& state) {
  const auto sorted = state.sorted();
  double acc = 0.0;
  for (std::size_t i = 0; i + 1 < sorted.size(); ++i) acc += sorted[i] * sorted[i];
  return std::sqrt(acc);
}

double second_critical(const WState& state, std::size_t index) {
  double acc = 0.0;
  for (double o : all_but(state, index)) acc += o * o;
  return std::sqrt(acc);
}

double first_critical_residual(std::span<const double> others, double r) {
  double acc = 0.0;
  for (double o : others) acc += std::sqrt(std::max(0.0, r * r - o * o));
  return acc - static_cast<double>(others.size() - 1) * r;
}

RegionReport classify(const WState& state) {
  RegionReport rep;
  rep.r1 = first_critical(state);
  rep.r2 = second_critical(state);
  rep.largest = state.largest();
  rep.bz = bloch_z(rep.largest);
  rep.on_r1 = std::abs(rep.largest - rep.r1) <= kBoundaryTolerance;
  rep.on_r2 = std::abs(rep.largest - rep.r2) <= kBoundaryTolerance;
  if (rep.largest >= rep.r2) {
    rep.region = Region::Slight;
  } else if (rep.largest <= rep.r1) {
    rep.region = Region::Symmetric;
  } else {
    rep.region = Region::Asymmetric;
  }
  return rep;
}

}  // namespace wdiam
