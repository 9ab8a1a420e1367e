#include "wdiam/state.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "wdiam/error.hpp"

namespace wdiam {

namespace {

// Below this the squared norm is treated as exactly one and left untouched,
// so already-normalized coefficients survive a print/parse cycle bit for bit.
constexpr double kExactNormSlack = 1e-15;

}  // namespace

WState WState::make(std::span<const double> raw, const StateOptions& opts) {
  if (raw.size() < 3) {
    throw Error(Errc::TooFewQubits,
                "a W state needs at least 3 qubits, got " + std::to_string(raw.size()));
  }
  WState s;
  s.coeffs_.reserve(raw.size());
  for (double v : raw) {
    if (!std::isfinite(v)) throw Error(Errc::NonFinite, "coefficient is not finite");
    if (v < 0.0) s.had_negative_ = true;
    s.coeffs_.push_back(std::abs(v));
  }

  double norm2 = 0.0;
  for (double v : s.coeffs_) norm2 += v * v;
  if (!(norm2 > 0.0)) throw Error(Errc::NotNormalizable, "all coefficients are zero");
  const double norm = std::sqrt(norm2);
  if (std::abs(norm2 - 1.0) > kExactNormSlack) {
    if (!opts.renormalize && std::abs(norm - 1.0) > opts.silent_tolerance) {
      throw Error(Errc::NotNormalizable,
                  "norm " + std::to_string(norm) + " is not 1 (pass renormalize to rescale)");
    }
    for (double& v : s.coeffs_) v /= norm;
    s.renormalized_ = true;
  }

  const std::size_t n = s.coeffs_.size();
  s.perm_.resize(n);
  std::iota(s.perm_.begin(), s.perm_.end(), std::size_t{0});
  // Ascending value; among equal values the lowest index goes last so that
  // max_index() picks it.
  std::sort(s.perm_.begin(), s.perm_.end(), [&](std::size_t a, std::size_t b) {
    if (s.coeffs_[a] != s.coeffs_[b]) return s.coeffs_[a] < s.coeffs_[b];
    return a > b;
  });
  s.sorted_.resize(n);
  for (std::size_t i = 0; i < n; ++i) s.sorted_[i] = s.coeffs_[s.perm_[i]];
  return s;
}

WState expand_partition(const PartitionSpec& spec, bool renormalize) {
  std::vector<double> coeffs;
  double norm2 = 0.0;
  for (const auto& b : spec.blocks) {
    if (b.mult == 0) throw Error(Errc::NormalizationViolated, "block multiplicity must be positive");
    if (!std::isfinite(b.amp) || b.amp < 0.0) {
      throw Error(Errc::NormalizationViolated, "block amplitude must be finite and nonnegative");
    }
    norm2 += static_cast<double>(b.mult) * b.amp * b.amp;
    coeffs.insert(coeffs.end(), b.mult, b.amp);
  }
  if (!renormalize && std::abs(norm2 - 1.0) > 1e-12) {
    throw Error(Errc::NormalizationViolated,
                "sum of mult * amp^2 is " + std::to_string(norm2) + ", expected 1");
  }
  StateOptions opts;
  opts.renormalize = renormalize;
  return WState::make(coeffs, opts);
}

PartitionSpec to_partition(const WState& state) {
  PartitionSpec spec;
  for (double v : state.sorted()) {
    if (!spec.blocks.empty() && spec.blocks.back().amp == v) {
      ++spec.blocks.back().mult;
    } else {
      spec.blocks.push_back({1, v});
    }
  }
  return spec;
}

double bloch_z(double c) noexcept { return 1.0 - 2.0 * c * c; }

BlochReport bloch_report(const WState& state) {
  BlochReport rep;
  rep.bz.reserve(state.size());
  for (double c : state.coeffs()) rep.bz.push_back(bloch_z(c));
  rep.min_bz_index = state.max_index();
  return rep;
}

}  // namespace wdiam
