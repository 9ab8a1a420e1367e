#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace wdiam {

struct StateOptions {
  // Rescale any nonzero finite input to unit norm.
  bool renormalize = false;
  // Inputs with |norm - 1| at or below this are rescaled silently.
  double silent_tolerance = 1e-8;
};

/// An N-qubit W state c_1|10..0> + ... + c_N|0..01> with nonnegative real
/// amplitudes. Immutable once built.
class WState {
 public:
  static WState make(std::span<const double> raw, const StateOptions& opts = {});

  std::size_t size() const noexcept { return coeffs_.size(); }

  /// Coefficients in input order.
  std::span<const double> coeffs() const noexcept { return coeffs_; }
  double coeff(std::size_t i) const { return coeffs_.at(i); }

  /// Coefficients in ascending order; the largest is last. Among ties the
  /// lowest input index sorts last.
  std::span<const double> sorted() const noexcept { return sorted_; }

  /// sorted()[i] == coeffs()[sort_perm()[i]].
  std::span<const std::size_t> sort_perm() const noexcept { return perm_; }

  std::size_t max_index() const noexcept { return perm_.back(); }
  double largest() const noexcept { return sorted_.back(); }

  bool renormalized() const noexcept { return renormalized_; }
  bool had_negative() const noexcept { return had_negative_; }

 private:
  WState() = default;

  std::vector<double> coeffs_;
  std::vector<double> sorted_;
  std::vector<std::size_t> perm_;
  bool renormalized_ = false;
  bool had_negative_ = false;
};

struct Block {
  std::size_t mult = 0;
  double amp = 0.0;

  bool operator==(const Block&) const = default;
};

/// Block-constant coefficient layout: mult_j qubits each carrying amp_j.
struct PartitionSpec {
  std::vector<Block> blocks;
};

WState expand_partition(const PartitionSpec& spec, bool renormalize = false);

/// Groups equal coefficients of `state` into blocks, ascending by amplitude.
PartitionSpec to_partition(const WState& state);

struct BlochReport {
  std::vector<double> bz;  // input order
  std::size_t min_bz_index = 0;
};

/// z component of each qubit's Bloch vector, b_z = 1 - 2 c^2.
BlochReport bloch_report(const WState& state);

double bloch_z(double c) noexcept;

}  // namespace wdiam
