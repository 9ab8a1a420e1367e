#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace wdiam {

/// splitmix64 finalizer; used to derive independent per-task seeds.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) noexcept;

/// Seeded stream with platform-independent uniform draws.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform on [0, 1).
  double uniform();
  /// Uniform on (0, 1).
  double open_uniform();
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  /// Uniform integer on [lo, hi].
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi);
  double exponential();

  std::mt19937_64& engine() noexcept { return engine_; }

 private:
  std::mt19937_64 engine_;
};

/// Point on the positive orthant of the unit sphere whose squared entries are
/// flat-Dirichlet distributed.
std::vector<double> sample_flat_dirichlet_amplitudes(std::size_t n, Rng& rng);

}  // namespace wdiam
