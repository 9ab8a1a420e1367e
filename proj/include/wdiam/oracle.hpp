#pragma once

#include <cstdint>
#include <vector>

#include "wdiam/state.hpp"

namespace wdiam {

struct OracleOptions {
  int starts = 32;
  std::uint64_t seed = 7;
  double tolerance = 1e-14;  // per-sweep improvement
  int max_sweeps = 10000;
};

struct OracleResult {
  double g_best = 0.0;
  std::vector<double> thetas_best;  // input qubit order
  int starts_used = 0;
  int converged_starts = 0;
  bool converged = false;  // the best start met the tolerance
  double spread = 0.0;     // max - min of g across converged starts
  int sweeps_best = 0;

  bool suspect_local_maxima() const noexcept { return spread > 1e-6; }
};

/// Multi-start coordinate ascent over real product states. Start 0 is the
/// basis state with the excitation on the largest coefficient; the rest are
/// uniform in [0, pi/2]^N from seeds derived from (seed, start).
OracleResult maximize_overlap(const WState& state, const OracleOptions& opts = {});
OracleResult maximize_overlap(const WState& state, int n_starts, std::uint64_t seed);

/// Same ascent over complex single-qubit states (phases included); returns
/// the best |<W|u>|. Used only to confirm the real restriction loses nothing.
double maximize_overlap_complex(const WState& state, const OracleOptions& opts = {});

struct StationarityReport {
  double max_deviation = 0.0;  // (max - min)/mean of sin(2 theta_k)/c_k
  double implied_r = 0.0;      // 1 / mean ratio
};

/// Checks sin(2 theta_k)/c_k is constant over k with c_k > 1e-12. Throws
/// BoundaryOptimum if the optimum sits on a basis product state.
StationarityReport stationarity_check(const WState& state, const OracleResult& res);
StationarityReport stationarity_check(const WState& state, const std::vector<double>& thetas);

}  // namespace wdiam
