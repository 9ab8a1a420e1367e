#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wdiam/random.hpp"
#include "wdiam/regions.hpp"
#include "wdiam/state.hpp"

namespace wdiam {

/// Flat-Dirichlet state on n qubits.
WState sample_state(std::size_t n, Rng& rng);

/// State guaranteed to classify into `region`. Symmetric states come from
/// flat Dirichlet by rejection; asymmetric and slight states draw the other
/// n-1 coefficients from flat Dirichlet and the largest squared coefficient
/// uniformly over the region's interval.
WState sample_state_in_region(std::size_t n, Region region, Rng& rng);

/// State with c_N = r1 whose other squared coefficients are uniform weights,
/// rejected until every other c_i^2 <= 2/n.
WState sample_critical_state(std::size_t n, Rng& rng);

struct Tolerances {
  double bound_slack = 1e-12;
  double residual_per_qubit = 1e-12;
  double overlap_bound = 1e-12;
  double cosine_sum = 1e-12;
  double reconstruction = 1e-10;
  double oracle_agreement = 1e-7;
  double sym_witness = 0.26;   // some symmetric sample must have r^2 below this
  double asym_witness = 0.34;  // likewise for asymmetric samples
};

struct CampaignConfig {
  std::size_t n_samples = 10000;
  std::size_t n_min = 3;
  std::size_t n_max = 64;
  std::uint64_t seed = 1;
  std::optional<Region> region_filter;
  // Oracle cross-check on the first samples with N <= oracle_max_n.
  std::size_t oracle_samples = 0;
  std::size_t oracle_max_n = 12;
  int oracle_starts = 32;
  bool require_witness = true;
  Tolerances tol;
};

struct Witness {
  std::vector<double> coeffs;
  std::uint64_t seed = 0;  // per-sample seed; regenerates the state
  std::size_t sample_index = 0;
};

struct PropertyResult {
  std::string name;
  bool passed = true;
  std::size_t checked = 0;
  double measured = 0.0;  // worst value seen
  double bound = 0.0;
  std::string detail;
  std::optional<Witness> witness;  // worst case (always set when checked > 0)
};

struct CampaignExtremes {
  double min_r2_sym = 0.0, max_r2_sym = 0.0;
  double min_r2_asym = 0.0;
  double max_oracle_gap = 0.0;
  std::size_t n_symmetric = 0, n_asymmetric = 0, n_slight = 0;
};

struct CampaignReport {
  std::vector<PropertyResult> properties;
  CampaignExtremes extremes;

  bool passed() const;
  const PropertyResult* find(const std::string& name) const;
};

void validate(const CampaignConfig& cfg);

CampaignReport run_campaign(const CampaignConfig& cfg);

/// Per-sample seed used by run_campaign.
std::uint64_t sample_seed(std::uint64_t campaign_seed, std::size_t index);

/// Regenerates sample `index` of a campaign.
WState regenerate_sample(const CampaignConfig& cfg, std::size_t index);

struct ScalingConfig {
  std::vector<std::size_t> sizes{50, 100, 200, 400};
  std::size_t samples_per_size = 1000;
  std::uint64_t seed = 3;
  double slope_min = -1.3;
  double slope_max = -0.7;
};

struct ScalingRow {
  std::size_t n = 0;
  double mean_deviation = 0.0;  // mean |r1^2 - 1/3|
  double max_deviation = 0.0;
  double min_r1_squared = 0.0;
};

struct ScalingReport {
  std::vector<ScalingRow> rows;
  double fitted_c = 0.0;  // max over samples of N |r1^2 - 1/3|
  double slope = 0.0;     // log-log fit of mean deviation against N
  bool all_above_third = true;
  bool passed = false;
};

ScalingReport run_r1_scaling(const ScalingConfig& cfg);

/// Continuity of g (and r) across r1 and r2 along the m=8, k=10, a/b=0.8
/// family: jump across each crossing at +/- offset.
struct ContinuityReport {
  double r1_crossing = 0.0;
  double r2_crossing = 0.0;
  double g_jump_r1 = 0.0;
  double r_jump_r1 = 0.0;
  double g_jump_r2 = 0.0;
  double max_grid_jump = 0.0;  // largest |g(c_{i+1}) - g(c_i)| on the grid
  bool passed = false;
};

ContinuityReport run_continuity_scan(std::size_t points = 4000, double offset = 1e-9,
                                     double jump_bound = 1e-6);

/// Everything `wdiam verify` runs.
struct VerifyConfig {
  std::size_t samples = 10000;
  std::size_t n_min = 3;
  std::size_t n_max = 64;
  std::uint64_t seed = 1;
  std::size_t oracle_samples = 200;
  bool scaling = true;
  Tolerances tol;
};

struct VerifyReport {
  CampaignReport symmetric;
  CampaignReport asymmetric;
  CampaignReport mixed;
  std::optional<ScalingReport> scaling;
  ContinuityReport continuity;

  bool passed() const;
};

VerifyReport run_verify(const VerifyConfig& cfg);

}  // namespace wdiam
