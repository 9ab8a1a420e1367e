#include "wdiam/campaign.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "wdiam/analysis.hpp"
#include "wdiam/error.hpp"
#include "wdiam/families.hpp"
#include "wdiam/oracle.hpp"
#include "wdiam/parallel.hpp"

namespace wdiam {

WState sample_state(std::size_t n, Rng& rng) {
  StateOptions opts;
  opts.renormalize = true;
  return WState::make(sample_flat_dirichlet_amplitudes(n, rng), opts);
}

namespace {

constexpr int kMaxRejections = 100000;

// Companions drawn from flat Dirichlet on n-1 coordinates, largest squared
// coefficient uniform on (lo2, hi2) where lo2 may depend on the companions.
WState with_largest(const std::vector<double>& unit_others, double c2) {
  std::vector<double> coeffs;
  coeffs.reserve(unit_others.size() + 1);
  const double scale = std::sqrt(1.0 - c2);
  for (double v : unit_others) coeffs.push_back(scale * v);
  coeffs.push_back(std::sqrt(c2));
  StateOptions opts;
  opts.renormalize = true;
  return WState::make(coeffs, opts);
}

}  // namespace

WState sample_state_in_region(std::size_t n, Region region, Rng& rng) {
  if (n < 3) throw Error(Errc::TooFewQubits, "need at least 3 qubits");
  for (int attempt = 0; attempt < kMaxRejections; ++attempt) {
    if (region == Region::Symmetric) {
      auto s = sample_state(n, rng);
      if (classify(s).region == Region::Symmetric) return s;
      continue;
    }
    const auto others = sample_flat_dirichlet_amplitudes(n - 1, rng);
    double lo2 = 0.5, hi2 = 1.0;
    if (region == Region::Asymmetric) {
      // r1 is homogeneous of degree one, so c >= sqrt(1 - c^2) rho is
      // c^2 >= rho^2/(1 + rho^2); c < r2 is c^2 < 1/2.
      const double rho = first_critical_of(others);
      lo2 = rho * rho / (1.0 + rho * rho);
      hi2 = 0.5;
    }
    const double c2 = lo2 + (hi2 - lo2) * rng.open_uniform();
    auto s = with_largest(others, c2);
    const auto rep = classify(s);
    if (rep.region == region && (region != Region::Asymmetric || rep.r2 - rep.largest > 1e-12)) return s;
  }
  throw Error(Errc::ConvergenceFailure, "region sampler exhausted its rejection budget");
}

WState sample_critical_state(std::size_t n, Rng& rng) {
  if (n < 3) throw Error(Errc::TooFewQubits, "need at least 3 qubits");
  for (int attempt = 0; attempt < kMaxRejections; ++attempt) {
    std::vector<double> w(n - 1);
    double total = 0.0;
    for (auto& v : w) total += (v = rng.open_uniform());
    double wmax = 0.0;
    for (auto& v : w) {
      v = std::sqrt(v / total);
      wmax = std::max(wmax, v);
    }
    const double rho = first_critical_of(w);
    const double c2 = rho * rho / (1.0 + rho * rho);
    if ((1.0 - c2) * wmax * wmax > 2.0 / static_cast<double>(n)) continue;
    return with_largest(w, c2);
  }
  throw Error(Errc::ConvergenceFailure, "critical-state sampler exhausted its rejection budget");
}

std::uint64_t sample_seed(std::uint64_t campaign_seed, std::size_t index) {
  return mix_seed(campaign_seed, static_cast<std::uint64_t>(index));
}

void validate(const CampaignConfig& cfg) {
  if (cfg.n_samples < 1) throw Error(Errc::InvalidConfig, "n_samples must be at least 1");
  if (cfg.n_min < 3 || cfg.n_min > cfg.n_max) throw Error(Errc::InvalidConfig, "need 3 <= n_min <= n_max");
  if (cfg.oracle_starts < 1) throw Error(Errc::InvalidConfig, "oracle_starts must be at least 1");
}

WState regenerate_sample(const CampaignConfig& cfg, std::size_t index) {
  Rng rng(sample_seed(cfg.seed, index));
  const auto n = static_cast<std::size_t>(
      rng.uniform_int(static_cast<std::int64_t>(cfg.n_min), static_cast<std::int64_t>(cfg.n_max)));
  if (cfg.region_filter) return sample_state_in_region(n, *cfg.region_filter, rng);
  return sample_state(n, rng);
}

bool CampaignReport::passed() const {
  return std::all_of(properties.begin(), properties.end(), [](const auto& p) { return p.passed; });
}

const PropertyResult* CampaignReport::find(const std::string& name) const {
  for (const auto& p : properties) {
    if (p.name == name) return &p;
  }
  return nullptr;
}

namespace {

struct Outcome {
  std::vector<double> coeffs;
  std::size_t n = 0;
  Region region = Region::Symmetric;
  double r1 = 0, r2 = 0, cn2 = 0;
  double diam2 = std::numeric_limits<double>::quiet_NaN();
  double residual = 0, residual_original = 0;
  double g = 0, g2 = 0;
  double cosine_gap = 0, reconstruction_gap = 0;
  bool oracle_checked = false;
  double oracle_gap = 0;
  std::string error;
};

Outcome evaluate(const CampaignConfig& cfg, std::size_t index) {
  Outcome out;
  try {
    const auto state = regenerate_sample(cfg, index);
    out.coeffs.assign(state.coeffs().begin(), state.coeffs().end());
    out.n = state.size();
    const auto a = analyze(state);
    out.region = a.regions.region;
    out.r1 = a.regions.r1;
    out.r2 = a.regions.r2;
    out.cn2 = state.largest() * state.largest();
    out.g = a.overlap.g;
    out.g2 = a.overlap.g_squared;
    if (a.diameter.branch != Branch::NoDiameter) {
      out.diam2 = a.diameter.r * a.diameter.r;
      out.residual = a.diameter.residual;
      out.residual_original = a.diameter.branch == Branch::SymmetricEq
                                  ? symmetric_equation_residual(state, a.diameter.r)
                                  : 0.0;
      out.cosine_gap = std::abs(direction_cosine_sum(a.product) - 1.0);
    }
    out.reconstruction_gap = std::abs(product_overlap_value(state, a.product) - a.overlap.g);
    if (index < cfg.oracle_samples && out.n <= cfg.oracle_max_n) {
      OracleOptions opts;
      opts.starts = cfg.oracle_starts;
      opts.seed = sample_seed(cfg.seed, index);
      const auto res = maximize_overlap(state, opts);
      out.oracle_checked = true;
      out.oracle_gap = std::abs(res.g_best - a.overlap.g);
    }
  } catch (const std::exception& e) {
    out.error = e.what();
  }
  return out;
}

// Tracks the worst sample for one property.
struct Tracker {
  PropertyResult result;
  double worst = -INFINITY;
  bool larger_is_worse = true;

  Tracker(std::string name, double bound, bool larger_worse = true) : larger_is_worse(larger_worse) {
    result.name = std::move(name);
    result.bound = bound;
    worst = larger_worse ? -INFINITY : INFINITY;
  }

  void add(double value, bool ok, const CampaignConfig& cfg, std::size_t index, const Outcome& o) {
    ++result.checked;
    if (!ok) result.passed = false;
    const bool worse = larger_is_worse ? value > worst : value < worst;
    if (worse) {
      worst = value;
      result.measured = value;
      result.witness = Witness{o.coeffs, sample_seed(cfg.seed, index), index};
    }
  }
};

}  // namespace

CampaignReport run_campaign(const CampaignConfig& cfg) {
  validate(cfg);
  std::vector<Outcome> outcomes(cfg.n_samples);
  parallel_for(cfg.n_samples, [&](std::size_t i) { outcomes[i] = evaluate(cfg, i); });

  const auto& tol = cfg.tol;
  Tracker errors("no_solver_errors", 0.0);
  Tracker order("r1_below_r2", 0.0);
  Tracker sym_lo("symmetric_r2_lower", 0.25 - tol.bound_slack, false);
  Tracker sym_hi("symmetric_r2_upper", 0.5 + tol.bound_slack);
  Tracker asym_lo("asymmetric_r2_lower", 1.0 / 3.0 - tol.bound_slack, false);
  Tracker residual("residual", tol.residual_per_qubit);
  Tracker residual_orig("residual_original_form", tol.residual_per_qubit);
  Tracker bounds_lo("overlap_above_cn2", -tol.overlap_bound, false);
  Tracker bounds_hi("overlap_below_half", 0.5 + tol.overlap_bound);
  Tracker slight("slight_overlap_equals_cn2", 0.0);
  Tracker cosines("direction_cosines", tol.cosine_sum);
  Tracker recon("reconstruction", tol.reconstruction);
  Tracker oracle("oracle_agreement", tol.oracle_agreement);

  CampaignReport rep;
  auto& ex = rep.extremes;
  ex.min_r2_sym = ex.min_r2_asym = INFINITY;
  ex.max_r2_sym = -INFINITY;
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    const auto& o = outcomes[i];
    if (!o.error.empty()) {
      errors.add(1.0, false, cfg, i, o);
      errors.result.detail = o.error;
      continue;
    }
    errors.add(0.0, true, cfg, i, o);
    order.add(o.r1 - o.r2, o.r1 < o.r2, cfg, i, o);
    recon.add(o.reconstruction_gap, o.reconstruction_gap <= tol.reconstruction, cfg, i, o);
    if (o.oracle_checked) {
      oracle.add(o.oracle_gap, o.oracle_gap <= tol.oracle_agreement, cfg, i, o);
      ex.max_oracle_gap = std::max(ex.max_oracle_gap, o.oracle_gap);
    }
    const auto nd = static_cast<double>(o.n);
    switch (o.region) {
      case Region::Symmetric:
        ++ex.n_symmetric;
        sym_lo.add(o.diam2, o.diam2 >= 0.25 - tol.bound_slack, cfg, i, o);
        sym_hi.add(o.diam2, o.diam2 <= 0.5 + tol.bound_slack, cfg, i, o);
        ex.min_r2_sym = std::min(ex.min_r2_sym, o.diam2);
        ex.max_r2_sym = std::max(ex.max_r2_sym, o.diam2);
        residual_orig.add(std::abs(o.residual_original) / nd,
                          std::abs(o.residual_original) <= tol.residual_per_qubit * nd, cfg, i, o);
        break;
      case Region::Asymmetric:
        ++ex.n_asymmetric;
        if (!std::isnan(o.diam2)) {
          asym_lo.add(o.diam2, o.diam2 >= 1.0 / 3.0 - tol.bound_slack, cfg, i, o);
          ex.min_r2_asym = std::min(ex.min_r2_asym, o.diam2);
        }
        break;
      case Region::Slight:
        ++ex.n_slight;
        slight.add(std::abs(o.g2 - o.cn2), o.g2 == o.cn2, cfg, i, o);
        break;
    }
    if (o.region != Region::Slight && !std::isnan(o.diam2)) {
      residual.add(std::abs(o.residual), std::abs(o.residual) <= tol.residual_per_qubit, cfg, i, o);
      bounds_lo.add(o.g2 - o.cn2, o.g2 - o.cn2 > -tol.overlap_bound, cfg, i, o);
      bounds_hi.add(o.g2, o.g2 < 0.5 + tol.overlap_bound, cfg, i, o);
      cosines.add(o.cosine_gap, o.cosine_gap <= tol.cosine_sum, cfg, i, o);
    }
  }

  for (Tracker* t : {&errors, &order, &sym_lo, &sym_hi, &asym_lo, &residual, &residual_orig, &bounds_lo,
                     &bounds_hi, &slight, &cosines, &recon, &oracle}) {
    if (t->result.checked > 0) rep.properties.push_back(t->result);
  }
  if (cfg.require_witness && ex.n_symmetric > 0) {
    PropertyResult w = sym_lo.result;
    w.name = "symmetric_tightness";
    w.bound = tol.sym_witness;
    w.passed = ex.min_r2_sym < tol.sym_witness;
    w.detail = "needs a symmetric sample with r^2 below the bound";
    rep.properties.push_back(w);
  }
  if (cfg.require_witness && ex.n_asymmetric > 0) {
    PropertyResult w = asym_lo.result;
    w.name = "asymmetric_tightness";
    w.bound = tol.asym_witness;
    w.passed = ex.min_r2_asym < tol.asym_witness;
    w.detail = "needs an asymmetric sample with r^2 below the bound";
    rep.properties.push_back(w);
  }
  return rep;
}

ScalingReport run_r1_scaling(const ScalingConfig& cfg) {
  if (cfg.sizes.size() < 2 || cfg.samples_per_size < 1) {
    throw Error(Errc::InvalidConfig, "scaling fit needs at least two sizes and one sample each");
  }
  ScalingReport rep;
  for (std::size_t si = 0; si < cfg.sizes.size(); ++si) {
    const std::size_t n = cfg.sizes[si];
    std::vector<double> dev(cfg.samples_per_size);
    parallel_for(dev.size(), [&](std::size_t i) {
      Rng rng(mix_seed(cfg.seed, (static_cast<std::uint64_t>(n) << 32) + i));
      const auto state = sample_critical_state(n, rng);
      const double r1 = first_critical(state);
      dev[i] = r1 * r1 - 1.0 / 3.0;
    });
    ScalingRow row;
    row.n = n;
    row.min_r1_squared = INFINITY;
    for (double d : dev) {
      row.mean_deviation += std::abs(d);
      row.max_deviation = std::max(row.max_deviation, std::abs(d));
      row.min_r1_squared = std::min(row.min_r1_squared, d + 1.0 / 3.0);
      if (d < -1e-12) rep.all_above_third = false;
      rep.fitted_c = std::max(rep.fitted_c, static_cast<double>(n) * std::abs(d));
    }
    row.mean_deviation /= static_cast<double>(dev.size());
    rep.rows.push_back(row);
  }
  // least squares of log(mean deviation) on log N
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double k = static_cast<double>(rep.rows.size());
  for (const auto& row : rep.rows) {
    const double x = std::log(static_cast<double>(row.n)), y = std::log(row.mean_deviation);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  rep.slope = (k * sxy - sx * sy) / (k * sxx - sx * sx);
  rep.passed = rep.all_above_third && rep.slope >= cfg.slope_min && rep.slope <= cfg.slope_max;
  return rep;
}

ContinuityReport run_continuity_scan(std::size_t points, double offset, double jump_bound) {
  const families::BlocksPlusOne fam;
  ContinuityReport rep;
  rep.r1_crossing = fam.r1_crossing();
  rep.r2_crossing = std::sqrt(0.5);  // r2 = sqrt(1 - c^2) for this family

  auto g_at = [&](double c) { return std::sqrt(exact_g_squared(fam.state(c))); };
  auto r_at = [&](double c) { return solve(fam.state(c)).r; };
  rep.g_jump_r1 = std::abs(g_at(rep.r1_crossing + offset) - g_at(rep.r1_crossing - offset));
  rep.r_jump_r1 = std::abs(r_at(rep.r1_crossing + offset) - r_at(rep.r1_crossing - offset));
  rep.g_jump_r2 = std::abs(g_at(rep.r2_crossing + offset) - g_at(rep.r2_crossing - offset));

  const auto grid = [&] {
    std::vector<double> v(points);
    for (std::size_t i = 0; i < points; ++i) v[i] = 0.01 + 0.98 * static_cast<double>(i) / (points - 1);
    return v;
  }();
  std::vector<double> g(points);
  parallel_for(points, [&](std::size_t i) { g[i] = g_at(grid[i]); });
  for (std::size_t i = 1; i < points; ++i) rep.max_grid_jump = std::max(rep.max_grid_jump, std::abs(g[i] - g[i - 1]));

  rep.passed = rep.g_jump_r1 <= jump_bound && rep.g_jump_r2 <= jump_bound && rep.r_jump_r1 <= 1e-8;
  return rep;
}

bool VerifyReport::passed() const {
  return symmetric.passed() && asymmetric.passed() && mixed.passed() &&
         (!scaling || scaling->passed) && continuity.passed;
}

VerifyReport run_verify(const VerifyConfig& cfg) {
  VerifyReport rep;
  CampaignConfig base;
  base.n_samples = cfg.samples;
  base.n_min = cfg.n_min;
  base.n_max = cfg.n_max;
  base.seed = cfg.seed;
  base.tol = cfg.tol;

  auto sym = base;
  sym.region_filter = Region::Symmetric;
  rep.symmetric = run_campaign(sym);

  auto asym = base;
  asym.region_filter = Region::Asymmetric;
  asym.seed = mix_seed(cfg.seed, 1);
  rep.asymmetric = run_campaign(asym);

  auto mixed = base;
  mixed.n_samples = std::max<std::size_t>(1, std::max(cfg.samples / 10, cfg.oracle_samples));
  mixed.n_max = std::min<std::size_t>(cfg.n_max, 12);
  mixed.n_min = std::min(cfg.n_min, mixed.n_max);
  mixed.seed = mix_seed(cfg.seed, 2);
  mixed.oracle_samples = cfg.oracle_samples;
  mixed.require_witness = false;
  rep.mixed = run_campaign(mixed);

  if (cfg.scaling) {
    ScalingConfig t3;
    t3.seed = mix_seed(cfg.seed, 3);
    rep.scaling = run_r1_scaling(t3);
  }
  rep.continuity = run_continuity_scan();
  return rep;
}

}  // namespace wdiam
