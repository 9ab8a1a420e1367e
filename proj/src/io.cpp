#include "wdiam/io.hpp"

#include <cmath>

#include "wdiam/error.hpp"

namespace wdiam::io {

namespace {

double number_field(const json& j, const char* what) {
  if (!j.is_number()) throw Error(Errc::InvalidConfig, std::string(what) + " must be a number");
  return j.get<double>();
}

}  // namespace

WState parse_state(const json& doc) {
  if (!doc.is_object()) throw Error(Errc::InvalidConfig, "state file must be a JSON object");
  const bool has_coeffs = doc.contains("coeffs");
  const bool has_partition = doc.contains("partition");
  if (has_coeffs == has_partition) {
    throw Error(Errc::InvalidConfig, "state file needs exactly one of \"coeffs\" or \"partition\"");
  }
  bool renormalize = false;
  if (doc.contains("renormalize")) {
    if (!doc["renormalize"].is_boolean()) throw Error(Errc::InvalidConfig, "\"renormalize\" must be a boolean");
    renormalize = doc["renormalize"].get<bool>();
  }

  StateOptions opts;
  opts.renormalize = renormalize;
  opts.silent_tolerance = kFileSilentTolerance;
  if (has_coeffs) {
    const auto& arr = doc["coeffs"];
    if (!arr.is_array()) throw Error(Errc::InvalidConfig, "\"coeffs\" must be an array");
    std::vector<double> raw;
    for (const auto& v : arr) raw.push_back(number_field(v, "coefficient"));
    return WState::make(raw, opts);
  }

  const auto& arr = doc["partition"];
  if (!arr.is_array()) throw Error(Errc::InvalidConfig, "\"partition\" must be an array");
  PartitionSpec spec;
  double norm2 = 0.0;
  for (const auto& b : arr) {
    if (!b.is_object() || !b.contains("mult") || !b.contains("amp")) {
      throw Error(Errc::InvalidConfig, "partition blocks need \"mult\" and \"amp\"");
    }
    if (!b["mult"].is_number_integer() || b["mult"].get<long long>() < 1) {
      throw Error(Errc::InvalidConfig, "\"mult\" must be a positive integer");
    }
    Block block{static_cast<std::size_t>(b["mult"].get<long long>()), number_field(b["amp"], "amp")};
    norm2 += static_cast<double>(block.mult) * block.amp * block.amp;
    spec.blocks.push_back(block);
  }
  // Same leniency as for plain coefficient lists.
  if (std::abs(std::sqrt(norm2) - 1.0) <= kFileSilentTolerance) renormalize = true;
  return expand_partition(spec, renormalize);
}

WState parse_state_text(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(Errc::InvalidConfig, std::string("invalid JSON: ") + e.what());
  }
  return parse_state(doc);
}

json analysis_json(const WState& state, const Analysis& a) {
  json j;
  j["input"] = {{"renormalized", state.renormalized()}, {"had_negative", state.had_negative()}};
  j["coeffs"] = std::vector<double>(state.coeffs().begin(), state.coeffs().end());
  j["N"] = state.size();
  j["max_index"] = state.max_index();
  j["r1"] = a.regions.r1;
  j["r2"] = a.regions.r2;
  j["region"] = std::string(to_string(a.regions.region));
  j["boundary"] = {{"on_r1", a.regions.on_r1}, {"on_r2", a.regions.on_r2}};
  j["branch"] = std::string(to_string(a.diameter.branch));
  if (a.diameter.branch != Branch::NoDiameter) {
    j["r"] = a.diameter.r;
    j["residual"] = a.diameter.residual;
    j["iterations"] = a.diameter.iterations;
  }
  j["g"] = a.overlap.g;
  j["g2"] = a.overlap.g_squared;
  j["E_g_nat"] = a.overlap.e_g;
  j["E_g_bits"] = a.overlap.e_g_bits();
  j["b_z"] = a.regions.bz;
  j["thetas"] = a.product.thetas;
  return j;
}

json oracle_json(const WState& state, const OracleResult& res) {
  json j;
  j["coeffs"] = std::vector<double>(state.coeffs().begin(), state.coeffs().end());
  j["g_best"] = res.g_best;
  j["g2_best"] = res.g_best * res.g_best;
  j["thetas_best"] = res.thetas_best;
  j["starts_used"] = res.starts_used;
  j["converged_starts"] = res.converged_starts;
  j["converged"] = res.converged;
  j["spread"] = res.spread;
  j["suspect_local_maxima"] = res.suspect_local_maxima();
  j["sweeps_best"] = res.sweeps_best;
  try {
    const auto st = stationarity_check(state, res);
    j["stationarity"] = {{"max_deviation", st.max_deviation}, {"implied_r", st.implied_r}};
  } catch (const Error& e) {
    j["stationarity"] = {{"error", std::string(to_string(e.code()))}};
  }
  return j;
}

json campaign_json(const CampaignReport& rep) {
  json props = json::array();
  for (const auto& p : rep.properties) {
    json jp = {{"name", p.name},       {"passed", p.passed}, {"checked", p.checked},
               {"measured", p.measured}, {"bound", p.bound}};
    if (!p.detail.empty()) jp["detail"] = p.detail;
    if (p.witness) {
      jp["witness"] = {{"coeffs", p.witness->coeffs},
                       {"seed", p.witness->seed},
                       {"sample_index", p.witness->sample_index}};
    }
    props.push_back(jp);
  }
  const auto& ex = rep.extremes;
  json extremes = {{"n_symmetric", ex.n_symmetric}, {"n_asymmetric", ex.n_asymmetric},
                   {"n_slight", ex.n_slight},       {"max_oracle_gap", ex.max_oracle_gap}};
  if (ex.n_symmetric) {
    extremes["min_r2_symmetric"] = ex.min_r2_sym;
    extremes["max_r2_symmetric"] = ex.max_r2_sym;
  }
  if (ex.n_asymmetric) extremes["min_r2_asymmetric"] = ex.min_r2_asym;
  return {{"passed", rep.passed()}, {"properties", props}, {"extremes", extremes}};
}

json scaling_json(const ScalingReport& rep) {
  json rows = json::array();
  for (const auto& r : rep.rows) {
    rows.push_back({{"N", r.n},
                    {"mean_deviation", r.mean_deviation},
                    {"max_deviation", r.max_deviation},
                    {"min_r1_squared", r.min_r1_squared}});
  }
  return {{"passed", rep.passed},
          {"fitted_C", rep.fitted_c},
          {"slope", rep.slope},
          {"all_above_third", rep.all_above_third},
          {"rows", rows}};
}

json continuity_json(const ContinuityReport& rep) {
  return {{"passed", rep.passed},
          {"r1_crossing", rep.r1_crossing},
          {"r2_crossing", rep.r2_crossing},
          {"g_jump_r1", rep.g_jump_r1},
          {"r_jump_r1", rep.r_jump_r1},
          {"g_jump_r2", rep.g_jump_r2},
          {"max_grid_jump", rep.max_grid_jump}};
}

json verify_json(const VerifyReport& rep) {
  json j = {{"passed", rep.passed()},
            {"symmetric", campaign_json(rep.symmetric)},
            {"asymmetric", campaign_json(rep.asymmetric)},
            {"mixed", campaign_json(rep.mixed)},
            {"continuity", continuity_json(rep.continuity)}};
  if (rep.scaling) j["r1_scaling"] = scaling_json(*rep.scaling);
  return j;
}

CustomSweep parse_custom_sweep(const json& doc) {
  if (!doc.is_object() || !doc.contains("family") || !doc["family"].is_string()) {
    throw Error(Errc::InvalidConfig, "custom sweep needs a \"family\" string");
  }
  CustomSweep s;
  s.family = doc["family"].get<std::string>();
  auto num = [&](const char* name, double& out) {
    if (doc.contains(name)) out = number_field(doc[name], name);
  };
  auto count = [&](const char* name, std::size_t& out) {
    if (!doc.contains(name)) return;
    if (!doc[name].is_number_integer() || doc[name].get<long long>() < 1) {
      throw Error(Errc::InvalidConfig, std::string(name) + " must be a positive integer");
    }
    out = static_cast<std::size_t>(doc[name].get<long long>());
  };
  num("from", s.from);
  num("to", s.to);
  count("points", s.points);
  count("m", s.m);
  count("k", s.k);
  count("l", s.l);
  count("n", s.n);
  num("phi", s.phi);
  num("ratio", s.ratio);
  num("kappa", s.kappa);
  return s;
}

}  // namespace wdiam::io
