#pragma once

#include <string>

#include "json.hpp"

#include "wdiam/analysis.hpp"
#include "wdiam/campaign.hpp"
#include "wdiam/oracle.hpp"
#include "wdiam/state.hpp"
#include "wdiam/sweep.hpp"

namespace wdiam::io {

using nlohmann::json;

/// Looser than the library default so hand-typed coefficients with ~7
/// significant digits are accepted (and flagged as renormalized).
inline constexpr double kFileSilentTolerance = 1e-6;

/// {"coeffs": [...]} or {"partition": [{"mult": m, "amp": a}, ...]},
/// optional "renormalize": true.
WState parse_state(const json& doc);
WState parse_state_text(const std::string& text);

json analysis_json(const WState& state, const Analysis& analysis);
json oracle_json(const WState& state, const OracleResult& res);
json campaign_json(const CampaignReport& report);
json scaling_json(const ScalingReport& report);
json continuity_json(const ContinuityReport& report);
json verify_json(const VerifyReport& report);

CustomSweep parse_custom_sweep(const json& doc);

}  // namespace wdiam::io
