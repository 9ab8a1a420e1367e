#pragma once

#include "wdiam/diameter.hpp"
#include "wdiam/overlap.hpp"
#include "wdiam/regions.hpp"
#include "wdiam/state.hpp"

namespace wdiam {

/// Full exact pipeline: regions, diameter, overlap and nearest product state.
struct Analysis {
  RegionReport regions;
  DiameterSolution diameter;
  OverlapReport overlap;
  ProductState product;
};

Analysis analyze(const WState& state);

/// Exact g^2 via the region-dispatched formulas.
double exact_g_squared(const WState& state);

}  // namespace wdiam
