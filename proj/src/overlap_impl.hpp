#pragma once

#include "wdiam/overlap.hpp"
#include "wdiam/regions.hpp"

namespace wdiam::detail {

OverlapReport overlap_with_report(const WState& state, const DiameterSolution& sol,
                                  const RegionReport& rep);
ProductState product_with_report(const WState& state, const DiameterSolution& sol,
                                 const RegionReport& rep);

}  // namespace wdiam::detail
