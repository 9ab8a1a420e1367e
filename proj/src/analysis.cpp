#include "wdiam/analysis.hpp"

#include "overlap_impl.hpp"

namespace wdiam {

Analysis analyze(const WState& state) {
  Analysis a;
  a.regions = classify(state);
  a.diameter = solve(state, a.regions);
  a.overlap = detail::overlap_with_report(state, a.diameter, a.regions);
  a.product = detail::product_with_report(state, a.diameter, a.regions);
  return a;
}

double exact_g_squared(const WState& state) {
  const auto rep = classify(state);
  return detail::overlap_with_report(state, solve(state, rep), rep).g_squared;
}

}  // namespace wdiam
