#pragma once

#include <vector>

#include "wdiam/diameter.hpp"
#include "wdiam/state.hpp"

namespace wdiam {

struct OverlapReport {
  double g = 0.0;
  double g_squared = 0.0;
  double e_g = 0.0;  // -2 ln g

  double e_g_bits() const noexcept;
};

/// g^2 from the region formula matching `sol.branch`. Throws
/// InconsistentInput when the branch does not match the state's region.
OverlapReport overlap_from_diameter(const WState& state, const DiameterSolution& sol);

/// -2 ln g
double geometric_measure(double g);
double geometric_measure(const OverlapReport& report);

/// Nearest product state u_k = sin(theta_k)|0> + cos(theta_k)|1>, angles in
/// input qubit order.
struct ProductState {
  std::vector<double> thetas;
};

ProductState nearest_product(const WState& state, const DiameterSolution& sol);

/// <W|u_1 ... u_N> = sum_k c_k cos(theta_k) prod_{j != k} sin(theta_j)
double product_overlap_value(const WState& state, const ProductState& prod);

double direction_cosine_sum(const ProductState& prod);

}  // namespace wdiam
