#pragma once

#include <limits>

#include <string_view>

#include "wdiam/regions.hpp"
#include "wdiam/state.hpp"

namespace wdiam {

enum class Branch { SymmetricEq, AsymmetricEq, NoDiameter };

std::string_view to_string(Branch branch) noexcept;

/// Entanglement diameter. `residual` is the defining equation divided by r,
///   symmetric:  sum_i sqrt(1 - c_i^2/r^2)               - (N - 2)
///   asymmetric: sum_{i<N} sqrt(1 - c_i^2/r^2) - sqrt(1 - c_N^2/r^2) - (N - 2)
/// and `r` is NaN for NoDiameter.
struct DiameterSolution {
  Branch branch = Branch::NoDiameter;
  double r = 0.0;
  double residual = 0.0;
  int iterations = 0;
  // s_N = sqrt(1 - c_N^2/r^2), refined on its own: near r = c_N it moves by
  // ~1e-11 per ulp of r. NaN when absent.
  double s_top = std::numeric_limits<double>::quiet_NaN();
};

DiameterSolution solve_symmetric(const WState& state);
DiameterSolution solve_asymmetric(const WState& state);

/// Classifies and dispatches. Slight states get NoDiameter.
DiameterSolution solve(const WState& state);
DiameterSolution solve(const WState& state, const RegionReport& report);

/// Residual of the symmetric / asymmetric equation in its original form,
/// sum sqrt(r^2 - c^2) (+/-) ... - (N - 2) r.
double symmetric_equation_residual(const WState& state, double r);
double asymmetric_equation_residual(const WState& state, double r);

}  // namespace wdiam
