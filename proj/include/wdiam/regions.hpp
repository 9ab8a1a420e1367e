#pragma once

#include <cstddef>
#include <span>
#include <string_view>

#include "wdiam/state.hpp"

namespace wdiam {

enum class Region { Symmetric, Asymmetric, Slight };

std::string_view to_string(Region region) noexcept;

inline constexpr double kBoundaryTolerance = 1e-10;

struct RegionReport {
  double r1 = 0.0;
  double r2 = 0.0;
  double largest = 0.0;
  double bz = 0.0;  // Bloch z component of the largest-coefficient qubit
  Region region = Region::Symmetric;
  bool on_r1 = false;
  bool on_r2 = false;
};

/// First critical value for a coefficient whose companions are `others`:
/// the root of sum_i sqrt(r^2 - o_i^2) = (|others| - 1) r on r >= max o_i.
/// Homogeneous of degree one in `others`.
double first_critical_of(std::span<const double> others);

/// First critical value for the largest coefficient.
double first_critical(const WState& state);

/// First critical value treating input index `index` as the distinguished
/// coefficient (its companions are every other qubit).
double first_critical(const WState& state, std::size_t index);

/// sqrt(1 - c_N^2)
double second_critical(const WState& state);
double second_critical(const WState& state, std::size_t index);

/// Residual of the first-critical equation at r.
double first_critical_residual(std::span<const double> others, double r);

RegionReport classify(const WState& state);

}  // namespace wdiam
