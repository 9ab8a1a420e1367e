#pragma once

#include <cstddef>

#include "wdiam/state.hpp"

namespace wdiam::families {

/// m at a, k at b, one at c, with a/b fixed and the blocks normalized
/// against c. Defaults are the 8 + 10 + 1 curve.
struct BlocksPlusOne {
  std::size_t m = 8;
  std::size_t k = 10;
  double ratio = 0.8;  // a/b

  PartitionSpec partition(double c) const;
  WState state(double c) const { return expand_partition(partition(c)); }

  /// c at which the last coefficient equals its own first critical value.
  double r1_crossing() const;
};

/// 19-qubit state: 7 at a, 10 at b, then c and d, parametrized by (k, phi, c).
struct NineteenQubit {
  double k = 1.8;
  double phi = 0.7853981633974483;  // pi/4

  double a2(double c) const;
  double b2(double c) const;
  double d2(double c) const;

  WState state(double c) const;

  /// c solving c = r1 for the c qubit.
  double c_crossing() const;
  /// c at which d(c) equals its own first critical value.
  double d_crossing() const;

  // Input indices of the c and d qubits in state().
  static constexpr std::size_t c_index = 17;
  static constexpr std::size_t d_index = 18;
};

/// m at sin(theta)cos(phi)/sqrt(m), k at sin(theta)sin(phi)/sqrt(k),
/// l at cos(theta)/sqrt(l).
struct ThreeBlocks {
  std::size_t m = 10, k = 10, l = 10;
  double phi = 0.7853981633974483;

  WState state(double theta) const;
};

/// n-1 equal small coefficients plus one with b_z = 1 - 2c^2.
struct OneLarge {
  std::size_t n = 10;

  WState state_from_bz(double bz) const;
};

/// Root of an increasing-through-zero scalar function on [lo, hi] by
/// bisection to floating-point resolution.
double bisect_crossing(double (*f)(const void*, double), const void* ctx, double lo, double hi);

}  // namespace wdiam::families
