#pragma once

#include "wdiam/state.hpp"

namespace wdiam {

/// g for N = 3: twice the circumradius of the triangle with sides c1, c2, c3
/// when the largest side squared is below the sum of the other two squared,
/// the largest side otherwise. Order of arguments is irrelevant.
double g_three_qubit(double c1, double c2, double c3);

/// m qubits at cos(theta)/sqrt(m) and k qubits at sin(theta)/sqrt(k).
struct TwoParamFamily {
  int m = 0;
  int k = 0;
  double theta = 0.0;

  double a() const;
  double b() const;
  WState state() const;
};

/// Closed-form diameter of the two-block family, solvable by radicals for
/// m, k > 1. Returns r (not r^2).
double r_two_param(const TwoParamFamily& fam);

/// Discriminant 1 - (N-1)/(mk) sin^2(2 theta).
double two_param_discriminant(const TwoParamFamily& fam);

/// Large-N symmetric estimate 4 r^2 exp(-|c|^2 / 4r^2) at r^2 = 1/4, i.e.
/// g^2 ~ 1/e for normalized states.
double g2_symmetric_limit(const WState& state);

/// r = (1/2)(1 - c^2)/sqrt(1 - 2c^2), valid for c^2 < 1/2.
double r_asymmetric_closed(double c);

/// g^2 = (1 - c^2) exp(-(1 - 2c^2)/(1 - c^2)), defined for c^2 <= 1/2.
double g2_asymmetric_closed(double c);

/// Universal large-N g^2 as a function of the smallest Bloch z component:
///   b_z in (0, 1/3): (1+b_z)/2 exp(-2 b_z/(1+b_z))
///   b_z <= 0:       (1-b_z)/2
double g2_interpolating(double bz);

/// Large-N first critical value, 1/sqrt(3).
double r1_large_n_estimate(int n);

}  // namespace wdiam
