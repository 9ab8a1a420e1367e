#include "wdiam/asymptotics.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "wdiam/error.hpp"
#include "wdiam/regions.hpp"

namespace wdiam {

double g_three_qubit(double c1, double c2, double c3) {
  std::array<double, 3> s{c1, c2, c3};
  for (double v : s) {
    if (!std::isfinite(v) || v < 0.0) throw Error(Errc::OutOfDomain, "coefficients must be finite and nonnegative");
  }
  std::sort(s.begin(), s.end());  // s[2] largest
  const double a = s[2], b = s[1], c = s[0];
  if (!(a * a < b * b + c * c)) return a;
  // Kahan's ordering of Heron's formula, a >= b >= c.
  const double p = (a + (b + c)) * (c - (a - b)) * (c + (a - b)) * (a + (b - c));
  const double area = 0.25 * std::sqrt(std::max(0.0, p));
  if (!(area > 0.0)) throw Error(Errc::DegenerateTriangle, "triangle of coefficients has zero area");
  // 2R = abc / (2 area)
  return a * b * c / (2.0 * area);
}

double TwoParamFamily::a() const { return std::cos(theta) / std::sqrt(static_cast<double>(m)); }
double TwoParamFamily::b() const { return std::sin(theta) / std::sqrt(static_cast<double>(k)); }

WState TwoParamFamily::state() const {
  if (m < 1 || k < 1) throw Error(Errc::OutOfDomain, "block sizes must be positive");
  PartitionSpec spec;
  spec.blocks = {{static_cast<std::size_t>(m), a()}, {static_cast<std::size_t>(k), b()}};
  return expand_partition(spec, /*renormalize=*/true);
}

double two_param_discriminant(const TwoParamFamily& fam) {
  const double n = fam.m + fam.k;
  const double s = std::sin(2.0 * fam.theta);
  return 1.0 - (n - 1.0) / (static_cast<double>(fam.m) * fam.k) * s * s;
}

double r_two_param(const TwoParamFamily& fam) {
  if (fam.m <= 1 || fam.k <= 1) {
    throw Error(Errc::OutOfDomain, "closed form needs both blocks larger than one qubit");
  }
  const double m = fam.m, k = fam.k, n = m + k;
  const double d = two_param_discriminant(fam);
  if (d < 0.0) throw Error(Errc::NegativeDiscriminant, "discriminant is negative");
  const double c = std::cos(fam.theta), s = std::sin(fam.theta);
  const double num = 2.0 * n * m * k - 4.0 * (n - 1.0) * (m * c * c + k * s * s) +
                     2.0 * m * k * (n - 2.0) * std::sqrt(d);
  const double den = 16.0 * (n - 1.0) * (m - 1.0) * (k - 1.0);
  return std::sqrt(num / den);
}

double g2_symmetric_limit(const WState& state) {
  if (classify(state).region != Region::Symmetric) {
    throw Error(Errc::OutOfDomain, "symmetric-limit estimate applies to symmetric-region states only");
  }
  double norm2 = 0.0;
  for (double c : state.coeffs()) norm2 += c * c;
  constexpr double r2 = 0.25;
  return 4.0 * r2 * std::exp(-norm2 / (4.0 * r2));
}

double r_asymmetric_closed(double c) {
  const double c2 = c * c;
  if (!std::isfinite(c) || c < 0.0 || c2 >= 0.5) throw Error(Errc::OutOfDomain, "requires 0 <= c^2 < 1/2");
  return 0.5 * (1.0 - c2) / std::sqrt(1.0 - 2.0 * c2);
}

double g2_asymmetric_closed(double c) {
  double c2 = c * c;
  if (!std::isfinite(c) || c < 0.0 || c2 > 0.5 + 4e-16) throw Error(Errc::OutOfDomain, "requires 0 <= c^2 <= 1/2");
  c2 = std::min(c2, 0.5);  // sqrt(0.5)^2 rounds above 1/2
  return (1.0 - c2) * std::exp(-(1.0 - 2.0 * c2) / (1.0 - c2));
}

double g2_interpolating(double bz) {
  if (!std::isfinite(bz) || bz < -1.0 || bz >= 1.0 / 3.0) {
    throw Error(Errc::OutOfDomain, "interpolating formula needs -1 <= b_z < 1/3");
  }
  if (bz <= 0.0) return 0.5 * (1.0 - bz);
  return 0.5 * (1.0 + bz) * std::exp(-2.0 * bz / (1.0 + bz));
}

double r1_large_n_estimate(int n) {
  if (n < 3) throw Error(Errc::OutOfDomain, "N must be at least 3");
  return 1.0 / std::numbers::sqrt3;
}

}  // namespace wdiam
