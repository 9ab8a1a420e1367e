#include "wdiam/families.hpp"

#include <cmath>

#include "wdiam/error.hpp"
#include "wdiam/regions.hpp"

namespace wdiam::families {

PartitionSpec BlocksPlusOne::partition(double c) const {
  if (!(c >= 0.0 && c <= 1.0)) throw Error(Errc::OutOfDomain, "c must lie in [0, 1]");
  // m (ratio b)^2 + k b^2 = 1 - c^2
  const double b2 = (1.0 - c * c) / (static_cast<double>(m) * ratio * ratio + static_cast<double>(k));
  PartitionSpec spec;
  spec.blocks = {{m, ratio * std::sqrt(b2)}, {k, std::sqrt(b2)}, {1, c}};
  return spec;
}

double NineteenQubit::a2(double c) const { return std::cos(phi) * std::cos(phi) * (1.0 - c * c) / (7.0 * k); }
double NineteenQubit::b2(double c) const { return std::sin(phi) * std::sin(phi) * (1.0 - c * c) / (10.0 * k); }
double NineteenQubit::d2(double c) const { return (k - 1.0) / k * (1.0 - c * c); }

WState NineteenQubit::state(double c) const {
  if (!(c >= 0.0 && c <= 1.0)) throw Error(Errc::OutOfDomain, "c must lie in [0, 1]");
  if (!(k >= 1.0)) throw Error(Errc::OutOfDomain, "k must be at least 1");
  PartitionSpec spec;
  spec.blocks = {{7, std::sqrt(a2(c))}, {10, std::sqrt(b2(c))}, {1, c}, {1, std::sqrt(d2(c))}};
  return expand_partition(spec, /*renormalize=*/true);
}

WState ThreeBlocks::state(double theta) const {
  const double st = std::sin(theta), ct = std::cos(theta);
  PartitionSpec spec;
  spec.blocks = {{m, st * std::cos(phi) / std::sqrt(static_cast<double>(m))},
                 {k, st * std::sin(phi) / std::sqrt(static_cast<double>(k))},
                 {l, ct / std::sqrt(static_cast<double>(l))}};
  return expand_partition(spec, /*renormalize=*/true);
}

WState OneLarge::state_from_bz(double bz) const {
  if (n < 3) throw Error(Errc::TooFewQubits, "need at least 3 qubits");
  if (!(bz >= -1.0 && bz <= 1.0)) throw Error(Errc::OutOfDomain, "b_z must lie in [-1, 1]");
  const double c2 = 0.5 * (1.0 - bz);
  const double rest = (1.0 - c2) / static_cast<double>(n - 1);
  PartitionSpec spec;
  spec.blocks = {{n - 1, std::sqrt(rest)}, {1, std::sqrt(c2)}};
  return expand_partition(spec, /*renormalize=*/true);
}

}  // namespace wdiam::families

namespace wdiam::families {

double bisect_crossing(double (*f)(const void*, double), const void* ctx, double lo, double hi) {
  double flo = f(ctx, lo), fhi = f(ctx, hi);
  if (!((flo < 0.0 && fhi > 0.0) || (flo > 0.0 && fhi < 0.0))) {
    throw Error(Errc::ConvergenceFailure, "crossing is not bracketed");
  }
  const bool rising = flo < 0.0;
  for (int it = 0; it < 200; ++it) {
    const double mid = lo + 0.5 * (hi - lo);
    if (mid <= lo || mid >= hi) break;
    const double fm = f(ctx, mid);
    if (fm == 0.0) return mid;
    if ((fm < 0.0) == rising) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return lo + 0.5 * (hi - lo);
}

double BlocksPlusOne::r1_crossing() const {
  auto f = [](const void* ctx, double c) {
    const auto* self = static_cast<const BlocksPlusOne*>(ctx);
    const auto s = self->state(c);
    return c - first_critical(s, s.size() - 1);
  };
  return bisect_crossing(f, this, 0.05, 0.7071);
}

double NineteenQubit::c_crossing() const {
  auto f = [](const void* ctx, double c) {
    return c - first_critical(static_cast<const NineteenQubit*>(ctx)->state(c), c_index);
  };
  return bisect_crossing(f, this, 0.3, 0.7071);
}

double NineteenQubit::d_crossing() const {
  auto f = [](const void* ctx, double c) {
    const auto* self = static_cast<const NineteenQubit*>(ctx);
    return std::sqrt(self->d2(c)) - first_critical(self->state(c), d_index);
  };
  // d decreases with c: positive gap at c = 0, negative near c = 0.7.
  return bisect_crossing(f, this, 0.0, 0.7071);
}

}  // namespace wdiam::families
