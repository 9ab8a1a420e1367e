#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

namespace wdiam {

/// Empty cells mark quantities that do not exist for a row (e.g. r in the
/// slight region).
using Cell = std::variant<std::monostate, double, std::string>;

struct SweepTable {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
  std::vector<std::string> footer;  // emitted as "# ..." lines
};

struct SweepOptions {
  std::size_t points = 400;
  bool oracle = false;  // add oracle columns where a per-state g is computed
  int starts = 32;
  std::uint64_t seed = 7;
};

/// Data behind figures 1-6.
SweepTable figure_sweep(int figure, const SweepOptions& opts = {});

/// Custom sweep over one family parameter. `family` is one of
///   two-param   (theta; m, k)
///   three-param (theta; m, k, l, phi)
///   blocks-plus-one (c; m, k, ratio)
///   nineteen    (c; k, phi)
///   one-large   (b_z; n)
struct CustomSweep {
  std::string family;
  double from = 0.0;
  double to = 1.0;
  std::size_t points = 400;
  std::size_t m = 10, k = 10, l = 10, n = 10;
  double phi = 0.7853981633974483;
  double ratio = 0.8;
  double kappa = 1.8;  // k of the 19-qubit family
};

SweepTable custom_sweep(const CustomSweep& spec, const SweepOptions& opts = {});

/// Linear grid of `points` values over [from, to].
std::vector<double> linear_grid(double from, double to, std::size_t points);

/// RFC-4180 style, LF line endings, 17 significant digits.
void write_csv(std::ostream& out, const SweepTable& table);
std::string format_double(double v);

}  // namespace wdiam
