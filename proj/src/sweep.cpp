#include "wdiam/sweep.hpp"

#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <ostream>
#include <string>

#include "wdiam/analysis.hpp"
#include "wdiam/asymptotics.hpp"
#include "wdiam/error.hpp"
#include "wdiam/families.hpp"
#include "wdiam/oracle.hpp"
#include "wdiam/parallel.hpp"

namespace wdiam {

namespace {

constexpr double kEdgeMargin = 1e-6;
constexpr double kHalfPi = std::numbers::pi / 2;

std::string key(const char* prefix, std::size_t m, std::size_t k) {
  return std::string(prefix) + "_m" + std::to_string(m) + "_k" + std::to_string(k);
}

Cell r_cell(const DiameterSolution& sol) {
  if (sol.branch == Branch::NoDiameter) return std::monostate{};
  return sol.r;
}

template <class Fn>
Cell guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const Error&) {
    return std::monostate{};
  }
}

// Fills one row per grid value, in grid order, using every worker.
SweepTable tabulate(std::vector<std::string> columns, const std::vector<double>& grid,
                    const std::function<std::vector<Cell>(double)>& row) {
  SweepTable t;
  t.columns = std::move(columns);
  t.rows.resize(grid.size());
  parallel_for(grid.size(), [&](std::size_t i) {
    t.rows[i] = row(grid[i]);
    t.rows[i].insert(t.rows[i].begin(), grid[i]);
  });
  return t;
}

double oracle_g(const WState& s, const SweepOptions& opts) {
  return maximize_overlap(s, opts.starts, opts.seed).g_best;
}

const std::pair<std::size_t, std::size_t> kTwoParam[] = {{10, 10}, {12, 18}, {30, 30}};

SweepTable figure1(const SweepOptions& opts) {
  std::vector<std::string> cols{"theta"};
  for (auto [m, k] : kTwoParam) {
    cols.push_back(key("r_exact", m, k));
    cols.push_back(key("r_closed", m, k));
  }
  return tabulate(cols, linear_grid(kEdgeMargin, kHalfPi - kEdgeMargin, opts.points), [](double th) {
    std::vector<Cell> row;
    for (auto [m, k] : kTwoParam) {
      const TwoParamFamily fam{static_cast<int>(m), static_cast<int>(k), th};
      row.push_back(r_cell(solve(fam.state())));
      row.push_back(guarded([&]() -> Cell { return r_two_param(fam); }));
    }
    return row;
  });
}

SweepTable figure2(const SweepOptions& opts) {
  std::vector<std::string> cols{"theta"};
  for (auto [m, k] : kTwoParam) {
    cols.push_back(key("g2_exact", m, k));
    if (opts.oracle) cols.push_back(key("g2_oracle", m, k));
  }
  cols.push_back("g2_limit");
  return tabulate(cols, linear_grid(kEdgeMargin, kHalfPi - kEdgeMargin, opts.points), [&](double th) {
    std::vector<Cell> row;
    Cell limit;
    for (auto [m, k] : kTwoParam) {
      const auto s = TwoParamFamily{static_cast<int>(m), static_cast<int>(k), th}.state();
      row.push_back(exact_g_squared(s));
      if (opts.oracle) {
        const double g = oracle_g(s, opts);
        row.push_back(g * g);
      }
      if (std::holds_alternative<std::monostate>(limit)) {
        limit = guarded([&]() -> Cell { return g2_symmetric_limit(s); });
      }
    }
    row.push_back(limit);
    return row;
  });
}

struct ThreeCase {
  std::size_t m, k, l;
  double phi;
};
const ThreeCase kThree[] = {{10, 10, 10, std::numbers::pi / 4},
                            {20, 20, 20, 5 * std::numbers::pi / 12},
                            {10, 20, 30, std::numbers::pi / 6}};

SweepTable figure3(const SweepOptions& opts) {
  std::vector<std::string> cols{"theta"};
  for (const auto& c : kThree) {
    cols.push_back("r_exact_m" + std::to_string(c.m) + "_k" + std::to_string(c.k) + "_l" + std::to_string(c.l));
  }
  cols.push_back("r_approx");
  return tabulate(cols, linear_grid(kEdgeMargin, kHalfPi - kEdgeMargin, opts.points), [](double th) {
    std::vector<Cell> row;
    for (const auto& c : kThree) {
      row.push_back(r_cell(solve(families::ThreeBlocks{c.m, c.k, c.l, c.phi}.state(th))));
    }
    row.push_back(0.5);
    return row;
  });
}

std::vector<double> c_grid(std::size_t points) {
  return linear_grid(kEdgeMargin, std::sqrt(0.5 - kEdgeMargin), points);
}

SweepTable figure4(const SweepOptions& opts) {
  const families::BlocksPlusOne fam;
  const families::NineteenQubit n19;
  auto t = tabulate({"c", "r_closed", "r_numeric", "region_numeric", "r_19", "region_19"}, c_grid(opts.points),
                    [&](double c) {
                      const auto a = fam.state(c);
                      const auto b = n19.state(c);
                      const auto ra = classify(a), rb = classify(b);
                      return std::vector<Cell>{r_asymmetric_closed(c), r_cell(solve(a, ra)),
                                               std::string(to_string(ra.region)), r_cell(solve(b, rb)),
                                               std::string(to_string(rb.region))};
                    });
  const double dc = n19.d_crossing();
  t.footer = {"r1_crossing_m8_k10=" + format_double(fam.r1_crossing()),
              "r1_c_19=" + format_double(n19.c_crossing()),
              "r1_d_19=" + format_double(std::sqrt(n19.d2(dc))) + " at c=" + format_double(dc)};
  return t;
}

SweepTable figure5(const SweepOptions& opts) {
  const families::BlocksPlusOne fam;
  const families::NineteenQubit n19;
  std::vector<std::string> cols{"c", "g_closed", "g_numeric", "g_19"};
  if (opts.oracle) {
    cols.push_back("g_oracle_numeric");
    cols.push_back("g_oracle_19");
  }
  return tabulate(cols, c_grid(opts.points), [&](double c) {
    const auto a = fam.state(c);
    const auto b = n19.state(c);
    std::vector<Cell> row{std::sqrt(g2_asymmetric_closed(c)), std::sqrt(exact_g_squared(a)),
                          std::sqrt(exact_g_squared(b))};
    if (opts.oracle) {
      row.push_back(oracle_g(a, opts));
      row.push_back(oracle_g(b, opts));
    }
    return row;
  });
}

SweepTable figure6(const SweepOptions& opts) {
  const families::OneLarge fam{10};
  std::vector<std::string> cols{"b_z", "g_interp", "g_exact_n10", "region_n10"};
  if (opts.oracle) cols.push_back("g_oracle_n10");
  auto t = tabulate(cols, linear_grid(-1.0 + kEdgeMargin, 1.0 / 3.0 - kEdgeMargin, opts.points), [&](double bz) {
    const auto s = fam.state_from_bz(bz);
    std::vector<Cell> row{std::sqrt(g2_interpolating(bz)), std::sqrt(exact_g_squared(s)),
                          std::string(to_string(classify(s).region))};
    if (opts.oracle) row.push_back(oracle_g(s, opts));
    return row;
  });
  double worst = 0.0, at = 0.0;
  for (const auto& row : t.rows) {
    const double gi = std::get<double>(row[1]), ge = std::get<double>(row[2]);
    const double gap = std::abs(gi - ge) / ge;
    if (gap > worst) {
      worst = gap;
      at = std::get<double>(row[0]);
    }
  }
  t.footer = {"max_rel_gap=" + format_double(worst) + " at b_z=" + format_double(at)};
  return t;
}

}  // namespace

std::vector<double> linear_grid(double from, double to, std::size_t points) {
  if (points < 2) throw Error(Errc::InvalidConfig, "a grid needs at least two points");
  if (!(std::isfinite(from) && std::isfinite(to) && from < to)) {
    throw Error(Errc::InvalidConfig, "grid bounds must be finite and increasing");
  }
  std::vector<double> g(points);
  for (std::size_t i = 0; i < points; ++i) {
    g[i] = from + (to - from) * static_cast<double>(i) / static_cast<double>(points - 1);
  }
  g.back() = to;
  return g;
}

SweepTable figure_sweep(int figure, const SweepOptions& opts) {
  switch (figure) {
    case 1: return figure1(opts);
    case 2: return figure2(opts);
    case 3: return figure3(opts);
    case 4: return figure4(opts);
    case 5: return figure5(opts);
    case 6: return figure6(opts);
    default: throw Error(Errc::InvalidConfig, "figure id must be 1-6");
  }
}

SweepTable custom_sweep(const CustomSweep& spec, const SweepOptions& opts) {
  std::function<WState(double)> make;
  std::string param = "c";
  if (spec.family == "two-param") {
    param = "theta";
    make = [&](double th) { return TwoParamFamily{static_cast<int>(spec.m), static_cast<int>(spec.k), th}.state(); };
  } else if (spec.family == "three-param") {
    param = "theta";
    make = [&](double th) { return families::ThreeBlocks{spec.m, spec.k, spec.l, spec.phi}.state(th); };
  } else if (spec.family == "blocks-plus-one") {
    make = [&](double c) { return families::BlocksPlusOne{spec.m, spec.k, spec.ratio}.state(c); };
  } else if (spec.family == "nineteen") {
    make = [&](double c) { return families::NineteenQubit{spec.kappa, spec.phi}.state(c); };
  } else if (spec.family == "one-large") {
    param = "b_z";
    make = [&](double bz) { return families::OneLarge{spec.n}.state_from_bz(bz); };
  } else {
    throw Error(Errc::InvalidConfig, "unknown sweep family '" + spec.family + "'");
  }
  std::vector<std::string> cols{param, "r1", "r2", "region", "r", "residual", "g", "g2", "E_g_nat"};
  if (opts.oracle) cols.push_back("g_oracle");
  return tabulate(cols, linear_grid(spec.from, spec.to, spec.points), [&](double x) {
    const auto s = make(x);
    const auto a = analyze(s);
    std::vector<Cell> row{a.regions.r1, a.regions.r2, std::string(to_string(a.regions.region)), r_cell(a.diameter)};
    if (a.diameter.branch == Branch::NoDiameter) {
      row.emplace_back(std::monostate{});
    } else {
      row.emplace_back(a.diameter.residual);
    }
    row.insert(row.end(), {a.overlap.g, a.overlap.g_squared, a.overlap.e_g});
    if (opts.oracle) row.push_back(oracle_g(s, opts));
    return row;
  });
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

}  // namespace

void write_csv(std::ostream& out, const SweepTable& table) {
  for (std::size_t i = 0; i < table.columns.size(); ++i) {
    if (i) out << ',';
    out << csv_field(table.columns[i]);
  }
  out << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out << ',';
      if (const auto* d = std::get_if<double>(&row[i])) {
        out << format_double(*d);
      } else if (const auto* s = std::get_if<std::string>(&row[i])) {
        out << csv_field(*s);
      }
    }
    out << '\n';
  }
  for (const auto& line : table.footer) out << "# " << line << '\n';
}

}  // namespace wdiam
