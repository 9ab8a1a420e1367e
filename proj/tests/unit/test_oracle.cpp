#include <cmath>
#include <vector>

#include "doctest.h"
#include "reference.hpp"
#include "wdiam/analysis.hpp"
#include "wdiam/campaign.hpp"
#include "wdiam/error.hpp"
#include "wdiam/oracle.hpp"

using namespace wdiam;
using doctest::Approx;

namespace {
std::vector<double> vec(const WState& w) { return {w.coeffs().begin(), w.coeffs().end()}; }

WState one_large(std::size_t n, double cn2) {
  std::vector<double> v(n - 1, std::sqrt((1 - cn2) / double(n - 1)));
  v.push_back(std::sqrt(cn2));
  return WState::make(v);
}
}  // namespace

TEST_CASE("oracle on W3") {
  auto w = ref::W({1, 1, 1});
  auto res = maximize_overlap(w);
  CHECK(res.converged);
  CHECK(res.g_best == Approx(2.0 / 3).epsilon(1e-10));
  CHECK(res.starts_used == 32);
  auto st = stationarity_check(w, res);
  CHECK(st.max_deviation <= 1e-7);
  CHECK(st.implied_r == Approx(std::sqrt(3.0 / 8)).epsilon(1e-7));
}

TEST_CASE("oracle on a slight state finds the basis state") {
  auto w = one_large(10, 0.6);
  auto res = maximize_overlap(w);
  CHECK(res.g_best == Approx(std::sqrt(0.6)).epsilon(1e-12));
  CHECK(res.thetas_best.back() == Approx(0.0).epsilon(1e-6));
  CHECK_THROWS_AS(stationarity_check(w, res), Error);
  try {
    stationarity_check(w, res);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::BoundaryOptimum);
  }
}

TEST_CASE("oracle matches the pipeline on an N = 10 asymmetric state") {
  auto w = one_large(10, 0.4);
  REQUIRE(classify(w).region == Region::Asymmetric);
  CHECK(maximize_overlap(w).g_best == Approx(analyze(w).overlap.g).epsilon(1e-8));
}

TEST_CASE("oracle implied diameter on an N = 20 asymmetric state") {
  Rng rng(71);
  auto w = sample_state_in_region(20, Region::Asymmetric, rng);
  OracleOptions opts;
  opts.tolerance = 1e-16;
  auto st = stationarity_check(w, maximize_overlap(w, opts));
  CHECK(st.implied_r == Approx(analyze(w).diameter.r).epsilon(1e-6));
}

TEST_CASE("oracle is reproducible and seed-driven") {
  Rng rng(73);
  auto w = sample_state(8, rng);
  auto a = maximize_overlap(w, 16, 5);
  auto b = maximize_overlap(w, 16, 5);
  CHECK(a.g_best == b.g_best);
  CHECK(a.thetas_best == b.thetas_best);
  CHECK(a.sweeps_best == b.sweeps_best);
}

TEST_CASE("oracle agrees with the pipeline on random states") {
  Rng rng(79);
  for (int rep = 0; rep < 200; ++rep) {
    auto w = sample_state(3 + rng.uniform_int(0, 9), rng);
    auto res = maximize_overlap(w);
    CHECK(std::abs(res.g_best - analyze(w).overlap.g) <= 1e-9);
    CHECK(ref::overlap(vec(w), res.thetas_best) == Approx(res.g_best).epsilon(1e-12));
    CHECK(res.spread >= 0);
  }
}

TEST_CASE("complex phases do not raise the overlap") {
  Rng rng(83);
  double worst = 0;
  for (int rep = 0; rep < 100; ++rep) {
    auto w = sample_state(3 + rng.uniform_int(0, 7), rng);
    OracleOptions opts;
    opts.starts = 8;
    double gc = maximize_overlap_complex(w, opts);
    worst = std::max(worst, std::abs(gc - analyze(w).overlap.g));
  }
  CHECK(worst <= 1e-9);
}

TEST_CASE("oracle option validation and non-convergence") {
  auto w = ref::W({1, 2, 3});
  OracleOptions bad;
  bad.starts = 0;
  CHECK_THROWS_AS(maximize_overlap(w, bad), Error);
  OracleOptions tight;
  tight.max_sweeps = 1;
  tight.tolerance = 0;
  try {
    maximize_overlap(w, tight);
    FAIL("expected NoConvergedStart");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NoConvergedStart);
  }
}

TEST_CASE("stationarity on exact angles") {
  Rng rng(89);
  for (int rep = 0; rep < 300; ++rep) {
    auto w = sample_state(3 + rng.uniform_int(0, 40), rng);
    auto a = analyze(w);
    if (a.regions.region == Region::Slight) continue;
    auto st = stationarity_check(w, a.product.thetas);
    CHECK(st.max_deviation <= 1e-9);
    CHECK(st.implied_r == Approx(a.diameter.r).epsilon(1e-9));
  }
  CHECK_THROWS_AS(stationarity_check(ref::W({1, 1, 1}), std::vector<double>{0.1}), Error);
}
