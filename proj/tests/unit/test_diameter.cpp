#include <cmath>
#include <vector>

#include "doctest.h"
#include "reference.hpp"
#include "wdiam/campaign.hpp"
#include "wdiam/diameter.hpp"
#include "wdiam/error.hpp"
#include "wdiam/regions.hpp"

using namespace wdiam;
using doctest::Approx;

namespace {
std::vector<double> vec(const WState& w) { return {w.coeffs().begin(), w.coeffs().end()}; }

Errc code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return Errc::InvalidConfig;
}

WState one_large(std::size_t n, double cn2) {
  std::vector<double> v(n - 1, std::sqrt((1 - cn2) / double(n - 1)));
  v.push_back(std::sqrt(cn2));
  return WState::make(v);
}
}  // namespace

TEST_CASE("W3 symmetric diameter") {
  auto sol = solve(ref::W({1, 1, 1}));
  CHECK(sol.branch == Branch::SymmetricEq);
  CHECK(sol.r * sol.r == Approx(3.0 / 8).epsilon(1e-15));
  CHECK(std::abs(sol.residual) < 1e-15);
}

TEST_CASE("equal coefficients: r^2 = N / (4 (N - 1))") {
  for (std::size_t n : {3u, 4u, 7u, 20u, 100u, 1000u}) {
    std::vector<double> v(n, 1.0 / std::sqrt(double(n)));
    auto sol = solve(WState::make(v));
    CHECK(sol.r * sol.r == Approx(double(n) / (4.0 * double(n - 1))).epsilon(1e-13));
  }
}

TEST_CASE("symmetric solver against an independent bisection") {
  Rng rng(21);
  for (int rep = 0; rep < 400; ++rep) {
    auto w = sample_state_in_region(3 + rng.uniform_int(0, 60), Region::Symmetric, rng);
    auto sol = solve_symmetric(w);
    CHECK(sol.r == Approx(ref::symmetric_r(vec(w))).epsilon(1e-12));
    CHECK(std::abs(sol.residual) <= 1e-12 * double(w.size()));
    CHECK(std::abs(symmetric_equation_residual(w, sol.r)) <= 1e-12 * double(w.size()));
  }
}

TEST_CASE("asymmetric solver against an independent scan") {
  Rng rng(23);
  for (int rep = 0; rep < 400; ++rep) {
    auto w = sample_state_in_region(3 + rng.uniform_int(0, 60), Region::Asymmetric, rng);
    auto sol = solve_asymmetric(w);
    CHECK(sol.branch == Branch::AsymmetricEq);
    double r = ref::asymmetric_r(vec(w));
    REQUIRE(std::isfinite(r));
    CHECK(sol.r == Approx(r).epsilon(1e-9));
    CHECK(std::abs(sol.residual) <= 1e-12 * double(w.size()));
    CHECK(std::abs(asymmetric_equation_residual(w, sol.r)) <= 1e-12 * double(w.size()) * sol.r);
  }
}

TEST_CASE("boundary c_N = r1 gives r = c_N on both sides") {
  Rng rng(29);
  for (int rep = 0; rep < 50; ++rep) {
    auto w = sample_critical_state(3 + rng.uniform_int(0, 30), rng);
    auto sol = solve(w);
    CHECK(sol.r == Approx(w.largest()).epsilon(1e-9));
  }
}

TEST_CASE("large-N one-coefficient family near the closed form") {
  auto sol = solve(one_large(400, 0.4));
  CHECK(sol.branch == Branch::AsymmetricEq);
  CHECK(sol.r == Approx(0.5 * 0.6 / std::sqrt(0.2)).epsilon(5e-3));
}

TEST_CASE("diameter tends to 1/sqrt(3) as c_N^2 approaches 1/3 from above") {
  auto sol = solve(one_large(2000, 1.0 / 3 + 1e-3));
  CHECK(sol.r * sol.r == Approx(1.0 / 3).epsilon(1e-2));
}

TEST_CASE("diameter grows without bound toward c_N^2 = 1/2") {
  double prev = 0;
  for (double gap : {1e-2, 1e-3, 1e-4, 1e-5}) {
    auto sol = solve(one_large(10, 0.5 - gap));
    CHECK(sol.r > prev);
    prev = sol.r;
  }
  CHECK(prev > 50);
}

TEST_CASE("slight states have no diameter") {
  auto sol = solve(one_large(10, 0.6));
  CHECK(sol.branch == Branch::NoDiameter);
  CHECK(std::isnan(sol.r));
}

TEST_CASE("wrong-region errors") {
  auto sym = ref::W({1, 1, 1});
  auto asym = one_large(50, 0.4);
  auto sl = one_large(10, 0.6);
  CHECK(code_of([&] { solve_asymmetric(sym); }) == Errc::WrongRegion);
  CHECK(code_of([&] { solve_symmetric(asym); }) == Errc::WrongRegion);
  CHECK(code_of([&] { solve_symmetric(sl); }) == Errc::WrongRegion);
  CHECK(code_of([&] { solve_asymmetric(sl); }) == Errc::WrongRegion);
}

TEST_CASE("solve is deterministic") {
  Rng a(31), b(31);
  for (int rep = 0; rep < 50; ++rep) {
    auto wa = sample_state(3 + a.uniform_int(0, 20), a);
    auto wb = sample_state(3 + b.uniform_int(0, 20), b);
    auto sa = solve(wa), sb = solve(wb);
    CHECK(sa.branch == sb.branch);
    if (sa.branch != Branch::NoDiameter) CHECK(sa.r == sb.r);
  }
}
