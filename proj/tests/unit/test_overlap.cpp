#include <cmath>
#include <vector>

#include "doctest.h"
#include "reference.hpp"
#include "wdiam/analysis.hpp"
#include "wdiam/campaign.hpp"
#include "wdiam/error.hpp"
#include "wdiam/overlap.hpp"

using namespace wdiam;
using doctest::Approx;

namespace {
std::vector<double> vec(const WState& w) { return {w.coeffs().begin(), w.coeffs().end()}; }
}  // namespace

TEST_CASE("W3 overlap, measure and angles") {
  auto w = ref::W({1, 1, 1});
  auto a = analyze(w);
  CHECK(a.overlap.g_squared == Approx(4.0 / 9).epsilon(1e-14));
  CHECK(a.overlap.g == Approx(2.0 / 3).epsilon(1e-14));
  CHECK(a.overlap.e_g == Approx(std::log(9.0 / 4)).epsilon(1e-14));
  CHECK(a.overlap.e_g_bits() == Approx(std::log2(9.0 / 4)).epsilon(1e-14));
  for (double t : a.product.thetas) CHECK(t == Approx(std::acos(1 / std::sqrt(3.0))).epsilon(1e-14));
  CHECK(direction_cosine_sum(a.product) == Approx(1.0).epsilon(1e-14));
  CHECK(product_overlap_value(w, a.product) == Approx(2.0 / 3).epsilon(1e-14));
}

TEST_CASE("equal coefficients approach 1/e") {
  for (std::size_t n : {3u, 10u, 100u, 10000u}) {
    std::vector<double> v(n, 1.0 / std::sqrt(double(n)));
    double g2 = exact_g_squared(WState::make(v));
    CHECK(g2 == Approx(std::pow(double(n - 1) / double(n), double(n - 1))).epsilon(1e-12));
  }
  std::vector<double> big(100000, 1.0 / std::sqrt(1e5));
  CHECK(std::abs(exact_g_squared(WState::make(big)) - std::exp(-1.0)) < 1e-5);
}

TEST_CASE("slight overlap is exactly the largest coefficient") {
  std::vector<double> v(40, std::sqrt(0.4 / 40));
  v.push_back(std::sqrt(0.6));
  auto w = WState::make(v);
  auto a = analyze(w);
  CHECK(a.overlap.g == w.largest());
  CHECK(a.overlap.g_squared == w.largest() * w.largest());
  CHECK(a.product.thetas.back() == 0.0);
  for (std::size_t i = 0; i + 1 < v.size(); ++i) CHECK(a.product.thetas[i] == Approx(M_PI / 2));
}

TEST_CASE("measure values") {
  CHECK(geometric_measure(1.0) == 0.0);
  CHECK(geometric_measure(std::exp(-0.5)) == Approx(1.0));
  CHECK_THROWS_AS(geometric_measure(0.0), Error);
  CHECK_THROWS_AS(geometric_measure(1.5), Error);
}

TEST_CASE("product overlap of basis and orthogonal states") {
  auto w = ref::W({0.3, 0.4, 0.5});
  CHECK(product_overlap_value(w, {{M_PI / 2, M_PI / 2, 0}}) == Approx(w.coeff(2)).epsilon(1e-15));
  CHECK(std::abs(product_overlap_value(w, {{M_PI / 2, M_PI / 2, M_PI / 2}})) < 1e-15);
  CHECK_THROWS_AS(product_overlap_value(w, {{0.1, 0.2}}), Error);
}

TEST_CASE("overlap agrees with a term-by-term evaluation at the stationary angles") {
  Rng rng(41);
  for (Region reg : {Region::Symmetric, Region::Asymmetric}) {
    for (int rep = 0; rep < 300; ++rep) {
      auto w = sample_state_in_region(3 + rng.uniform_int(0, 40), reg, rng);
      auto a = analyze(w);
      auto t = ref::angles(vec(w), a.diameter.r, reg == Region::Asymmetric);
      double g = ref::overlap(vec(w), t);
      CHECK(a.overlap.g == Approx(g).epsilon(1e-10));
      CHECK(product_overlap_value(w, a.product) == Approx(a.overlap.g).epsilon(1e-10));
      CHECK(std::abs(direction_cosine_sum(a.product) - 1) < 1e-12);
    }
  }
}

TEST_CASE("overlap bounds on random states") {
  Rng rng(43);
  for (int rep = 0; rep < 2000; ++rep) {
    auto w = sample_state(3 + rng.uniform_int(0, 60), rng);
    auto a = analyze(w);
    double cn2 = w.largest() * w.largest();
    CHECK(a.overlap.g_squared >= cn2 - 1e-12);
    if (a.regions.region != Region::Slight) CHECK(a.overlap.g_squared <= 0.5 + 1e-12);
  }
}

TEST_CASE("mismatched diameter is rejected") {
  auto w = ref::W({1, 1, 1});
  DiameterSolution bogus{Branch::AsymmetricEq, 0.7, 0, 0};
  CHECK_THROWS_AS(overlap_from_diameter(w, bogus), Error);
  DiameterSolution none{Branch::NoDiameter, NAN, 0, 0};
  CHECK_THROWS_AS(overlap_from_diameter(w, none), Error);
  DiameterSolution neg{Branch::SymmetricEq, -1, 0, 0};
  CHECK_THROWS_AS(overlap_from_diameter(w, neg), Error);
}

TEST_CASE("N = 3 pipeline against a derivative-free maximizer") {
  Rng rng(47);
  for (int rep = 0; rep < 40; ++rep) {
    auto w = sample_state(3, rng);
    CHECK(analyze(w).overlap.g == Approx(ref::compass_max(vec(w), 5)).epsilon(1e-9));
  }
}

TEST_CASE("N = 5 pipeline against a derivative-free maximizer") {
  Rng rng(53);
  for (int rep = 0; rep < 8; ++rep) {
    auto w = sample_state(5, rng);
    CHECK(analyze(w).overlap.g == Approx(ref::compass_max(vec(w), 2)).epsilon(1e-9));
  }
}
