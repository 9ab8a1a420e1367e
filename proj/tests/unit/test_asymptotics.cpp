#include <cmath>
#include <vector>

#include "doctest.h"
#include "reference.hpp"
#include "wdiam/analysis.hpp"
#include "wdiam/asymptotics.hpp"
#include "wdiam/campaign.hpp"
#include "wdiam/error.hpp"
#include "wdiam/families.hpp"
#include "wdiam/regions.hpp"

using namespace wdiam;
using doctest::Approx;

namespace {
Errc code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return Errc::InvalidConfig;
}
}  // namespace

TEST_CASE("three-qubit closed form") {
  double s = 1 / std::sqrt(3.0);
  CHECK(g_three_qubit(s, s, s) == Approx(2.0 / 3).epsilon(1e-15));
  double a = std::sqrt(0.2);
  CHECK(g_three_qubit(a, a, std::sqrt(0.6)) == Approx(std::sqrt(0.6)).epsilon(1e-15));
  CHECK(g_three_qubit(0.6, 0.8, 0.0) == Approx(0.8));
  CHECK(code_of([] { g_three_qubit(-0.1, 0.5, 0.5); }) == Errc::OutOfDomain);
}

TEST_CASE("three-qubit closed form is order independent and matches the pipeline") {
  Rng rng(61);
  for (int rep = 0; rep < 2000; ++rep) {
    auto w = sample_state(3, rng);
    double a = w.coeff(0), b = w.coeff(1), c = w.coeff(2);
    double g = g_three_qubit(a, b, c);
    CHECK(g == Approx(g_three_qubit(c, a, b)).epsilon(1e-15));
    CHECK(g == Approx(analyze(w).overlap.g).epsilon(1e-10));
  }
}

TEST_CASE("two-parameter radical formula matches the solver") {
  for (auto [m, k] : std::vector<std::pair<int, int>>{{10, 10}, {12, 18}, {30, 30}, {2, 5}}) {
    for (double th : {0.05, 0.3, M_PI / 4, 1.0, 1.5}) {
      TwoParamFamily f{m, k, th};
      auto w = f.state();
      CHECK(r_two_param(f) == Approx(analyze(w).diameter.r).epsilon(1e-12));
      CHECK(two_param_discriminant(f) >= 0);
    }
  }
}

TEST_CASE("two-parameter family at theta = 0 reduces to equal coefficients") {
  TwoParamFamily f{10, 10, 0.0};
  double r = r_two_param(f);
  CHECK(r * r == Approx(10.0 / (4 * 9)).epsilon(1e-13));
}

TEST_CASE("two-parameter m = k = 30 stays within O(1/30) of 1/4") {
  double worst = 0;
  for (int i = 0; i <= 100; ++i) {
    double th = (M_PI / 2) * i / 100.0;
    double r = r_two_param({30, 30, th});
    worst = std::max(worst, std::abs(r * r - 0.25));
  }
  CHECK(worst < 1.0 / 30);
}

TEST_CASE("two-parameter domain errors") {
  CHECK(code_of([] { r_two_param({1, 10, 0.5}); }) == Errc::OutOfDomain);
  CHECK(code_of([] { r_two_param({10, 1, 0.5}); }) == Errc::OutOfDomain);
  CHECK(code_of([] { r_two_param({0, 10, 0.5}); }) == Errc::OutOfDomain);
}

TEST_CASE("symmetric large-N estimate") {
  TwoParamFamily f{30, 30, M_PI / 4};
  auto w = f.state();
  CHECK(g2_symmetric_limit(w) == Approx(std::exp(-1.0)).epsilon(1e-12));
  CHECK(std::abs(analyze(w).overlap.g_squared - std::exp(-1.0)) <= 0.02);
  double gap30 = std::abs(analyze(w).overlap.g_squared - std::exp(-1.0));
  double gap10 = std::abs(analyze(TwoParamFamily{10, 10, M_PI / 4}.state()).overlap.g_squared -
                          std::exp(-1.0));
  CHECK(gap10 > gap30);
  std::vector<double> v(9, std::sqrt(0.4 / 9));
  v.push_back(std::sqrt(0.6));
  CHECK(code_of([&] { g2_symmetric_limit(WState::make(v)); }) == Errc::OutOfDomain);
}

TEST_CASE("asymmetric closed forms") {
  CHECK(r_asymmetric_closed(std::sqrt(1.0 / 3)) * r_asymmetric_closed(std::sqrt(1.0 / 3)) ==
        Approx(1.0 / 3).epsilon(1e-14));
  CHECK(r_asymmetric_closed(0.0) == Approx(0.5));
  CHECK(r_asymmetric_closed(std::sqrt(0.5 - 1e-12)) > 1e5);
  CHECK(code_of([] { r_asymmetric_closed(std::sqrt(0.5)); }) == Errc::OutOfDomain);
  CHECK(g2_asymmetric_closed(std::sqrt(0.5)) == Approx(0.5).epsilon(1e-15));
  CHECK(g2_asymmetric_closed(std::sqrt(0.4)) == Approx(0.6 * std::exp(-1.0 / 3)).epsilon(1e-14));
  CHECK(g2_asymmetric_closed(std::sqrt(1.0 / 3)) ==
        Approx(2.0 / 3 * std::exp(-0.5)).epsilon(1e-14));
  CHECK(code_of([] { g2_asymmetric_closed(0.8); }) == Errc::OutOfDomain);
}

TEST_CASE("asymmetric closed forms against the solver at large N") {
  std::vector<double> v(399, std::sqrt(0.6 / 399));
  v.push_back(std::sqrt(0.4));
  auto a = analyze(WState::make(v));
  CHECK(a.diameter.r == Approx(r_asymmetric_closed(std::sqrt(0.4))).epsilon(5e-3));
  CHECK(a.overlap.g_squared == Approx(g2_asymmetric_closed(std::sqrt(0.4))).epsilon(5e-3));
}

TEST_CASE("interpolating formula") {
  CHECK(g2_interpolating(-0.5) == Approx(0.75).epsilon(1e-15));
  CHECK(g2_interpolating(0.0) == Approx(0.5).epsilon(1e-15));
  CHECK(g2_interpolating(-1e-12) == Approx(g2_interpolating(1e-12)).epsilon(1e-11));
  CHECK(g2_interpolating(0.2) == Approx(0.6 * std::exp(-0.4 / 1.2)).epsilon(1e-14));
  CHECK(g2_interpolating(-1.0) == Approx(1.0));
  CHECK(code_of([] { g2_interpolating(1.0 / 3); }) == Errc::OutOfDomain);
  CHECK(code_of([] { g2_interpolating(-1.5); }) == Errc::OutOfDomain);
}

TEST_CASE("interpolating formula equals the asymmetric closed form through b_z = 1 - 2c^2") {
  for (int i = 0; i < 100; ++i) {
    double c2 = 1.0 / 3 + (0.5 - 1.0 / 3) * (i + 0.5) / 100;
    CHECK(g2_interpolating(bloch_z(std::sqrt(c2))) ==
          Approx(g2_asymmetric_closed(std::sqrt(c2))).epsilon(1e-13));
  }
}

TEST_CASE("interpolating formula lower branch is the slight overlap") {
  Rng rng(67);
  for (int rep = 0; rep < 200; ++rep) {
    auto w = sample_state_in_region(3 + rng.uniform_int(0, 30), Region::Slight, rng);
    double bz = bloch_report(w).bz[bloch_report(w).min_bz_index];
    CHECK(g2_interpolating(bz) == Approx(analyze(w).overlap.g_squared).epsilon(1e-13));
  }
}

TEST_CASE("first critical estimate") {
  CHECK(r1_large_n_estimate(19) == Approx(1 / std::sqrt(3.0)));
  CHECK(std::abs(first_critical(ref::W({1, 1, 1})) - r1_large_n_estimate(3)) > 0.05);
  CHECK(code_of([] { r1_large_n_estimate(2); }) == Errc::OutOfDomain);
}

TEST_CASE("nineteen-qubit crossings") {
  families::NineteenQubit q;
  double c = q.c_crossing();
  CHECK(c == Approx(0.606).epsilon(1e-2));
  CHECK(first_critical(q.state(c), q.c_index) == Approx(c).epsilon(1e-10));
  double cd = q.d_crossing();
  auto w = q.state(cd);
  CHECK(first_critical(w, q.d_index) == Approx(w.coeff(q.d_index)).epsilon(1e-10));
}
