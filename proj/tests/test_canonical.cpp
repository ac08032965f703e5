#include <doctest.h>

#include <cmath>

#include "netcert/canonical.hpp"
#include "netcert/witness.hpp"
#include "test_helpers.hpp"

using namespace netcert;
using netcert::testing::kPi;
using netcert::testing::kPi4;

namespace {

const double kSqrt2 = std::sqrt(2.0);

}  // namespace

TEST_CASE("golden-section maximization finds interior maxima") {
  const double x = golden_section_maximize(0.0, kPi, [](double t) { return std::sin(t); });
  CHECK(x == doctest::Approx(kPi / 2).epsilon(1e-8));
  const double y = golden_section_maximize(-1.0, 2.0, [](double t) { return -(t - 0.3) * (t - 0.3); });
  CHECK(y == doctest::Approx(0.3).epsilon(1e-8));
}

TEST_CASE("bilocal closed form matches simulation across a theta grid") {
  for (double t1 = 0.15; t1 < kPi / 2; t1 += 0.2)
    for (double t2 = 0.15; t2 < kPi / 2; t2 += 0.2) {
      const auto cs = canonical_bilocal(t1, t2);
      const auto w = eval_bilocal_ij(behavior_of(cs));
      const double s = std::sin(2 * t1) * std::sin(2 * t2);
      CHECK(cs.predicted_value == doctest::Approx(std::sqrt(1 + s)).epsilon(1e-12));
      CHECK(w.value == doctest::Approx(cs.predicted_value).epsilon(1e-9));
    }
}

TEST_CASE("optimal measurement angle for the bilocal witness") {
  // tan(vartheta) = sqrt(s); at s = sqrt2 - 1 this gives cos(vartheta) = 2^(-1/4).
  const double s = kSqrt2 - 1.0;
  const double theta = 0.5 * std::asin(std::sqrt(s));
  const double vt = optimal_vartheta(Family::bilocal_ij, {theta, theta});
  CHECK(std::tan(vt) == doctest::Approx(std::sqrt(s)).epsilon(1e-10));
  CHECK(std::cos(vt) == doctest::Approx(std::pow(2.0, -0.25)).epsilon(1e-10));
  // And the maximum value there is sqrt(1+s) = 2^(1/4).
  const auto cs = canonical_bilocal(theta, theta);
  CHECK(cs.predicted_value == doctest::Approx(std::pow(2.0, 0.25)).epsilon(1e-10));
}

TEST_CASE("an explicitly suboptimal measurement angle lowers the value") {
  const auto best = canonical_bilocal(0.5, 0.6);
  const auto off = canonical_bilocal(0.5, 0.6, 0.2);
  CHECK(eval_bilocal_ij(behavior_of(off)).value <
        eval_bilocal_ij(behavior_of(best)).value);
  CHECK(eval_bilocal_ij(behavior_of(off)).value ==
        doctest::Approx(off.predicted_value).epsilon(1e-9));
}

TEST_CASE("chain closed form matches simulation at n=5") {
  // Only sources {1, 2, 4} enter the product: the interior odd party routes
  // its source-3 qubit through z(x)z, so that angle drops out.
  const std::vector<double> grid = {0.35, kPi4, 1.1};
  for (double a : grid)
    for (double b : grid)
      for (double c : grid) {
        const std::vector<double> thetas = {a, b, c, kPi4};
        const auto cs = canonical_chain(thetas, ChainVariant::ij);
        const double p = std::sin(2 * a) * std::sin(2 * b);
        const double q = std::pow(p, 2.0 / 6.0);
        CHECK(cs.predicted_value == doctest::Approx(std::sqrt(1 + q * q)).epsilon(1e-10));
        const auto w = eval_chain_ij(behavior_of(cs), 5);
        CHECK(w.value == doctest::Approx(cs.predicted_value).epsilon(1e-9));
      }
}

TEST_CASE("three-party linear closed form matches simulation on a theta grid") {
  for (double t1 = 0.2; t1 < kPi / 2; t1 += 0.25)
    for (double t2 = 0.2; t2 < kPi / 2; t2 += 0.25) {
      const auto cs = canonical_chain({t1, t2}, ChainVariant::bn);
      const double s = std::sin(2 * t1) * std::sin(2 * t2);
      CHECK(cs.predicted_value == doctest::Approx(2 * std::sqrt(1 + s * s)).epsilon(1e-10));
      const auto w = eval_linear_b3(behavior_of(cs));
      CHECK(w.value == doctest::Approx(cs.predicted_value).epsilon(1e-9));
    }
}

TEST_CASE("long-chain linear strategy matches its prediction at n=4 and n=5") {
  for (int n : {4, 5}) {
    const std::vector<double> thetas(size_t(n - 1), 0.6);
    const auto cs = canonical_chain(thetas, ChainVariant::bn);
    const auto w = eval_linear_bn(behavior_of(cs), n);
    CHECK(w.value == doctest::Approx(cs.predicted_value).epsilon(1e-9));
    CHECK(cs.predicted_value > 2.0);  // still violating at theta = 0.6
  }
  // Maximal entanglement gives the quantum maximum.
  const auto max4 = canonical_chain({kPi4, kPi4, kPi4}, ChainVariant::bn);
  CHECK(max4.predicted_value == doctest::Approx(2 * kSqrt2).epsilon(1e-10));
}

TEST_CASE("star closed form matches simulation at n=3") {
  const std::vector<double> grid = {0.3, kPi4, 1.2};
  for (double a : grid)
    for (double b : grid) {
      const std::vector<double> thetas = {a, b, kPi4};
      const auto cs = canonical_star(thetas);
      double p = 1;
      for (double t : thetas) p *= std::sin(2 * t);
      const double r = std::pow(p, 1.0 / 3.0);
      CHECK(cs.predicted_value == doctest::Approx(std::sqrt(1 + r * r)).epsilon(1e-10));
      const auto w = eval_star_ij(behavior_of(cs), 3);
      CHECK(w.value == doctest::Approx(cs.predicted_value).epsilon(1e-9));
    }
}

TEST_CASE("svetlichny star strategy matches its prediction for partial entanglement") {
  for (double t : {0.4, kPi4}) {
    const auto cs = canonical_star({t, t, t}, {}, true);
    const double p = std::pow(std::sin(2 * t), 3.0);
    CHECK(cs.predicted_value == doctest::Approx(4 * kSqrt2 * p).epsilon(1e-9));
    const auto w = eval_star_svetlichny(behavior_of(cs), 3, default_conditioning(3));
    CHECK(w.value == doctest::Approx(cs.predicted_value).epsilon(1e-9));
  }
}

TEST_CASE("visibility scales the witness value monotonically") {
  double prev = -1;
  for (double v : {0.2, 0.5, 0.8, 1.0}) {
    const auto cs = canonical_star({kPi4, kPi4, kPi4}, {}, false, {v, v, v});
    const auto w = eval_star_ij(behavior_of(cs), 3);
    CHECK(w.value == doctest::Approx(cs.predicted_value).epsilon(1e-9));
    CHECK(w.value > prev);
    prev = w.value;
  }
  // Closed form: sqrt2 * v at equal visibilities and maximal entanglement.
  const auto cs = canonical_star({kPi4, kPi4, kPi4}, {}, false, {0.9, 0.9, 0.9});
  CHECK(cs.predicted_value == doctest::Approx(kSqrt2 * 0.9).epsilon(1e-10));
}

TEST_CASE("pr-box chains saturate the no-signaling-hybrid chain bound") {
  // n=5 with one classical source: bound 2^(1 - 2/(n+1)) = 2^(2/3).
  const auto b5 = behavior_from_pr_chain(5, {1});
  CHECK(eval_chain_ij(b5, 5).value == doctest::Approx(std::pow(2.0, 2.0 / 3.0)).epsilon(1e-9));
  // n=3 with one classical source: 2^(1/2).
  const auto b3 = behavior_from_pr_chain(3, {1});
  CHECK(eval_chain_ij(b3, 3).value == doctest::Approx(kSqrt2).epsilon(1e-9));
  // The bound depends on how many odd parties are isolated, not on the raw
  // classical count: {1,3} isolates only party 1 (party 3 still holds a PR
  // box), while {1,4} isolates parties 1 and 5.
  const auto b52 = behavior_from_pr_chain(5, {1, 3});
  CHECK(eval_chain_ij(b52, 5).value == doctest::Approx(std::pow(2.0, 2.0 / 3.0)).epsilon(1e-9));
  const auto b53 = behavior_from_pr_chain(5, {1, 4});
  CHECK(eval_chain_ij(b53, 5).value == doctest::Approx(std::pow(2.0, 1.0 / 3.0)).epsilon(1e-9));
  // All classical: the classical bound 1.
  const auto ball = behavior_from_pr_chain(5, {1, 2, 3, 4});
  CHECK(eval_chain_ij(ball, 5).value == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("canonical constructors validate their arguments") {
  CHECK_THROWS_AS(canonical_chain({kPi4, kPi4, kPi4}, ChainVariant::ij), argument_error);
  CHECK_THROWS_AS(canonical_chain({}, ChainVariant::bn), argument_error);
  CHECK_THROWS_AS(canonical_star({}), argument_error);
  CHECK_THROWS_AS(pr_chain_strategy(5, {0}), argument_error);
  CHECK_THROWS_AS(pr_chain_strategy(5, {5}), argument_error);
}

TEST_CASE("canonical strategies stay below the quantum maximum everywhere") {
  for (double t1 = 0.1; t1 < kPi / 2; t1 += 0.3)
    for (double t2 = 0.1; t2 < kPi / 2; t2 += 0.3)
      for (double vt = 0.1; vt < kPi / 2; vt += 0.3) {
        const auto w = eval_bilocal_ij(behavior_of(canonical_bilocal(t1, t2, vt)));
        CHECK(w.value <= kSqrt2 + 1e-9);
      }
}
