#include <doctest.h>

#include <cmath>

#include "netcert/canonical.hpp"
#include "netcert/witness.hpp"
#include "test_helpers.hpp"

using namespace netcert;
using netcert::testing::kPi4;

namespace {

const double kSqrt2 = std::sqrt(2.0);

std::vector<std::string> claim_names(const std::vector<CertificationClaim>& cs) {
  std::vector<std::string> out;
  for (const auto& c : cs) out.push_back(c.claim);
  return out;
}

double component(const WitnessValue& w, const std::string& key) {
  for (const auto& [k, v] : w.components)
    if (k == key) return v;
  FAIL("missing component ", key);
  return 0;
}

}  // namespace

TEST_CASE("family names round-trip") {
  for (Family f : {Family::bilocal_ij, Family::chain_ij, Family::star_ij,
                   Family::linear_b3, Family::linear_bn, Family::star_svetlichny})
    CHECK(family_from_name(family_name(f)) == f);
  CHECK_THROWS_AS(family_from_name("nope"), argument_error);
}

TEST_CASE("bilocal witness reaches sqrt2 with I = J = 1/2") {
  const auto w = eval_bilocal_ij(behavior_of(canonical_bilocal(kPi4, kPi4)));
  CHECK(w.value == doctest::Approx(kSqrt2).epsilon(1e-9));
  CHECK(component(w, "I") == doctest::Approx(0.5).epsilon(1e-9));
  CHECK(component(w, "J") == doctest::Approx(0.5).epsilon(1e-9));
}

TEST_CASE("chain witness at n=5 reaches sqrt2") {
  const std::vector<double> thetas(4, kPi4);
  const auto w = eval_chain_ij(behavior_of(canonical_chain(thetas, ChainVariant::ij)), 5);
  CHECK(w.value == doctest::Approx(kSqrt2).epsilon(1e-9));
  // value = |I|^(1/3) + |J|^(1/3) = sqrt2 at the symmetric point.
  CHECK(std::abs(component(w, "I")) == doctest::Approx(std::pow(2.0, -1.5)).epsilon(1e-9));
  CHECK(std::abs(component(w, "J")) == doctest::Approx(std::pow(2.0, -1.5)).epsilon(1e-9));
}

TEST_CASE("chain witness rejects even n and mismatched scenarios") {
  const auto b = behavior_of(canonical_bilocal(kPi4, kPi4));
  CHECK_THROWS_AS(eval_chain_ij(b, 4), argument_error);
  CHECK_THROWS_AS(eval_chain_ij(b, 5), scenario_mismatch_error);
}

TEST_CASE("three-party linear witness reaches 2 sqrt2") {
  const auto w = eval_linear_b3(behavior_of(canonical_chain({kPi4, kPi4}, ChainVariant::bn)));
  CHECK(w.value == doctest::Approx(2 * kSqrt2).epsilon(1e-9));
}

TEST_CASE("long-chain linear witness reaches 2 sqrt2 at n=4") {
  const auto w = eval_linear_bn(
      behavior_of(canonical_chain({kPi4, kPi4, kPi4}, ChainVariant::bn)), 4);
  CHECK(w.value == doctest::Approx(2 * kSqrt2).epsilon(1e-9));
}

TEST_CASE("star witness at n=3 reaches sqrt2") {
  const auto w = eval_star_ij(behavior_of(canonical_star({kPi4, kPi4, kPi4})), 3);
  CHECK(w.value == doctest::Approx(kSqrt2).epsilon(1e-9));
}

TEST_CASE("svetlichny coefficients match the known small patterns") {
  CHECK(svetlichny_coefficients(1) == std::vector<int>{1, 0});
  // n=2 is the CHSH pattern +,+,+,-.
  CHECK(svetlichny_coefficients(2) == std::vector<int>{1, 1, 1, -1});
  const auto c3 = svetlichny_coefficients(3);
  REQUIRE(c3.size() == 8);
  for (int x = 0; x < 8; ++x) {
    const int w = __builtin_popcount(unsigned(x));
    CHECK(c3[size_t(x)] == ((w / 2) % 2 ? -1 : 1));
  }
}

TEST_CASE("svetlichny star witness reaches the quantum maximum") {
  const auto cond2 = default_conditioning(2);
  const auto w2 = eval_star_svetlichny(
      behavior_of(canonical_star({kPi4, kPi4}, {}, true)), 2, cond2);
  CHECK(w2.value == doctest::Approx(2 * kSqrt2).epsilon(1e-9));
  const auto cond3 = default_conditioning(3);
  const auto w3 = eval_star_svetlichny(
      behavior_of(canonical_star({kPi4, kPi4, kPi4}, {}, true)), 3, cond3);
  CHECK(w3.value == doctest::Approx(4 * kSqrt2).epsilon(1e-9));
}

TEST_CASE("bound closed forms match an independent recomputation") {
  // Bilocal family.
  CHECK(bound_lookup(Family::bilocal_ij, 2, 0, Model::all_classical).threshold == doctest::Approx(1.0));
  CHECK(bound_lookup(Family::bilocal_ij, 2, 1, Model::hybrid_ns).threshold == doctest::Approx(kSqrt2));
  CHECK(bound_lookup(Family::bilocal_ij, 2, 1, Model::hybrid_quantum).threshold ==
        doctest::Approx(std::pow(2.0, 0.25)));
  CHECK(bound_lookup(Family::bilocal_ij, 2, 0, Model::quantum_max).threshold == doctest::Approx(kSqrt2));

  // Odd chains: hybrid_quantum 2^((n-1)/(2(n+1))) once 2l >= n-1, else sqrt2;
  // hybrid_ns 2^(1 - 2|S|/(n+1)).
  for (int n : {3, 5, 7}) {
    for (int l = 1; l < n; ++l) {
      const double got = bound_lookup(Family::chain_ij, n, l, Model::hybrid_quantum).threshold;
      const double expect = (2 * l >= n - 1)
                                ? std::pow(2.0, double(n - 1) / (2.0 * (n + 1)))
                                : kSqrt2;
      CHECK(got == doctest::Approx(expect).epsilon(1e-12));
    }
    for (int s = 0; s <= (n + 1) / 2; ++s)
      CHECK(bound_lookup(Family::chain_ij, n, s, Model::hybrid_ns).threshold ==
            doctest::Approx(std::pow(2.0, 1.0 - 2.0 * s / (n + 1))).epsilon(1e-12));
  }

  // Even chains delegate to n-1 with one fewer classical source.
  CHECK(bound_lookup(Family::chain_ij, 6, 3, Model::hybrid_quantum).threshold ==
        doctest::Approx(bound_lookup(Family::chain_ij, 5, 2, Model::hybrid_quantum).threshold));

  // Stars: hybrid_ns 2^((n-l)/n), hybrid_quantum 2^((n-l)/(2n)).
  for (int n : {2, 3, 5}) {
    for (int l = 1; l <= n; ++l) {
      CHECK(bound_lookup(Family::star_ij, n, l, Model::hybrid_ns).threshold ==
            doctest::Approx(std::pow(2.0, double(n - l) / n)).epsilon(1e-12));
      CHECK(bound_lookup(Family::star_ij, n, l, Model::hybrid_quantum).threshold ==
            doctest::Approx(std::pow(2.0, double(n - l) / (2.0 * n))).epsilon(1e-12));
    }
  }

  // Linear witnesses: classical/no-signaling-hybrid/quantum-hybrid all 2 (or
  // 2^(n-1)), quantum maximum sqrt2 times that.
  for (Model m : {Model::all_classical, Model::hybrid_ns, Model::hybrid_quantum}) {
    CHECK(bound_lookup(Family::linear_b3, 3, 1, m).threshold == doctest::Approx(2.0));
    CHECK(bound_lookup(Family::star_svetlichny, 4, 1, m).threshold == doctest::Approx(8.0));
  }
  CHECK(bound_lookup(Family::linear_bn, 5, 0, Model::quantum_max).threshold ==
        doctest::Approx(2 * kSqrt2));
  CHECK(bound_lookup(Family::star_svetlichny, 3, 0, Model::quantum_max).threshold ==
        doctest::Approx(4 * kSqrt2));
}

TEST_CASE("hybrid-quantum thresholds never loosen as more sources turn classical") {
  for (Family f : {Family::chain_ij, Family::star_ij}) {
    for (int n = 2; n <= 7; ++n) {
      if (f == Family::chain_ij && n < 3) continue;
      double prev = -1;
      for (const auto& row : bound_table(f, n)) {
        if (row.model != Model::hybrid_quantum) continue;
        if (prev >= 0) CHECK(row.threshold <= prev + 1e-12);
        prev = row.threshold;
      }
      CHECK(prev > 0);  // the table listed at least one hybrid-quantum row
    }
  }
}

TEST_CASE("minimum isolated odd parties for a classical-source count") {
  // n=5: sources 1..4; with l classical the adversary can hide at most
  // n-1-l of them, leaving |S| >= max(0, 3 - (4 - l)) isolated odd parties.
  CHECK(min_isolated_parties(5, 4) == 3);
  CHECK(min_isolated_parties(5, 3) == 2);
  CHECK(min_isolated_parties(5, 1) == 0);
  CHECK(min_isolated_parties(7, 6) == 4);
}

TEST_CASE("certification claims for the standard values") {
  // Bilocal at sqrt2: network nonlocality plus the one-classical-source
  // quantum claim, but no no-signaling-hybrid claim (threshold is sqrt2).
  const auto bl = certify(WitnessValue{Family::bilocal_ij, 2, kSqrt2, {}});
  CHECK(claim_names(bl) == std::vector<std::string>{"NN", "FQNN"});
  CHECK(certify(WitnessValue{Family::bilocal_ij, 2, 0.9, {}}).empty());
  // Exactly at a threshold: strict exceedance, no claim.
  CHECK(certify(WitnessValue{Family::linear_b3, 3, 2.0, {}}).empty());
  const auto b3 = certify(WitnessValue{Family::linear_b3, 3, 2.5, {}});
  CHECK(claim_names(b3) == std::vector<std::string>{"NN", "FNN", "FQNN"});
  // Chain n=5 at sqrt2: quantum claims from ceil(n/2)+... l > n/2 only.
  const auto c5 = certify(WitnessValue{Family::chain_ij, 5, kSqrt2, {}});
  CHECK(claim_names(c5) == std::vector<std::string>{"NN", "l-NN", "l-QNN", "l-QNN"});
  CHECK(c5[0].level == 4);
  CHECK(c5[1].level == 4);
  CHECK(c5[2].level == 3);
  CHECK(c5[3].level == 4);
  // Star n=3 at sqrt2.
  const auto s3 = certify(WitnessValue{Family::star_ij, 3, kSqrt2, {}});
  CHECK(claim_names(s3) == std::vector<std::string>{"NN", "l-NN", "l-NN", "FQNN",
                                                    "l-QNN", "l-QNN"});
  for (const auto& c : s3) CHECK(c.margin > 0);
}

TEST_CASE("every emitted claim has a strictly positive margin") {
  for (double v : {0.5, 1.0, 1.2, 1.4142, 1.5, 2.0}) {
    for (Family f : {Family::bilocal_ij, Family::chain_ij, Family::star_ij}) {
      const int n = (f == Family::bilocal_ij) ? 2 : (f == Family::chain_ij ? 5 : 3);
      for (const auto& c : certify(WitnessValue{f, n, v, {}})) {
        CHECK(c.margin > 0);
        CHECK(v - c.threshold == doctest::Approx(c.margin));
      }
    }
  }
}

TEST_CASE("even-chain certification lifts sub-claims from both marginals") {
  const Behavior b = netcert::testing::both_marginals_maximal_chain4();
  const auto claims = certify_chain_even(b, 4);
  CHECK(claim_names(claims) == std::vector<std::string>{"NN", "l-NN", "l-QNN"});
  for (const auto& c : claims) {
    CHECK(c.level == 3);  // lifted from level 2 on the 3-party marginals
    CHECK(c.margin > 0);
  }
  // If one side stops violating, the intersection is empty: white noise on
  // one endpoint's input slice is enough.
  Behavior half = b;
  for (int x = 0; x < 16; ++x) {
    if (((x >> 3) & 1) != 0) continue;  // spoil only the x1 = 0 slice
    for (int a = 0; a < 16; ++a) half.table[size_t(x) * 16 + size_t(a)] = 1.0 / 16;
  }
  CHECK(certify_chain_even(half, 4).empty());
}

TEST_CASE("classical oracles reach the classical bounds") {
  CHECK(brute_force_classical_max(Family::bilocal_ij, 2, 2, 9) ==
        doctest::Approx(1.0).epsilon(1e-6));
  CHECK(brute_force_classical_max(Family::linear_b3, 3, 2, 1) == doctest::Approx(2.0));
  CHECK(brute_force_classical_max(Family::linear_bn, 4, 2, 1) == doctest::Approx(2.0));
  CHECK(brute_force_classical_max(Family::star_svetlichny, 3, 2, 1) == doctest::Approx(4.0));
}

TEST_CASE("oversized enumerations raise a resource error with a partial result") {
  CHECK_THROWS_AS(brute_force_classical_max(Family::chain_ij, 5, 2, 3), resource_error);
  try {
    brute_force_classical_max(Family::chain_ij, 5, 2, 3);
  } catch (const resource_error& e) {
    CHECK(e.partial_maximum == doctest::Approx(1.0));
  }
}
