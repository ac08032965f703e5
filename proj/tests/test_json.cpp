#include <doctest.h>

#include <cmath>

#include "netcert/canonical.hpp"
#include "netcert/jsonio.hpp"
#include "netcert/report.hpp"
#include "test_helpers.hpp"

using namespace netcert;
using netcert::testing::kPi4;

TEST_CASE("float formatting survives a parse round trip") {
  for (double v : {0.1, 1.0, -3.5e-12, 0.3333333333333333, 2.0 / 3.0,
                   1.4142135623730951, 1e17, -0.0}) {
    const std::string s = format_double(v);
    CHECK(std::stod(s) == v);
  }
  CHECK(format_double(1.0) == "1");
  CHECK(format_double(0.5) == "0.5");
}

TEST_CASE("topology json round trip") {
  const auto t = netcert::testing::example_two_hub_topology();
  const std::string j = topology_to_json(t);
  const auto back = parse_topology(j);
  CHECK(back.parties == t.parties);
  CHECK(back.sources == t.sources);
  // Serialization is stable byte-for-byte.
  CHECK(topology_to_json(back) == j);
}

TEST_CASE("behavior json round trip preserves every probability") {
  const auto b = behavior_of(canonical_bilocal(0.5, 0.7));
  const std::string j = behavior_to_json(b);
  const auto back = parse_behavior(j);
  REQUIRE(back.scenario == b.scenario);
  REQUIRE(back.table.size() == b.table.size());
  for (size_t i = 0; i < b.table.size(); ++i) CHECK(back.table[i] == b.table[i]);
  CHECK(behavior_to_json(back) == j);
}

TEST_CASE("malformed documents raise schema errors") {
  CHECK_THROWS_AS(parse_topology("not json"), schema_error);
  CHECK_THROWS_AS(parse_topology("{\"parties\":[\"A\"]}"), schema_error);
  CHECK_THROWS_AS(parse_topology("{\"parties\":[\"A\"],\"sources\":[[\"A\",\"B\"]]}"),
                  schema_error);
  CHECK_THROWS_AS(parse_behavior("{}"), schema_error);
  CHECK_THROWS_AS(parse_behavior(
                      "{\"scenario\":{\"parties\":[{\"name\":\"A\",\"inputs\":2,"
                      "\"outputs\":2}]},\"probabilities\":[1,0]}"),
                  schema_error);  // wrong table length
  CHECK_THROWS_AS(parse_behavior(
                      "{\"scenario\":{\"parties\":[{\"name\":\"A\",\"inputs\":1,"
                      "\"outputs\":2}]},\"probabilities\":[2,-1]}"),
                  schema_error);  // not a distribution
  CHECK_THROWS_AS(parse_network_strategy("{\"topology\":{}}"), schema_error);
  CHECK_THROWS_AS(
      parse_network_strategy(
          "{\"topology\":{\"parties\":[\"A\",\"B\"],\"sources\":[[\"A\",\"B\"]]},"
          "\"sources\":[{\"kind\":\"telepathy\"}]}"),
      schema_error);
}

TEST_CASE("network strategy documents parse both source kinds") {
  const auto spec = parse_network_strategy(
      "{\"topology\":{\"parties\":[\"A\",\"B\",\"C\"],"
      "\"sources\":[[\"A\",\"B\"],[\"B\",\"C\"]]},"
      "\"sources\":[{\"kind\":\"epr\",\"theta\":0.5,\"visibility\":0.9},"
      "{\"kind\":\"classical\"}]}");
  REQUIRE(spec.sources.size() == 2);
  CHECK(!spec.sources[0].classical);
  CHECK(spec.sources[0].theta == doctest::Approx(0.5));
  CHECK(spec.sources[0].visibility == doctest::Approx(0.9));
  CHECK(spec.sources[1].classical);
}

TEST_CASE("witness reports serialize deterministically with fixed field order") {
  const auto w = eval_bilocal_ij(behavior_of(canonical_bilocal(kPi4, kPi4)));
  const auto r = make_witness_report(w);
  const std::string j1 = witness_report_to_json(r, 1e-9);
  const std::string j2 = witness_report_to_json(r, 1e-9);
  CHECK(j1 == j2);
  CHECK(j1.find("\"family\":\"bilocal_ij\"") != std::string::npos);
  CHECK(j1.find("\"claims\":[") != std::string::npos);
  // Field order is family, n, value, components, bounds, claims, tolerance.
  CHECK(j1.find("\"family\"") < j1.find("\"n\""));
  CHECK(j1.find("\"n\"") < j1.find("\"value\""));
  CHECK(j1.find("\"value\"") < j1.find("\"components\""));
  CHECK(j1.find("\"components\"") < j1.find("\"bounds\""));
  CHECK(j1.find("\"bounds\"") < j1.find("\"claims\""));
  CHECK(j1.find("\"claims\"") < j1.find("\"tolerance\""));
}

TEST_CASE("network reports include cover, subnetworks, and overall claims") {
  const auto t = make_topology(TopologyKind::chain, 3);
  const auto rep = certify_network(t, {NetworkSourceSpec{}, NetworkSourceSpec{}});
  const std::string j = network_report_to_json(rep);
  CHECK(j.find("\"overall_claims\"") != std::string::npos);
  CHECK(j.find("\"subnetworks\"") != std::string::npos);
  CHECK(j.find("\"version\":\"" + std::string(kToolVersion) + "\"") != std::string::npos);
  CHECK(network_report_to_json(rep) == j);
}
