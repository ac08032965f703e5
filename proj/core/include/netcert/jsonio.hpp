#pragma once

#include <string>

#include "netcert/behavior.hpp"
#include "netcert/network.hpp"
#include "netcert/report.hpp"

namespace netcert {

// Locale-independent decimal rendering with 17 significant digits; the
// serializers below all use it so identical inputs give identical bytes.
std::string format_double(double v);

// Topology JSON: {"parties":[...], "sources":[["A","B"],...]}.
NetworkTopology parse_topology(const std::string& text);
std::string topology_to_json(const NetworkTopology& t);

// Behavior JSON: {"scenario":{"parties":[{"name","inputs","outputs"},...]},
// "probabilities":[flat row-major, inputs outermost]}.
Behavior parse_behavior(const std::string& text);
std::string behavior_to_json(const Behavior& b);

// Strategy JSON: {"topology":{...},"sources":[{"kind":"epr","theta":t,
// "visibility":v} | {"kind":"classical"},...]}.
struct NetworkStrategySpec {
  NetworkTopology topology;
  std::vector<NetworkSourceSpec> sources;
};
NetworkStrategySpec parse_network_strategy(const std::string& text);

std::string witness_report_to_json(const WitnessReport& r, double tol);
std::string cover_to_json(const NetworkTopology& parent, const SubnetworkCover& c);
std::string network_report_to_json(const NetworkReport& r);

}  // namespace netcert
