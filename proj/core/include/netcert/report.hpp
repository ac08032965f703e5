#pragma once

#include <string>
#include <vector>

#include "netcert/canonical.hpp"
#include "netcert/network.hpp"
#include "netcert/witness.hpp"

namespace netcert {

inline constexpr const char* kToolVersion = "0.1.0";

struct WitnessReport {
  WitnessValue witness;
  std::vector<BoundSpec> bounds;
  std::vector<CertificationClaim> claims;
  std::vector<std::string> warnings;
};

WitnessReport make_witness_report(const WitnessValue& w,
                                  std::vector<std::string> warnings = {});

// How a network source is prepared for whole-network certification.
struct NetworkSourceSpec {
  bool classical = false;  // classical sources enter as theta = 0 products
  double theta = 0.78539816339744831;
  double visibility = 1.0;
};

struct SubnetworkReport {
  Subnetwork subnetwork;
  WitnessReport report;
};

struct NetworkReport {
  NetworkTopology topology;
  SubnetworkCover cover;
  std::vector<SubnetworkReport> subnetworks;
  // Claim names present in every subnetwork report (NN / FNN / FQNN).
  std::vector<std::string> overall_claims;
  double tolerance = 0;
  std::string version = kToolVersion;
};

// Decomposes the topology, simulates the canonical strategy of each
// subnetwork (stars: nonlinear star witness; chains: the linear chain
// witness; single-source chains: the one-branch star witness), certifies
// each, and intersects the resulting claims.
NetworkReport certify_network(const NetworkTopology& topology,
                              const std::vector<NetworkSourceSpec>& sources);

}  // namespace netcert
