#pragma once

#include <string>
#include <vector>

#include "netcert/config.hpp"

namespace netcert {

// Parties, sources, and the source -> party incidence map.  Sources list the
// parties they feed in order; for bipartite sources the first listed party
// owns the most significant qubit position of the source state.
struct NetworkTopology {
  std::vector<std::string> parties;
  std::vector<std::vector<std::string>> sources;
};

void validate(const NetworkTopology& t);

int party_index(const NetworkTopology& t, const std::string& name);
int party_degree(const NetworkTopology& t, const std::string& name);

enum class TopologyKind { chain, star };

// chain(n): parties A1..An, bipartite sources (Ai, Ai+1).
// star(n):  branch parties A1..An plus central party B, sources (Ai, B).
NetworkTopology make_topology(TopologyKind kind, int n);

enum class SubnetworkKind { chain, star };

struct Subnetwork {
  SubnetworkKind kind;
  NetworkTopology topology;
  std::vector<int> source_indices;  // positions in the parent source list
};

struct SubnetworkCover {
  std::vector<Subnetwork> subnetworks;
};

// Covers every source of a connected bipartite-source topology with chain and
// star subnetworks: parties of hypergraph degree >= 3 become star centers
// over their incident sources; maximal runs of degree-<=2 parties (extended
// to the adjacent hubs) become chains; a pure cycle is cut at two edges into
// two overlapping chains.
SubnetworkCover decompose_into_chains_and_stars(const NetworkTopology& topology);

}  // namespace netcert
