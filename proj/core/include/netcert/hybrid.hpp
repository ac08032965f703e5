#pragma once

#include <set>
#include <variant>
#include <vector>

#include "netcert/behavior.hpp"
#include "netcert/network.hpp"
#include "netcert/quantum.hpp"

namespace netcert {

// ---------------------------------------------------------------------------
// Per-source descriptors.  A quantum source carries one qubit per fed party
// (in the source's party order).  A classical source carries a symbol drawn
// from a finite alphabet with the given priors.  A PR-box source is the
// extremal no-signaling bipartite box a XOR b = x*y.
// ---------------------------------------------------------------------------

struct ClassicalSource {
  std::vector<double> priors;  // normalized, alphabet = priors.size()
};

struct PRBoxSource {};

using SourceDesc = std::variant<PureState, MixedState, ClassicalSource, PRBoxSource>;

// ---------------------------------------------------------------------------
// Per-party descriptors.  The symbol index packs the symbols of the party's
// incident classical sources (in source order) as a mixed-radix number.
// ---------------------------------------------------------------------------

// Quantum party: one measurement per (input, symbol); outcome labels give the
// party output.  table index = input * num_symbol_combos + symbol.
struct QuantumResponse {
  int num_inputs = 1;
  int num_outputs = 2;
  std::vector<ProjectiveMeasurement> table;
};

// Classical party: output = table[input * num_symbol_combos + symbol].
struct DeterministicResponse {
  int num_inputs = 1;
  int num_outputs = 2;
  std::vector<int> table;
};

// PR-box end: the party outputs the box bit of the designated source and
// feeds its own input to that box.  Inputs of both fed parties drive the box.
struct BoxResponse {
  int num_inputs = 2;
  int source = -1;  // index into topology.sources
};

using PartyDesc = std::variant<QuantumResponse, DeterministicResponse, BoxResponse>;

struct HybridStrategy {
  NetworkTopology topology;
  std::vector<SourceDesc> sources;  // parallel to topology.sources
  std::vector<PartyDesc> parties;   // parallel to topology.parties
};

// Born-rule behavior of an all-quantum strategy: one measurement per input
// for every party, acting on exactly the qubits the party receives (source
// order; the first-listed party of a source owns its most significant qubit).
Behavior behavior_from_quantum(
    const NetworkTopology& topology,
    const std::vector<SourceDesc>& states,  // PureState or MixedState only
    const std::vector<std::vector<ProjectiveMeasurement>>& measurements);

// General mixed classical / quantum / PR-box evaluation, averaging over
// classical priors and box randomness.
Behavior behavior_from_hybrid(const HybridStrategy& strategy);

// Chain of n parties where the sources listed in classical_positions
// (1-based) carry a uniform binary symbol and the rest are PR boxes wired to
// saturate the chain no-signaling hybrid bound.
Behavior behavior_from_pr_chain(int n, const std::set<int>& classical_positions);

}  // namespace netcert
