#pragma once

#include <string>
#include <vector>

#include "netcert/config.hpp"

namespace netcert {

struct PartySpec {
  std::string name;
  int num_inputs = 1;
  int num_outputs = 2;

  bool operator==(const PartySpec&) const = default;
};

struct Scenario {
  std::vector<PartySpec> parties;

  int num_parties() const { return int(parties.size()); }
  long input_tuples() const;
  long output_tuples() const;
  bool operator==(const Scenario&) const = default;
};

void validate(const Scenario& s);

// Dense conditional probability table P(a|x).  Flat row-major layout with
// inputs outermost: index = x_index * output_tuples + a_index, where x_index
// and a_index are mixed-radix numbers over the parties in listed order
// (first party most significant).
struct Behavior {
  Scenario scenario;
  std::vector<double> table;

  long input_index(const std::vector<int>& inputs) const;
  long output_index(const std::vector<int>& outputs) const;
  double prob(const std::vector<int>& inputs, const std::vector<int>& outputs) const;
  double& at(long x_index, long a_index);
  double at(long x_index, long a_index) const;
};

void validate(const Behavior& b);

// Per-party sign rule for correlators: bit < 0 reads the full parity of the
// output; bit = k >= 0 reads bit k of the output (most significant bit is
// bit 0, matching the B^y bit-extraction convention).
struct SignRule {
  int bit = -1;
};

// sum_a (prod_i sign_i(a_i)) P(a|x) for the given input tuple.
double correlator(const Behavior& b, const std::vector<int>& settings,
                  const std::vector<SignRule>& signs);

// Returns human-readable descriptions of violated no-signaling marginal
// equalities (empty iff no-signaling within tolerance()).
std::vector<std::string> check_no_signaling(const Behavior& b);

// Fixes drop_party's input to fixed_input and sums over its outputs.
Behavior marginalize_behavior(const Behavior& b, const std::string& drop_party,
                              int fixed_input);

}  // namespace netcert
