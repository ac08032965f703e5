#pragma once

#include <string>
#include <utility>
#include <vector>

#include "netcert/behavior.hpp"

namespace netcert {

enum class Family {
  bilocal_ij,
  chain_ij,
  star_ij,
  linear_b3,
  linear_bn,
  star_svetlichny,
};

std::string family_name(Family f);
Family family_from_name(const std::string& name);

enum class Model { all_classical, hybrid_ns, hybrid_quantum, quantum_max };

std::string model_name(Model m);

struct WitnessValue {
  Family family;
  int n = 0;  // scenario size (parties for chains, branches for stars)
  double value = 0;
  std::vector<std::pair<std::string, double>> components;
};

struct BoundSpec {
  Family family;
  int n = 0;
  int parameter = 0;  // l (classical-source count) or |S| for chain hybrid_ns
  Model model;
  double threshold = 0;
  bool detectable = false;
};

struct CertificationClaim {
  std::string claim;  // NN, FNN, FQNN, l-NN, l-QNN
  int level = 0;
  double threshold = 0;
  double margin = 0;  // value - threshold, > 0 for every emitted claim
};

// --- Witness evaluations ----------------------------------------------------

// Scenario (2,2)-(1,4)-(2,2): value = sqrt|I| + sqrt|J| with
// I = 1/4 sum A_x B^0 C_z and J = 1/4 sum (-1)^{x+z} A_x B^1 C_z.
WitnessValue eval_bilocal_ij(const Behavior& b);

// n odd, all parties (2,2): value = |I|^{2/(n+1)} + |J|^{2/(n+1)}.
WitnessValue eval_chain_ij(const Behavior& b, int n);

// n branch parties (2,2) followed by the central party (2,2):
// value = |I|^{1/n} + |J|^{1/n}.
WitnessValue eval_star_ij(const Behavior& b, int n);

// Scenario (2,2)-(1,4)-(3,2): the 16-term linear combination, bound 2.
WitnessValue eval_linear_b3(const Behavior& b);

// Endpoints (2,2) and (4,2), middles (1,4): the four CHSH-like blocks over
// the XOR-accumulated middle outcomes, bound 2.
WitnessValue eval_linear_bn(const Behavior& b, int n);

// Coefficient of each input tuple (mixed-radix index, first party most
// significant) in the n-party Mermin-Svetlichny operator; the coefficient of
// a tuple of Hamming weight w is (-1)^{floor(w/2)}.
std::vector<int> svetlichny_coefficients(int n);

// Maps a central outcome to the per-branch measurement index offset; the
// branch's two conditioned settings are offset and offset+1.
struct Conditioning {
  std::vector<std::vector<int>> offsets;  // [central outcome][branch]
};

// offsets[i][j] = 2 * (bit j of the central outcome label): branch 1 keys on
// the GHZ phase bit, branch j >= 2 on its own flip bit.
Conditioning default_conditioning(int n);

// Central party (1, 2^n), branches (2^n settings, 2 outputs): probability-
// weighted Svetlichny score conditioned on the central outcome.
WitnessValue eval_star_svetlichny(const Behavior& b, int n,
                                  const Conditioning& cond);

// --- Bounds and certification ----------------------------------------------

BoundSpec bound_lookup(Family family, int n, int parameter, Model model);

// All bound rows relevant for a witness report of the given family/size.
std::vector<BoundSpec> bound_table(Family family, int n);

// Minimum number of odd-position chain parties receiving only classical
// systems when l of the n-1 sources are classical.
int min_isolated_parties(int n, int l);

std::vector<CertificationClaim> certify(const WitnessValue& witness);

// Even-n chain certification: evaluates both (n-1)-party marginals (drop A1
// and drop An at input fixed_input) and requires both to violate; sub-claims
// at level l' lift to level l'+1 on the full chain.
std::vector<CertificationClaim> certify_chain_even(const Behavior& b, int n,
                                                   int fixed_input = 0);

// Exhaustive classical maximum.  Linear families enumerate deterministic
// vertices; bilocal_ij additionally sweeps per-source priors on a grid.
// Supported: bilocal_ij, linear_b3, linear_bn, star_svetlichny; other
// families exceed the enumeration budget and raise resource_error.
double brute_force_classical_max(Family family, int n, int alphabet, int grid);

}  // namespace netcert
