#pragma once

#include <functional>
#include <optional>
#include <set>
#include <vector>

#include "netcert/hybrid.hpp"
#include "netcert/witness.hpp"

namespace netcert {

// A fully assembled strategy for one of the witness families, together with
// the parameters it was built from and the closed-form value it should reach.
struct CanonicalStrategy {
  Family family;
  int n = 0;
  std::vector<double> thetas;        // one source angle per source
  std::vector<double> varthetas;     // measurement angle(s); family-specific
  std::vector<double> visibilities;  // one per source, 1 = noiseless
  HybridStrategy strategy;
  double predicted_value = 0;
};

enum class ChainVariant { ij, bn };

Behavior behavior_of(const CanonicalStrategy& s);

// Maximizes f on [lo, hi] by a coarse scan followed by golden-section
// refinement; returns the argmax.
double golden_section_maximize(double lo, double hi,
                               const std::function<double(double)>& f,
                               double tol = 1e-10);

// Measurement angle maximizing the closed-form witness value for the given
// source angles (bilocal_ij, chain_ij, star_ij).
double optimal_vartheta(Family family, const std::vector<double>& thetas,
                        const std::vector<double>& visibilities = {});

// Two-source chain: endpoint xz-observables at vartheta, Bell-basis middle.
// Omitted vartheta uses the optimal closed form tan(vartheta) = sqrt(s).
CanonicalStrategy canonical_bilocal(double theta1, double theta2,
                                    std::optional<double> vartheta = {},
                                    const std::vector<double>& visibilities = {});

// n-party chain on n-1 sources.
//  - ij: endpoint and interior-odd xz-style observables at a common vartheta
//    (optimal when omitted); dichotomic two-qubit observables elsewhere.
//  - bn: endpoint 1 measures z/x, middles measure the Bell basis, endpoint n
//    carries four xz-observables with one angle per collapsed-class pair
//    (the minimization rule; an explicit vartheta overrides both).
CanonicalStrategy canonical_chain(const std::vector<double>& thetas,
                                  ChainVariant variant,
                                  std::optional<double> vartheta = {},
                                  const std::vector<double>& visibilities = {});

// n-branch star.
//  - nonlinear (linear = false): branch xz-observables at vartheta (optimal
//    when omitted), center measures sigma_z^n / sigma_x^n.
//  - linear (linear = true): GHZ-basis center, equatorial branch observables
//    with a scalar-optimized base phase; evaluated by eval_star_svetlichny
//    under default_conditioning.
CanonicalStrategy canonical_star(const std::vector<double>& thetas,
                                 std::optional<double> vartheta = {},
                                 bool linear = false,
                                 const std::vector<double>& visibilities = {});

// Chain where the listed sources (1-based) are uniform classical bits and the
// remaining sources are PR boxes pairing adjacent parties; saturates the
// chain hybrid no-signaling bound.
HybridStrategy pr_chain_strategy(int n, const std::set<int>& classical_positions);

}  // namespace netcert
