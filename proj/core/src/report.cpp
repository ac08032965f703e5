#include "netcert/report.hpp"

#include <algorithm>

namespace netcert {

WitnessReport make_witness_report(const WitnessValue& w,
                                  std::vector<std::string> warnings) {
  WitnessReport r;
  r.witness = w;
  r.bounds = bound_table(w.family, w.n);
  r.claims = certify(w);
  r.warnings = std::move(warnings);
  return r;
}

namespace {

WitnessReport evaluate_subnetwork(const Subnetwork& sub,
                                  const std::vector<NetworkSourceSpec>& sources) {
  std::vector<double> thetas, vis;
  for (int idx : sub.source_indices) {
    const auto& s = sources[size_t(idx)];
    thetas.push_back(s.classical ? 0.0 : s.theta);
    vis.push_back(s.classical ? 1.0 : s.visibility);
  }
  const int n_src = int(thetas.size());

  if (sub.kind == SubnetworkKind::star) {
    const auto cs = canonical_star(thetas, {}, false, vis);
    const auto b = behavior_of(cs);
    return make_witness_report(eval_star_ij(b, n_src), check_no_signaling(b));
  }
  if (n_src == 1) {
    // A two-party chain is the one-branch star scenario.
    const auto cs = canonical_star(thetas, {}, false, vis);
    const auto b = behavior_of(cs);
    return make_witness_report(eval_star_ij(b, 1), check_no_signaling(b));
  }
  const auto cs = canonical_chain(thetas, ChainVariant::bn, {}, vis);
  const auto b = behavior_of(cs);
  const int n = n_src + 1;
  const auto w = (n == 3) ? eval_linear_b3(b) : eval_linear_bn(b, n);
  return make_witness_report(w, check_no_signaling(b));
}

}  // namespace

NetworkReport certify_network(const NetworkTopology& topology,
                              const std::vector<NetworkSourceSpec>& sources) {
  validate(topology);
  if (sources.size() != topology.sources.size())
    throw argument_error("need one source spec per topology source");
  for (const auto& s : topology.sources)
    if (s.size() != 2)
      throw unsupported_topology_error(
          "whole-network certification requires bipartite sources");

  NetworkReport report;
  report.topology = topology;
  report.tolerance = tolerance();
  report.cover = decompose_into_chains_and_stars(topology);

  for (const auto& sub : report.cover.subnetworks)
    report.subnetworks.push_back({sub, evaluate_subnetwork(sub, sources)});

  for (const char* name : {"NN", "FNN", "FQNN"}) {
    bool everywhere = !report.subnetworks.empty();
    for (const auto& sr : report.subnetworks) {
      const bool has =
          std::any_of(sr.report.claims.begin(), sr.report.claims.end(),
                      [&](const CertificationClaim& c) { return c.claim == name; });
      everywhere = everywhere && has;
    }
    if (everywhere) report.overall_claims.push_back(name);
  }
  return report;
}

}  // namespace netcert
