#include "netcert/network.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace netcert {

void validate(const NetworkTopology& t) {
  if (t.parties.empty()) throw argument_error("topology has no parties");
  std::set<std::string> names(t.parties.begin(), t.parties.end());
  if (names.size() != t.parties.size())
    throw argument_error("duplicate party name");
  std::set<std::string> fed;
  for (const auto& src : t.sources) {
    if (src.size() < 2) throw argument_error("source must feed >= 2 parties");
    std::set<std::string> distinct(src.begin(), src.end());
    if (distinct.size() != src.size())
      throw argument_error("source feeds a party twice");
    for (const auto& p : src) {
      if (!names.count(p)) throw argument_error("source feeds unknown party " + p);
      fed.insert(p);
    }
  }
  if (t.parties.size() > 1)
    for (const auto& p : t.parties)
      if (!fed.count(p)) throw argument_error("isolated party " + p);
}

int party_index(const NetworkTopology& t, const std::string& name) {
  auto it = std::find(t.parties.begin(), t.parties.end(), name);
  if (it == t.parties.end()) throw argument_error("unknown party " + name);
  return int(it - t.parties.begin());
}

int party_degree(const NetworkTopology& t, const std::string& name) {
  int d = 0;
  for (const auto& src : t.sources)
    d += int(std::count(src.begin(), src.end(), name));
  return d;
}

NetworkTopology make_topology(TopologyKind kind, int n) {
  NetworkTopology t;
  if (kind == TopologyKind::chain) {
    if (n < 2) throw argument_error("chain needs >= 2 parties");
    for (int i = 1; i <= n; ++i) t.parties.push_back("A" + std::to_string(i));
    for (int i = 1; i < n; ++i)
      t.sources.push_back({t.parties[size_t(i - 1)], t.parties[size_t(i)]});
  } else {
    if (n < 1) throw argument_error("star needs >= 1 branch");
    for (int i = 1; i <= n; ++i) t.parties.push_back("A" + std::to_string(i));
    t.parties.push_back("B");
    for (int i = 0; i < n; ++i) t.sources.push_back({t.parties[size_t(i)], "B"});
  }
  return t;
}

namespace {

struct Graph {
  const NetworkTopology& t;
  // party -> (neighbor, source index) adjacency over bipartite sources
  std::map<std::string, std::vector<std::pair<std::string, int>>> adj;

  explicit Graph(const NetworkTopology& topo) : t(topo) {
    for (size_t s = 0; s < t.sources.size(); ++s) {
      if (t.sources[s].size() != 2)
        throw unsupported_topology_error(
            "decomposition handles bipartite sources only");
      const auto& a = t.sources[s][0];
      const auto& b = t.sources[s][1];
      adj[a].push_back({b, int(s)});
      adj[b].push_back({a, int(s)});
    }
  }

  int degree(const std::string& p) const {
    auto it = adj.find(p);
    return it == adj.end() ? 0 : int(it->second.size());
  }
};

Subnetwork make_chain_sub(const NetworkTopology& parent,
                          std::vector<std::string> path,
                          std::vector<int> srcs) {
  if (path.back() < path.front()) {
    std::reverse(path.begin(), path.end());
    std::reverse(srcs.begin(), srcs.end());
  }
  Subnetwork sub;
  sub.kind = SubnetworkKind::chain;
  sub.topology.parties = path;
  for (size_t i = 0; i + 1 < path.size(); ++i)
    sub.topology.sources.push_back({path[i], path[i + 1]});
  sub.source_indices = srcs;
  (void)parent;
  return sub;
}

}  // namespace

SubnetworkCover decompose_into_chains_and_stars(const NetworkTopology& topology) {
  validate(topology);
  Graph g(topology);

  std::vector<std::string> hubs;
  for (const auto& p : topology.parties)
    if (g.degree(p) >= 3) hubs.push_back(p);
  std::set<std::string> hub_set(hubs.begin(), hubs.end());

  SubnetworkCover cover;

  // Stars: one per hub, over its incident sources.
  for (const auto& center : hubs) {
    Subnetwork sub;
    sub.kind = SubnetworkKind::star;
    std::vector<std::pair<std::string, int>> branches = g.adj.at(center);
    std::sort(branches.begin(), branches.end());
    for (const auto& [branch, s] : branches) {
      sub.topology.parties.push_back(branch);
      sub.source_indices.push_back(s);
    }
    sub.topology.parties.push_back(center);
    for (const auto& [branch, s] : branches) {
      (void)s;
      sub.topology.sources.push_back({branch, center});
    }
    cover.subnetworks.push_back(std::move(sub));
  }

  // Chains: connected runs of non-hub parties, extended to adjacent hubs.
  std::set<std::string> visited;
  std::set<int> covered;  // sources consumed by stars
  for (const auto& sub : cover.subnetworks)
    covered.insert(sub.source_indices.begin(), sub.source_indices.end());

  for (const auto& start : topology.parties) {
    if (hub_set.count(start) || visited.count(start)) continue;
    if (g.degree(start) == 0) continue;  // single-party topology

    // Walk to one end of the run (or detect a cycle).
    std::vector<std::string> comp{start};
    visited.insert(start);
    bool cycle = false;
    for (int dir = 0; dir < 2; ++dir) {
      std::string prev = start;
      std::string cur = start;
      while (true) {
        std::string next;
        bool found = false;
        for (const auto& [nb, s] : g.adj.at(cur)) {
          (void)s;
          if (hub_set.count(nb) || nb == prev || visited.count(nb) && nb != start) continue;
          if (nb == start && comp.size() > 2) { cycle = true; break; }
          if (nb == start) continue;
          next = nb;
          found = true;
          break;
        }
        if (cycle || !found) break;
        visited.insert(next);
        if (dir == 0)
          comp.push_back(next);
        else
          comp.insert(comp.begin(), next);
        prev = cur;
        cur = next;
      }
      if (cycle) break;
    }

    auto sources_between = [&](const std::string& a, const std::string& b) {
      for (const auto& [nb, s] : g.adj.at(a))
        if (nb == b) return s;
      throw argument_error("internal: missing source between " + a + " and " + b);
    };

    if (cycle) {
      // Whole graph is a degree-2 cycle: cover it with two overlapping chains.
      std::vector<std::string> path1 = comp;
      std::vector<int> srcs1;
      for (size_t i = 0; i + 1 < path1.size(); ++i)
        srcs1.push_back(sources_between(path1[i], path1[i + 1]));
      std::vector<std::string> path2{comp[comp.size() - 1], comp[0], comp[1]};
      std::vector<int> srcs2{sources_between(path2[0], path2[1]),
                             sources_between(path2[1], path2[2])};
      cover.subnetworks.push_back(make_chain_sub(topology, path1, srcs1));
      cover.subnetworks.push_back(make_chain_sub(topology, path2, srcs2));
      continue;
    }

    // Extend the run with the adjacent hub on each side, if any.
    std::vector<std::string> path = comp;
    for (const auto& [nb, s] : g.adj.at(comp.front())) {
      (void)s;
      if (hub_set.count(nb)) { path.insert(path.begin(), nb); break; }
    }
    for (const auto& [nb, s] : g.adj.at(comp.back())) {
      (void)s;
      if (hub_set.count(nb) && (path.front() != nb || path.size() < 2)) {
        path.push_back(nb);
        break;
      }
    }
    if (path.front() == path.back() && path.size() > 1) path.pop_back();

    std::vector<int> srcs;
    for (size_t i = 0; i + 1 < path.size(); ++i)
      srcs.push_back(sources_between(path[i], path[i + 1]));
    if (srcs.empty()) continue;

    bool uncovered = std::any_of(srcs.begin(), srcs.end(),
                                 [&](int s) { return !covered.count(s); });
    if (srcs.size() >= 2 || uncovered)
      cover.subnetworks.push_back(make_chain_sub(topology, path, srcs));
  }

  std::sort(cover.subnetworks.begin(), cover.subnetworks.end(),
            [](const Subnetwork& a, const Subnetwork& b) {
              if (a.topology.parties.front() != b.topology.parties.front())
                return a.topology.parties.front() < b.topology.parties.front();
              return a.source_indices < b.source_indices;
            });

  // Cover invariant: every parent source appears somewhere.
  std::set<int> all;
  for (const auto& sub : cover.subnetworks)
    all.insert(sub.source_indices.begin(), sub.source_indices.end());
  if (all.size() != topology.sources.size())
    throw unsupported_topology_error("decomposition failed to cover all sources");

  return cover;
}

}  // namespace netcert
