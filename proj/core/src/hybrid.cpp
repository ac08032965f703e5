#include "netcert/hybrid.hpp"

#include <algorithm>
#include <cmath>

namespace netcert {

namespace {

struct Layout {
  int total_qubits = 0;
  std::vector<std::vector<int>> party_qubits;  // global indices, per party
};

// One qubit per fed party, allocated source-major; the first-listed party of
// a source gets the more significant qubit.
Layout build_layout(const NetworkTopology& topo,
                    const std::vector<bool>& is_quantum) {
  Layout lay;
  lay.party_qubits.resize(topo.parties.size());
  for (size_t s = 0; s < topo.sources.size(); ++s) {
    if (!is_quantum[s]) continue;
    for (const auto& pname : topo.sources[s]) {
      const int p = party_index(topo, pname);
      lay.party_qubits[size_t(p)].push_back(lay.total_qubits++);
    }
  }
  return lay;
}

int state_qubits(const SourceDesc& s) {
  if (std::holds_alternative<PureState>(s)) return std::get<PureState>(s).num_qubits;
  if (std::holds_alternative<MixedState>(s)) return std::get<MixedState>(s).num_qubits;
  return 0;
}

// Scatter table: sub-index over the given qubits -> global bit pattern.
// Qubit q occupies global bit (total - 1 - q), counted from the LSB.
std::vector<long> scatter_table(const std::vector<int>& qubits, int total) {
  const int k = int(qubits.size());
  std::vector<long> table(size_t(1) << k, 0);
  for (long sub = 0; sub < long(table.size()); ++sub)
    for (int b = 0; b < k; ++b)
      if (sub >> (k - 1 - b) & 1)
        table[size_t(sub)] |= 1L << (total - 1 - qubits[size_t(b)]);
  return table;
}

// v <- (m acting on the listed qubits) v
void apply_local(const Mat& m, const std::vector<long>& scatter, Vec& v) {
  const long d = long(m.rows());
  long qmask = 0;
  for (long s = 0; s < d; ++s) qmask |= scatter[size_t(s)];
  const long dim = v.size();
  std::vector<cplx> buf(size_t(d), cplx(0));
  for (long base = 0; base < dim; ++base) {
    if (base & qmask) continue;
    for (long r = 0; r < d; ++r) {
      cplx acc = 0;
      for (long c = 0; c < d; ++c)
        acc += m(r, c) * v(base | scatter[size_t(c)]);
      buf[size_t(r)] = acc;
    }
    for (long r = 0; r < d; ++r) v(base | scatter[size_t(r)]) = buf[size_t(r)];
  }
}

struct Engine {
  int total_qubits = 0;
  bool pure = true;
  Vec state_vec;   // pure path
  Mat state_den;   // mixed path
  std::vector<std::vector<int>> party_qubits;  // measuring parties only
  std::vector<const ProjectiveMeasurement*> meas;

  std::vector<double> run() const {
    std::vector<int> counts;
    long n = 1;
    for (const auto* m : meas) {
      counts.push_back(m->num_outcomes());
      n *= m->num_outcomes();
    }
    std::vector<double> dist(size_t(n), 0.0);
    if (pure) {
      std::vector<std::vector<long>> scat;
      for (const auto& q : party_qubits)
        scat.push_back(scatter_table(q, total_qubits));
      run_pure(state_vec, 0, 0, counts, scat, dist);
    } else {
      run_mixed(counts, dist);
    }
    return dist;
  }

 private:
  void run_pure(const Vec& v, size_t pi, long prefix,
                const std::vector<int>& counts,
                const std::vector<std::vector<long>>& scat,
                std::vector<double>& dist) const {
    if (pi == meas.size()) {
      dist[size_t(prefix)] = v.squaredNorm();
      return;
    }
    for (int k = 0; k < counts[pi]; ++k) {
      Vec w = v;
      apply_local(meas[pi]->projectors[size_t(k)], scat[pi], w);
      if (w.squaredNorm() > 1e-30 || pi + 1 == meas.size())
        run_pure(w, pi + 1, prefix * counts[pi] + k, counts, scat, dist);
    }
  }

  void run_mixed(const std::vector<int>& counts, std::vector<double>& dist) const {
    const long dim = 1L << total_qubits;
    // Per-party sub-index of each global index, plus the unmeasured rest.
    std::vector<std::vector<int>> sub(meas.size(), std::vector<int>(size_t(dim)));
    long rest_mask = dim - 1;
    for (size_t p = 0; p < meas.size(); ++p) {
      const auto& qs = party_qubits[p];
      for (long idx = 0; idx < dim; ++idx) {
        int s = 0;
        for (int q : qs) s = 2 * s + int(idx >> (total_qubits - 1 - q) & 1);
        sub[p][size_t(idx)] = s;
      }
      for (int q : qs) rest_mask &= ~(1L << (total_qubits - 1 - q));
    }
    std::vector<int> a(meas.size(), 0);
    long ai = 0;
    while (true) {
      double prob = 0;
      for (long r = 0; r < dim; ++r)
        for (long c = 0; c < dim; ++c) {
          if ((r & rest_mask) != (c & rest_mask)) continue;
          cplx w = state_den(c, r);  // rho(c, r) pairs with Op(r, c)
          if (w == cplx(0, 0)) continue;
          cplx op = 1;
          for (size_t p = 0; p < meas.size(); ++p)
            op *= meas[p]->projectors[size_t(a[p])](sub[p][size_t(r)],
                                                    sub[p][size_t(c)]);
          prob += (w * op).real();
        }
      dist[size_t(ai)] = prob;
      ++ai;
      int p = int(meas.size()) - 1;
      for (; p >= 0; --p) {
        if (++a[size_t(p)] < counts[size_t(p)]) break;
        a[size_t(p)] = 0;
      }
      if (p < 0) break;
    }
  }
};

Engine build_engine(const std::vector<const SourceDesc*>& quantum_sources,
                    int total_qubits) {
  Engine e;
  e.total_qubits = total_qubits;
  e.pure = std::all_of(quantum_sources.begin(), quantum_sources.end(),
                       [](const SourceDesc* s) {
                         return std::holds_alternative<PureState>(*s);
                       });
  if (e.pure) {
    e.state_vec = Vec::Ones(1);
    for (const auto* s : quantum_sources) {
      const Vec& a = std::get<PureState>(*s).amplitudes;
      Vec next(e.state_vec.size() * a.size());
      for (Eigen::Index i = 0; i < e.state_vec.size(); ++i)
        next.segment(i * a.size(), a.size()) = e.state_vec(i) * a;
      e.state_vec = std::move(next);
    }
  } else {
    e.state_den = Mat::Ones(1, 1);
    std::vector<Mat> factors;
    for (const auto* s : quantum_sources) {
      if (std::holds_alternative<PureState>(*s)) {
        const Vec& a = std::get<PureState>(*s).amplitudes;
        factors.push_back(a * a.adjoint());
      } else {
        factors.push_back(std::get<MixedState>(*s).density);
      }
    }
    e.state_den = tensor_product(factors);
  }
  return e;
}

}  // namespace

Behavior behavior_from_quantum(
    const NetworkTopology& topology, const std::vector<SourceDesc>& states,
    const std::vector<std::vector<ProjectiveMeasurement>>& measurements) {
  validate(topology);
  if (states.size() != topology.sources.size())
    throw argument_error("one state per source required");
  if (measurements.size() != topology.parties.size())
    throw argument_error("one measurement list per party required");

  std::vector<bool> is_quantum(states.size(), true);
  std::vector<const SourceDesc*> srcs;
  for (size_t s = 0; s < states.size(); ++s) {
    const int q = state_qubits(states[s]);
    if (q == 0) throw argument_error("behavior_from_quantum needs quantum sources");
    if (q != int(topology.sources[s].size()))
      throw argument_error("source state must carry one qubit per fed party");
    srcs.push_back(&states[s]);
  }
  Layout lay = build_layout(topology, is_quantum);

  Behavior b;
  for (size_t p = 0; p < topology.parties.size(); ++p) {
    const auto& ms = measurements[p];
    if (ms.empty()) throw argument_error("every party needs >= 1 measurement");
    const int d = 1 << lay.party_qubits[p].size();
    int num_out = 2;
    for (const auto& m : ms) {
      if (m.dim() != d)
        throw argument_error("measurement dimension mismatch for party " +
                             topology.parties[p]);
      for (int k = 0; k < m.num_outcomes(); ++k)
        num_out = std::max(num_out, m.outcome_value(k) + 1);
    }
    b.scenario.parties.push_back(
        {topology.parties[p], int(ms.size()), num_out});
  }
  const long na = b.scenario.output_tuples();
  b.table.assign(size_t(b.scenario.input_tuples() * na), 0.0);

  std::vector<int> x(topology.parties.size(), 0);
  long xi = 0;
  while (true) {
    Engine e = build_engine(srcs, lay.total_qubits);
    e.party_qubits = lay.party_qubits;
    for (size_t p = 0; p < topology.parties.size(); ++p)
      e.meas.push_back(&measurements[p][size_t(x[p])]);
    std::vector<double> dist = e.run();

    // Scatter the joint outcome distribution into output-label indices.
    std::vector<int> k(topology.parties.size(), 0);
    size_t di = 0;
    while (true) {
      long ai = 0;
      for (size_t p = 0; p < topology.parties.size(); ++p)
        ai = ai * b.scenario.parties[p].num_outputs +
             e.meas[p]->outcome_value(k[p]);
      b.at(xi, ai) += dist[di++];
      int p = int(k.size()) - 1;
      for (; p >= 0; --p) {
        if (++k[size_t(p)] < e.meas[size_t(p)]->num_outcomes()) break;
        k[size_t(p)] = 0;
      }
      if (p < 0) break;
    }

    ++xi;
    int p = int(x.size()) - 1;
    for (; p >= 0; --p) {
      if (++x[size_t(p)] < int(measurements[size_t(p)].size())) break;
      x[size_t(p)] = 0;
    }
    if (p < 0) break;
  }
  return b;
}

Behavior behavior_from_hybrid(const HybridStrategy& st) {
  validate(st.topology);
  const auto& topo = st.topology;
  if (st.sources.size() != topo.sources.size() ||
      st.parties.size() != topo.parties.size())
    throw argument_error("strategy shape does not match topology");

  std::vector<bool> is_quantum(st.sources.size());
  for (size_t s = 0; s < st.sources.size(); ++s) {
    is_quantum[s] = state_qubits(st.sources[s]) > 0;
    if (is_quantum[s] &&
        state_qubits(st.sources[s]) != int(topo.sources[s].size()))
      throw argument_error("source state must carry one qubit per fed party");
  }
  Layout lay = build_layout(topo, is_quantum);
  std::vector<const SourceDesc*> qsrcs;
  for (size_t s = 0; s < st.sources.size(); ++s)
    if (is_quantum[s]) qsrcs.push_back(&st.sources[s]);

  // Incident classical sources per party (source order) -> symbol radix.
  std::vector<std::vector<int>> class_srcs(topo.parties.size());
  std::vector<int> class_ids;  // classical source indices, enumeration order
  for (size_t s = 0; s < st.sources.size(); ++s) {
    if (!std::holds_alternative<ClassicalSource>(st.sources[s])) continue;
    const auto& cs = std::get<ClassicalSource>(st.sources[s]);
    if (cs.priors.empty()) throw argument_error("classical source needs an alphabet");
    double sum = 0;
    for (double w : cs.priors) sum += w;
    if (std::abs(sum - 1.0) > tolerance())
      throw argument_error("classical priors not normalized");
    class_ids.push_back(int(s));
    for (const auto& pname : topo.sources[s])
      class_srcs[size_t(party_index(topo, pname))].push_back(int(s));
  }

  // PR boxes that are read by at least one party.
  std::vector<int> box_ids;
  for (size_t p = 0; p < st.parties.size(); ++p)
    if (const auto* br = std::get_if<BoxResponse>(&st.parties[p])) {
      if (br->source < 0 || br->source >= int(topo.sources.size()) ||
          !std::holds_alternative<PRBoxSource>(st.sources[size_t(br->source)]))
        throw argument_error("box response must designate a PR-box source");
      if (topo.sources[size_t(br->source)].size() != 2)
        throw argument_error("PR boxes are bipartite");
      if (std::find(box_ids.begin(), box_ids.end(), br->source) == box_ids.end())
        box_ids.push_back(br->source);
    }
  std::sort(box_ids.begin(), box_ids.end());

  // Scenario.
  Behavior b;
  for (size_t p = 0; p < st.parties.size(); ++p) {
    int ni = 1, no = 2;
    std::visit(
        [&](const auto& d) {
          ni = d.num_inputs;
          if constexpr (!std::is_same_v<std::decay_t<decltype(d)>, BoxResponse>)
            no = d.num_outputs;
        },
        st.parties[p]);
    b.scenario.parties.push_back({topo.parties[p], ni, no});
  }
  validate(b.scenario);
  b.table.assign(size_t(b.scenario.input_tuples() * b.scenario.output_tuples()),
                 0.0);

  // Enumerate classical symbols and box bits.
  std::vector<int> sym(class_ids.size(), 0);
  while (true) {
    double weight = 1.0;
    std::vector<int> sym_of_source(st.sources.size(), 0);
    for (size_t c = 0; c < class_ids.size(); ++c) {
      const auto& cs = std::get<ClassicalSource>(st.sources[size_t(class_ids[c])]);
      weight *= cs.priors[size_t(sym[c])];
      sym_of_source[size_t(class_ids[c])] = sym[c];
    }
    if (weight > 0) {
      // Per-party symbol combo.
      std::vector<int> party_sym(st.parties.size(), 0);
      for (size_t p = 0; p < st.parties.size(); ++p)
        for (int s : class_srcs[p]) {
          const auto& cs = std::get<ClassicalSource>(st.sources[size_t(s)]);
          party_sym[p] = party_sym[p] * int(cs.priors.size()) + sym_of_source[size_t(s)];
        }

      for (long u = 0; u < (1L << box_ids.size()); ++u) {
        const double w = weight / double(1L << box_ids.size());

        std::vector<int> x(st.parties.size(), 0);
        long xi = 0;
        while (true) {
          // Resolve outputs.
          std::vector<int> out(st.parties.size(), -1);
          std::vector<const ProjectiveMeasurement*> meas;
          std::vector<std::vector<int>> meas_qubits;
          std::vector<int> meas_party;
          for (size_t p = 0; p < st.parties.size(); ++p) {
            if (const auto* det = std::get_if<DeterministicResponse>(&st.parties[p])) {
              const size_t idx = size_t(x[p]) * (det->table.size() / size_t(det->num_inputs)) +
                                 size_t(party_sym[p]);
              if (idx >= det->table.size())
                throw argument_error("deterministic response table incomplete");
              out[p] = det->table[idx];
            } else if (const auto* br = std::get_if<BoxResponse>(&st.parties[p])) {
              const auto& fed = topo.sources[size_t(br->source)];
              const int end = fed[0] == topo.parties[p] ? 0 : 1;
              const int xl = x[size_t(party_index(topo, fed[0]))];
              const int xr = x[size_t(party_index(topo, fed[1]))];
              const size_t bslot =
                  size_t(std::find(box_ids.begin(), box_ids.end(), br->source) -
                         box_ids.begin());
              const int ubit = int(u >> bslot & 1);
              out[p] = end == 0 ? ubit : (ubit ^ (xl & xr));
            } else {
              const auto& qr = std::get<QuantumResponse>(st.parties[p]);
              const size_t nsym = qr.table.size() / size_t(qr.num_inputs);
              const size_t idx = size_t(x[p]) * nsym + size_t(party_sym[p]);
              if (idx >= qr.table.size())
                throw argument_error("quantum response table incomplete");
              meas.push_back(&qr.table[idx]);
              meas_qubits.push_back(lay.party_qubits[p]);
              meas_party.push_back(int(p));
            }
          }

          if (meas.empty()) {
            std::vector<int> a(out.begin(), out.end());
            b.at(xi, b.output_index(a)) += w;
          } else {
            Engine e = build_engine(qsrcs, lay.total_qubits);
            e.party_qubits = meas_qubits;
            e.meas = meas;
            std::vector<double> dist = e.run();
            std::vector<int> k(meas.size(), 0);
            size_t di = 0;
            while (true) {
              std::vector<int> a(out.begin(), out.end());
              for (size_t m = 0; m < meas.size(); ++m)
                a[size_t(meas_party[m])] = meas[m]->outcome_value(k[m]);
              b.at(xi, b.output_index(a)) += w * dist[di++];
              int m = int(k.size()) - 1;
              for (; m >= 0; --m) {
                if (++k[size_t(m)] < meas[size_t(m)]->num_outcomes()) break;
                k[size_t(m)] = 0;
              }
              if (m < 0) break;
            }
          }

          ++xi;
          int p = int(x.size()) - 1;
          for (; p >= 0; --p) {
            if (++x[size_t(p)] < b.scenario.parties[size_t(p)].num_inputs) break;
            x[size_t(p)] = 0;
          }
          if (p < 0) break;
        }
      }
    }
    int c = int(sym.size()) - 1;
    for (; c >= 0; --c) {
      const auto& cs = std::get<ClassicalSource>(st.sources[size_t(class_ids[size_t(c)])]);
      if (++sym[size_t(c)] < int(cs.priors.size())) break;
      sym[size_t(c)] = 0;
    }
    if (c < 0) break;
  }
  return b;
}

}  // namespace netcert
