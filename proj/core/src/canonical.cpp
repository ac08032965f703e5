#include "netcert/canonical.hpp"

#include <algorithm>
#include <cmath>

namespace netcert {

namespace {

constexpr double kPi = 3.14159265358979323846;

SourceDesc make_source(double theta, double visibility) {
  PureState s = generalized_epr(theta);
  if (visibility >= 1.0) return s;
  return apply_werner_noise(s, visibility);
}

std::vector<double> fill_visibilities(std::vector<double> vis, size_t n_sources) {
  if (vis.empty()) vis.assign(n_sources, 1.0);
  if (vis.size() != n_sources)
    throw argument_error("need one visibility per source");
  for (double v : vis)
    if (v < 0.0 || v > 1.0) throw argument_error("visibility outside [0,1]");
  return vis;
}

double product_visibility(const std::vector<double>& vis) {
  double p = 1.0;
  for (double v : vis) p *= v;
  return p;
}

QuantumResponse dichotomic_party(const std::vector<Observable>& observables) {
  QuantumResponse r;
  r.num_inputs = int(observables.size());
  r.num_outputs = 2;
  for (const auto& o : observables) r.table.push_back(measurement_from_observable(o));
  return r;
}

Observable two_qubit(const Mat& left, const Mat& right) {
  return Observable{tensor_product({left, right}), 2};
}

// Sources of the ij-chain witness whose sin(2 theta) enters the J branch:
// all of them except the interior-odd positions 3, 5, ..., n-2.
std::vector<int> chain_j_sources(int n) {
  std::vector<int> sources;
  for (int i = 1; i <= n - 1; ++i) {
    const bool skipped = (i % 2 == 1) && i >= 3 && i <= n - 2;
    if (!skipped) sources.push_back(i);
  }
  return sources;
}

}  // namespace

Behavior behavior_of(const CanonicalStrategy& s) {
  return behavior_from_hybrid(s.strategy);
}

double golden_section_maximize(double lo, double hi,
                               const std::function<double(double)>& f,
                               double tol) {
  if (!(lo < hi)) throw argument_error("empty search interval");
  // Coarse scan to land in the right basin, then golden-section refinement.
  const int kScan = 64;
  double best_x = lo, best_f = f(lo);
  for (int i = 1; i <= kScan; ++i) {
    const double x = lo + (hi - lo) * double(i) / double(kScan);
    const double fx = f(x);
    if (fx > best_f) {
      best_f = fx;
      best_x = x;
    }
  }
  const double step = (hi - lo) / double(kScan);
  double a = std::max(lo, best_x - step);
  double b = std::min(hi, best_x + step);
  const double phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - phi * (b - a);
  double d = a + phi * (b - a);
  double fc = f(c), fd = f(d);
  while (b - a > tol) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + phi * (b - a);
      fd = f(d);
    }
  }
  return 0.5 * (a + b);
}

double optimal_vartheta(Family family, const std::vector<double>& thetas,
                        const std::vector<double>& visibilities) {
  // Isotropic noise multiplies I and J by the same factor, so it never moves
  // the optimum; visibilities are accepted for interface symmetry.
  (void)visibilities;
  switch (family) {
    case Family::bilocal_ij: {
      if (thetas.size() != 2) throw argument_error("bilocal takes two angles");
      double s = std::sin(2 * thetas[0]) * std::sin(2 * thetas[1]);
      return std::atan(std::sqrt(std::abs(s)));
    }
    case Family::chain_ij: {
      const int n = int(thetas.size()) + 1;
      if (n < 3 || n % 2 == 0) throw argument_error("chain_ij needs odd n >= 3");
      double p = 1.0;
      for (int i : chain_j_sources(n)) p *= std::sin(2 * thetas[size_t(i - 1)]);
      return std::atan(std::pow(std::abs(p), 2.0 / double(n + 1)));
    }
    case Family::star_ij: {
      const int n = int(thetas.size());
      if (n < 1) throw argument_error("star needs at least one angle");
      double p = 1.0;
      for (double th : thetas) p *= std::pow(std::abs(std::sin(2 * th)), 1.0 / n);
      return std::atan(p);
    }
    default:
      throw argument_error("optimal_vartheta: unsupported family");
  }
}

CanonicalStrategy canonical_bilocal(double theta1, double theta2,
                                    std::optional<double> vartheta,
                                    const std::vector<double>& visibilities) {
  CanonicalStrategy cs;
  cs.family = Family::bilocal_ij;
  cs.n = 2;
  cs.thetas = {theta1, theta2};
  cs.visibilities = fill_visibilities(visibilities, 2);
  const double vt =
      vartheta ? *vartheta : optimal_vartheta(Family::bilocal_ij, cs.thetas);
  cs.varthetas = {vt};

  cs.strategy.topology = make_topology(TopologyKind::chain, 3);
  cs.strategy.sources = {make_source(theta1, cs.visibilities[0]),
                         make_source(theta2, cs.visibilities[1])};
  QuantumResponse endpoint =
      dichotomic_party({xz_observable(vt, +1), xz_observable(vt, -1)});
  QuantumResponse middle;
  middle.num_inputs = 1;
  middle.num_outputs = 4;
  middle.table = {projective_basis(BasisKind::bell)};
  cs.strategy.parties = {endpoint, middle, endpoint};

  const double s = std::sin(2 * theta1) * std::sin(2 * theta2);
  cs.predicted_value = std::sqrt(product_visibility(cs.visibilities)) *
                       (std::cos(vt) + std::sin(vt) * std::sqrt(std::abs(s)));
  return cs;
}

namespace {

CanonicalStrategy chain_ij_strategy(const std::vector<double>& thetas,
                                    std::optional<double> vartheta,
                                    const std::vector<double>& visibilities) {
  const int n = int(thetas.size()) + 1;
  if (n % 2 == 0) throw argument_error("chain_ij variant needs odd n");
  CanonicalStrategy cs;
  cs.family = Family::chain_ij;
  cs.n = n;
  cs.thetas = thetas;
  cs.visibilities = fill_visibilities(visibilities, size_t(n - 1));
  const double vt =
      vartheta ? *vartheta : optimal_vartheta(Family::chain_ij, thetas);
  cs.varthetas = {vt};

  cs.strategy.topology = make_topology(TopologyKind::chain, n);
  for (int i = 0; i < n - 1; ++i)
    cs.strategy.sources.push_back(
        make_source(thetas[size_t(i)], cs.visibilities[size_t(i)]));

  const Mat Z = pauli_z(), X = pauli_x();
  for (int p = 1; p <= n; ++p) {
    if (p == 1 || p == n) {
      cs.strategy.parties.push_back(
          dichotomic_party({xz_observable(vt, +1), xz_observable(vt, -1)}));
    } else if (p % 2 == 0) {
      // Input 1 continues the J-branch: the first middle flips both qubits;
      // later even parties pass the left qubit through.
      Observable second = (p == 2) ? two_qubit(X, X) : two_qubit(Z, X);
      cs.strategy.parties.push_back(
          dichotomic_party({two_qubit(Z, Z), second}));
    } else {
      // Interior odd parties mix the two branches at the witness angle; the
      // X acts on the left qubit so the two settings anticommute there.
      Observable plus{std::cos(vt) * tensor_product({Z, Z}) +
                          std::sin(vt) * tensor_product({X, Z}),
                      2};
      Observable minus{std::cos(vt) * tensor_product({Z, Z}) -
                           std::sin(vt) * tensor_product({X, Z}),
                       2};
      cs.strategy.parties.push_back(dichotomic_party({plus, minus}));
    }
  }

  double p = 1.0;
  for (int i : chain_j_sources(n)) p *= std::sin(2 * thetas[size_t(i - 1)]);
  const double e = 2.0 / double(n + 1);
  cs.predicted_value =
      std::pow(product_visibility(cs.visibilities), e) *
      (std::cos(vt) + std::sin(vt) * std::pow(std::abs(p), e));
  return cs;
}

// Unnormalized two-qubit states of the endpoint pair after the middles
// project onto a given Bell-outcome tuple.
struct CollapsedBranch {
  std::vector<int> outcomes;  // Bell label per middle
  Vec state;                  // 4 amplitudes over (endpoint1, endpoint n)
  int class_s = 0, class_t = 0;
};

std::vector<CollapsedBranch> collapse_chain(const std::vector<double>& thetas) {
  const int n = int(thetas.size()) + 1;
  if (n > 8) throw argument_error("bn chain supported up to n = 8");
  const int n_mid = n - 2;
  // Bell basis vectors as 4-amplitude columns.
  std::vector<Vec> bvec(4, Vec::Zero(4));
  {
    const double r = 1.0 / std::sqrt(2.0);
    bvec[0] << r, 0, 0, r;
    bvec[1] << r, 0, 0, -r;
    bvec[2] << 0, r, r, 0;
    bvec[3] << 0, r, -r, 0;
  }

  std::vector<CollapsedBranch> branches;
  std::vector<int> m(size_t(std::max(n_mid, 1)), 0);
  long combos = 1;
  for (int i = 0; i < n_mid; ++i) combos *= 4;
  for (long idx = 0; idx < combos; ++idx) {
    CollapsedBranch br;
    long rem = idx;
    for (int i = 0; i < n_mid; ++i) {
      m[size_t(i)] = int(rem % 4);
      rem /= 4;
      br.class_s ^= m[size_t(i)] & 1;
      br.class_t ^= ((m[size_t(i)] >> 1) ^ m[size_t(i)]) & 1;
    }
    br.outcomes.assign(m.begin(), m.begin() + n_mid);

    // Contract source amplitudes against the conjugated Bell vectors.  The
    // per-source amplitude is diag(cos, sin) over its two equal bits.
    br.state = Vec::Zero(4);
    long patterns = 1;
    for (int i = 0; i < n_mid; ++i) patterns *= 4;
    for (long pat = 0; pat < patterns; ++pat) {
      // Middle j holds (right bit of source j-1, left bit of source j).
      std::vector<int> mid_bits(size_t(2 * std::max(n_mid, 1)), 0);
      long prem = pat;
      for (int i = 0; i < n_mid; ++i) {
        mid_bits[size_t(2 * i)] = int((prem % 4) >> 1);
        mid_bits[size_t(2 * i + 1)] = int(prem % 2);
        prem /= 4;
      }
      cplx weight = 1.0;
      for (int i = 0; i < n_mid && weight != 0.0; ++i)
        weight *= std::conj(
            bvec[size_t(br.outcomes[size_t(i)])](2 * mid_bits[size_t(2 * i)] +
                                                 mid_bits[size_t(2 * i + 1)]));
      if (weight == 0.0) continue;
      for (int a1 = 0; a1 < 2; ++a1)
        for (int an = 0; an < 2; ++an) {
          // Source i bits: left = holder party i, right = holder party i+1.
          cplx amp = weight;
          for (int s = 1; s <= n - 1 && amp != 0.0; ++s) {
            const int left = (s == 1) ? a1 : mid_bits[size_t(2 * (s - 2) + 1)];
            const int right = (s == n - 1) ? an : mid_bits[size_t(2 * (s - 1))];
            if (left != right) {
              amp = 0.0;
            } else {
              amp *= (left == 0) ? std::cos(thetas[size_t(s - 1)])
                                 : std::sin(thetas[size_t(s - 1)]);
            }
          }
          br.state(2 * a1 + an) += amp;
        }
    }
    branches.push_back(std::move(br));
  }
  return branches;
}

// Three-party linear witness: first endpoint carries the angle, middle does a
// Bell measurement, last endpoint measures z, x, -z.
CanonicalStrategy chain_b3_strategy(const std::vector<double>& thetas,
                                    std::optional<double> vartheta,
                                    const std::vector<double>& visibilities) {
  CanonicalStrategy cs;
  cs.family = Family::linear_b3;
  cs.n = 3;
  cs.thetas = thetas;
  cs.visibilities = fill_visibilities(visibilities, 2);
  const double prod = std::sin(2 * thetas[0]) * std::sin(2 * thetas[1]);
  const double vt = vartheta ? *vartheta : std::atan(std::abs(prod));
  cs.varthetas = {vt};

  cs.strategy.topology = make_topology(TopologyKind::chain, 3);
  cs.strategy.sources = {make_source(thetas[0], cs.visibilities[0]),
                         make_source(thetas[1], cs.visibilities[1])};
  QuantumResponse middle;
  middle.num_inputs = 1;
  middle.num_outputs = 4;
  middle.table = {projective_basis(BasisKind::bell)};
  const Mat Z = pauli_z(), X = pauli_x();
  cs.strategy.parties = {
      dichotomic_party({xz_observable(vt, +1), xz_observable(vt, -1)}),
      middle,
      dichotomic_party({Observable{Z, 1}, Observable{X, 1}, Observable{-Z, 1}})};

  cs.predicted_value = product_visibility(cs.visibilities) * 2.0 *
                       (std::cos(vt) + std::sin(vt) * prod);
  return cs;
}

CanonicalStrategy chain_bn_strategy(const std::vector<double>& thetas,
                                    std::optional<double> vartheta,
                                    const std::vector<double>& visibilities) {
  const int n = int(thetas.size()) + 1;
  if (n == 3) return chain_b3_strategy(thetas, vartheta, visibilities);
  CanonicalStrategy cs;
  cs.family = Family::linear_bn;
  cs.n = n;
  cs.thetas = thetas;
  cs.visibilities = fill_visibilities(visibilities, size_t(n - 1));

  const auto branches = collapse_chain(thetas);

  // One endpoint angle per collapsed-class pair, chosen so every branch in
  // the pair still violates: the most weakly entangled branch fixes it.
  double vts[2];
  if (vartheta) {
    vts[0] = vts[1] = *vartheta;
  } else {
    for (int p = 0; p < 2; ++p) {
      double worst = 1.0;
      for (const auto& br : branches) {
        if ((br.class_s ^ br.class_t) != p) continue;
        const double g = std::sqrt(std::norm(br.state(0)) + std::norm(br.state(1)));
        const double d = std::sqrt(std::norm(br.state(2)) + std::norm(br.state(3)));
        if (g * g + d * d < 1e-30) continue;
        worst = std::min(worst, 2 * g * d / (g * g + d * d));
      }
      vts[p] = std::atan(worst);
    }
  }
  cs.varthetas = {vts[0], vts[1]};

  cs.strategy.topology = make_topology(TopologyKind::chain, n);
  for (int i = 0; i < n - 1; ++i)
    cs.strategy.sources.push_back(
        make_source(thetas[size_t(i)], cs.visibilities[size_t(i)]));

  const Mat Z = pauli_z(), X = pauli_x();
  cs.strategy.parties.push_back(
      dichotomic_party({Observable{Z, 1}, Observable{X, 1}}));
  for (int p = 2; p <= n - 1; ++p) {
    QuantumResponse middle;
    middle.num_inputs = 1;
    middle.num_outputs = 4;
    middle.table = {projective_basis(BasisKind::bell)};
    cs.strategy.parties.push_back(middle);
  }
  const auto last_obs = [&](int b) {
    const int pair = b / 2;
    const double c = std::cos(vts[pair]), s = std::sin(vts[pair]);
    const double zc = (pair == 0) ? c : -c;
    const double xc = (b % 2 == 0) ? s : -s;
    return Observable{zc * Z + xc * X, 1};
  };
  cs.strategy.parties.push_back(
      dichotomic_party({last_obs(0), last_obs(1), last_obs(2), last_obs(3)}));

  // Predicted value: per-branch conditional CHSH assembled with the block
  // signs, scaled by the product of visibilities.
  double total = 0;
  for (const auto& br : branches) {
    const int pair = br.class_s ^ br.class_t;
    const Mat A0 = tensor_product({Z, last_obs(2 * pair).matrix});
    const Mat A0b = tensor_product({Z, last_obs(2 * pair + 1).matrix});
    const Mat A1 = tensor_product({X, last_obs(2 * pair).matrix});
    const Mat A1b = tensor_product({X, last_obs(2 * pair + 1).matrix});
    const double sgn = br.class_s ? -1.0 : 1.0;
    const Vec& v = br.state;
    auto ev = [&](const Mat& M) { return (v.adjoint() * M * v)(0).real(); };
    total += ev(A0) + ev(A0b) + sgn * (ev(A1) - ev(A1b));
  }
  cs.predicted_value = product_visibility(cs.visibilities) * total;
  return cs;
}

}  // namespace

CanonicalStrategy canonical_chain(const std::vector<double>& thetas,
                                  ChainVariant variant,
                                  std::optional<double> vartheta,
                                  const std::vector<double>& visibilities) {
  if (int(thetas.size()) < 2) throw argument_error("chain needs n >= 3");
  if (variant == ChainVariant::ij)
    return chain_ij_strategy(thetas, vartheta, visibilities);
  return chain_bn_strategy(thetas, vartheta, visibilities);
}

CanonicalStrategy canonical_star(const std::vector<double>& thetas,
                                 std::optional<double> vartheta, bool linear,
                                 const std::vector<double>& visibilities) {
  const int n = int(thetas.size());
  if (n < 1) throw argument_error("star needs at least one branch");
  CanonicalStrategy cs;
  cs.n = n;
  cs.thetas = thetas;
  cs.visibilities = fill_visibilities(visibilities, size_t(n));
  cs.strategy.topology = make_topology(TopologyKind::star, n);
  for (int i = 0; i < n; ++i)
    cs.strategy.sources.push_back(
        make_source(thetas[size_t(i)], cs.visibilities[size_t(i)]));

  double prod_sin = 1.0;
  for (double th : thetas) prod_sin *= std::sin(2 * th);

  if (!linear) {
    cs.family = Family::star_ij;
    const double vt =
        vartheta ? *vartheta : optimal_vartheta(Family::star_ij, thetas);
    cs.varthetas = {vt};
    for (int i = 0; i < n; ++i)
      cs.strategy.parties.push_back(
          dichotomic_party({xz_observable(vt, +1), xz_observable(vt, -1)}));
    std::vector<Mat> zs(size_t(n), pauli_z()), xs(size_t(n), pauli_x());
    cs.strategy.parties.push_back(
        dichotomic_party({Observable{tensor_product(zs), n},
                          Observable{tensor_product(xs), n}}));
    cs.predicted_value =
        std::pow(product_visibility(cs.visibilities), 1.0 / n) *
        (std::cos(vt) +
         std::sin(vt) * std::pow(std::abs(prod_sin), 1.0 / n));
    return cs;
  }

  cs.family = Family::star_svetlichny;
  // Base phase of the first branch, set by scalar maximization of the
  // coefficient-weighted cosine profile (optimum -pi/4 for n >= 2).
  const auto coeff = svetlichny_coefficients(n);
  auto profile = [&](double t) {
    double g = 0;
    for (size_t x = 0; x < coeff.size(); ++x)
      g += coeff[x] *
           std::cos(t + kPi / 2 * __builtin_popcount(unsigned(x)));
    return g;
  };
  const double t =
      vartheta ? *vartheta
               : golden_section_maximize(-kPi, kPi, profile, 1e-10);
  cs.varthetas = {t};

  for (int br = 0; br < n; ++br) {
    std::vector<Observable> obs;
    for (int setting = 0; setting < 4; ++setting) {
      const int h = setting / 2, x = setting % 2;
      double phi;
      if (br == 0) {
        phi = h * kPi + t + x * kPi / 2;
      } else {
        // Conditioned on a flipped collapsed bit the equatorial phase enters
        // with the opposite sign, so pre-negate it.
        phi = (h ? -1.0 : 1.0) * (x * kPi / 2);
      }
      obs.push_back(xy_observable(phi));
    }
    cs.strategy.parties.push_back(dichotomic_party(obs));
  }
  QuantumResponse center;
  center.num_inputs = 1;
  center.num_outputs = 1 << n;
  center.table = {projective_basis(BasisKind::ghz, n)};
  cs.strategy.parties.push_back(center);

  cs.predicted_value =
      product_visibility(cs.visibilities) * prod_sin * profile(t);
  return cs;
}

HybridStrategy pr_chain_strategy(int n, const std::set<int>& classical_positions) {
  if (n < 3) throw argument_error("pr chain needs n >= 3");
  for (int p : classical_positions)
    if (p < 1 || p > n - 1)
      throw argument_error("classical source position out of range");

  HybridStrategy hs;
  hs.topology = make_topology(TopologyKind::chain, n);
  for (int s = 1; s <= n - 1; ++s) {
    if (classical_positions.count(s))
      hs.sources.push_back(ClassicalSource{{0.5, 0.5}});
    else
      hs.sources.push_back(PRBoxSource{});
  }

  // Pair adjacent free parties through each usable box from the left; every
  // unpaired party answers x * (xor of its incident classical bits).
  std::vector<bool> assigned(size_t(n), false);
  hs.parties.assign(size_t(n), PartyDesc{});
  for (int p = 1; p <= n; ++p) {
    if (assigned[size_t(p - 1)]) continue;
    if (p < n && !classical_positions.count(p) && !assigned[size_t(p)]) {
      hs.parties[size_t(p - 1)] = BoxResponse{2, p - 1};
      hs.parties[size_t(p)] = BoxResponse{2, p - 1};
      assigned[size_t(p - 1)] = assigned[size_t(p)] = true;
      continue;
    }
    // Classical fallback: symbols of incident classical sources, earlier
    // source more significant.
    std::vector<int> incident;
    for (int s : {p - 1, p})
      if (s >= 1 && s <= n - 1 && classical_positions.count(s))
        incident.push_back(s);
    const int n_sym = 1 << incident.size();
    DeterministicResponse r;
    r.num_inputs = 2;
    r.num_outputs = 2;
    for (int x = 0; x < 2; ++x)
      for (int sym = 0; sym < n_sym; ++sym) {
        int parity = 0;
        for (int b = 0; b < int(incident.size()); ++b)
          parity ^= (sym >> (int(incident.size()) - 1 - b)) & 1;
        r.table.push_back(x * parity);
      }
    hs.parties[size_t(p - 1)] = r;
    assigned[size_t(p - 1)] = true;
  }
  return hs;
}

Behavior behavior_from_pr_chain(int n, const std::set<int>& classical_positions) {
  return behavior_from_hybrid(pr_chain_strategy(n, classical_positions));
}

}  // namespace netcert
