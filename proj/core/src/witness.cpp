#include "netcert/witness.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

namespace netcert {

namespace {

constexpr double kSqrt2 = 1.4142135623730950488;

void require(bool ok, const std::string& what) {
  if (!ok) throw scenario_mismatch_error(what);
}

void require_party(const Scenario& s, int p, int inputs, int outputs,
                   const std::string& family) {
  const auto& ps = s.parties[size_t(p)];
  if (ps.num_inputs != inputs || ps.num_outputs != outputs) {
    std::ostringstream os;
    os << family << ": party " << ps.name << " must have " << inputs
       << " inputs and " << outputs << " outputs (got " << ps.num_inputs << ","
       << ps.num_outputs << ")";
    throw scenario_mismatch_error(os.str());
  }
}

}  // namespace

std::string family_name(Family f) {
  switch (f) {
    case Family::bilocal_ij: return "bilocal_ij";
    case Family::chain_ij: return "chain_ij";
    case Family::star_ij: return "star_ij";
    case Family::linear_b3: return "linear_b3";
    case Family::linear_bn: return "linear_bn";
    case Family::star_svetlichny: return "star_svetlichny";
  }
  throw argument_error("unknown family");
}

Family family_from_name(const std::string& name) {
  if (name == "bilocal_ij") return Family::bilocal_ij;
  if (name == "chain_ij") return Family::chain_ij;
  if (name == "star_ij") return Family::star_ij;
  if (name == "linear_b3") return Family::linear_b3;
  if (name == "linear_bn") return Family::linear_bn;
  if (name == "star_svetlichny") return Family::star_svetlichny;
  throw argument_error("unknown witness family: " + name);
}

std::string model_name(Model m) {
  switch (m) {
    case Model::all_classical: return "all_classical";
    case Model::hybrid_ns: return "hybrid_ns";
    case Model::hybrid_quantum: return "hybrid_quantum";
    case Model::quantum_max: return "quantum_max";
  }
  throw argument_error("unknown model");
}

WitnessValue eval_bilocal_ij(const Behavior& b) {
  require(b.scenario.num_parties() == 3, "bilocal_ij: expected 3 parties");
  require_party(b.scenario, 0, 2, 2, "bilocal_ij");
  require_party(b.scenario, 1, 1, 4, "bilocal_ij");
  require_party(b.scenario, 2, 2, 2, "bilocal_ij");

  double I = 0, J = 0;
  for (int x = 0; x < 2; ++x)
    for (int z = 0; z < 2; ++z) {
      I += 0.25 * correlator(b, {x, 0, z}, {{-1}, {0}, {-1}});
      const double sgn = ((x + z) % 2) ? -1.0 : 1.0;
      J += 0.25 * sgn * correlator(b, {x, 0, z}, {{-1}, {1}, {-1}});
    }
  WitnessValue w{Family::bilocal_ij, 2, std::sqrt(std::abs(I)) + std::sqrt(std::abs(J)), {}};
  w.components = {{"I", I}, {"J", J}};
  return w;
}

WitnessValue eval_chain_ij(const Behavior& b, int n) {
  if (n < 3 || n % 2 == 0)
    throw argument_error("chain_ij requires odd n >= 3");
  require(b.scenario.num_parties() == n, "chain_ij: wrong party count");
  for (int p = 0; p < n; ++p) require_party(b.scenario, p, 2, 2, "chain_ij");

  // Odd-position parties (1-based 1,3,...,n) are summed over both inputs;
  // even-position parties sit at input 0 (for I) or 1 (for J).
  const int k = (n + 1) / 2;
  const double norm = 1.0 / double(1 << k);
  std::vector<SignRule> signs(size_t(n), SignRule{-1});
  double I = 0, J = 0;
  for (int mask = 0; mask < (1 << k); ++mask) {
    std::vector<int> xi(size_t(n), 0), xj(size_t(n), 1);
    int parity = 0;
    for (int o = 0; o < k; ++o) {
      const int bit = (mask >> (k - 1 - o)) & 1;
      xi[size_t(2 * o)] = bit;
      xj[size_t(2 * o)] = bit;
      parity ^= bit;
    }
    I += norm * correlator(b, xi, signs);
    J += norm * (parity ? -1.0 : 1.0) * correlator(b, xj, signs);
  }
  const double e = 2.0 / double(n + 1);
  WitnessValue w{Family::chain_ij, n,
                 std::pow(std::abs(I), e) + std::pow(std::abs(J), e), {}};
  w.components = {{"I", I}, {"J", J}};
  return w;
}

WitnessValue eval_star_ij(const Behavior& b, int n) {
  if (n < 1) throw argument_error("star_ij requires n >= 1");
  require(b.scenario.num_parties() == n + 1, "star_ij: wrong party count");
  for (int p = 0; p <= n; ++p) require_party(b.scenario, p, 2, 2, "star_ij");

  const double norm = 1.0 / double(1 << n);
  std::vector<SignRule> signs(size_t(n + 1), SignRule{-1});
  double I = 0, J = 0;
  for (int mask = 0; mask < (1 << n); ++mask) {
    std::vector<int> x(size_t(n + 1), 0);
    int parity = 0;
    for (int p = 0; p < n; ++p) {
      x[size_t(p)] = (mask >> (n - 1 - p)) & 1;
      parity ^= x[size_t(p)];
    }
    x[size_t(n)] = 0;
    I += norm * correlator(b, x, signs);
    x[size_t(n)] = 1;
    J += norm * (parity ? -1.0 : 1.0) * correlator(b, x, signs);
  }
  const double e = 1.0 / double(n);
  WitnessValue w{Family::star_ij, n,
                 std::pow(std::abs(I), e) + std::pow(std::abs(J), e), {}};
  w.components = {{"I", I}, {"J", J}};
  return w;
}

namespace {

// One signed three-party correlator term: Alice input x, middle outcome b,
// Charlie input z.
struct B3Term {
  int x, bob, z, sign;
};

// The 16 terms, grouped in four CHSH-like rows (two Bob outcomes per row).
constexpr B3Term kB3Terms[16] = {
    {0, 0, 0, +1}, {0, 1, 0, +1}, {0, 0, 1, +1}, {0, 1, 1, -1},
    {1, 0, 0, +1}, {1, 1, 0, +1}, {1, 0, 1, -1}, {1, 1, 1, +1},
    {0, 2, 1, +1}, {0, 3, 1, -1}, {0, 2, 2, +1}, {0, 3, 2, +1},
    {1, 2, 1, -1}, {1, 3, 1, +1}, {1, 2, 2, +1}, {1, 3, 2, +1},
};

}  // namespace

WitnessValue eval_linear_b3(const Behavior& b) {
  require(b.scenario.num_parties() == 3, "linear_b3: expected 3 parties");
  require_party(b.scenario, 0, 2, 2, "linear_b3");
  require_party(b.scenario, 1, 1, 4, "linear_b3");
  require_party(b.scenario, 2, 3, 2, "linear_b3");

  double rows[4] = {0, 0, 0, 0};
  for (int t = 0; t < 16; ++t) {
    const auto& term = kB3Terms[t];
    double corr = 0;
    for (int a = 0; a < 2; ++a)
      for (int c = 0; c < 2; ++c)
        corr += ((a + c) % 2 ? -1.0 : 1.0) *
                b.prob({term.x, 0, term.z}, {a, term.bob, c});
    rows[t / 4] += term.sign * corr;
  }
  WitnessValue w{Family::linear_b3, 3, rows[0] + rows[1] + rows[2] + rows[3], {}};
  for (int r = 0; r < 4; ++r)
    w.components.emplace_back("row_" + std::to_string(r), rows[r]);
  return w;
}

WitnessValue eval_linear_bn(const Behavior& b, int n) {
  if (n < 3) throw argument_error("linear_bn requires n >= 3");
  require(b.scenario.num_parties() == n, "linear_bn: wrong party count");
  require_party(b.scenario, 0, 2, 2, "linear_bn");
  for (int p = 1; p < n - 1; ++p) require_party(b.scenario, p, 1, 4, "linear_bn");
  require_party(b.scenario, n - 1, 4, 2, "linear_bn");

  // C[x1][xn][s][t]: endpoint correlator against the XOR-accumulated middle
  // outcome class st.  A 4-outcome label m carries bits (m>>1, m&1); the class
  // bits are s = m&1, t = (m>>1) ^ (m&1), XORed across the middles.
  double C[2][4][2][2] = {};
  const int n_mid = n - 2;
  std::vector<int> mid(size_t(n_mid), 0);
  for (;;) {
    int s = 0, t = 0;
    for (int m : mid) {
      s ^= m & 1;
      t ^= ((m >> 1) ^ m) & 1;
    }
    for (int x1 = 0; x1 < 2; ++x1)
      for (int xn = 0; xn < 4; ++xn) {
        std::vector<int> inputs(size_t(n), 0);
        inputs[0] = x1;
        inputs[size_t(n - 1)] = xn;
        for (int a1 = 0; a1 < 2; ++a1)
          for (int an = 0; an < 2; ++an) {
            std::vector<int> outputs(size_t(n), 0);
            outputs[0] = a1;
            outputs[size_t(n - 1)] = an;
            for (int p = 0; p < n_mid; ++p) outputs[size_t(p + 1)] = mid[size_t(p)];
            C[x1][xn][s][t] += ((a1 + an) % 2 ? -1.0 : 1.0) *
                               b.prob(inputs, outputs);
          }
      }
    int p = n_mid - 1;
    while (p >= 0 && ++mid[size_t(p)] == 4) mid[size_t(p--)] = 0;
    if (p < 0) break;
  }

  const double blocks[4] = {
      C[0][0][0][0] + C[0][1][0][0] + C[0][0][1][1] + C[0][1][1][1],
      C[1][0][0][0] - C[1][1][0][0] - C[1][0][1][1] + C[1][1][1][1],
      C[0][2][0][1] + C[0][3][0][1] + C[0][2][1][0] + C[0][3][1][0],
      C[1][2][0][1] - C[1][3][0][1] - C[1][2][1][0] + C[1][3][1][0],
  };
  WitnessValue w{Family::linear_bn, n,
                 blocks[0] + blocks[1] + blocks[2] + blocks[3], {}};
  for (int k = 0; k < 4; ++k)
    w.components.emplace_back("block_" + std::to_string(k), blocks[k]);
  return w;
}

std::vector<int> svetlichny_coefficients(int n) {
  if (n < 1) throw argument_error("svetlichny_coefficients requires n >= 1");
  std::vector<int> c(size_t(1) << n, 0);
  if (n == 1) {
    c[0] = 1;  // single observable at input 0
    return c;
  }
  for (size_t x = 0; x < c.size(); ++x) {
    const int w = __builtin_popcount(unsigned(x));
    c[x] = (w / 2) % 2 ? -1 : 1;
  }
  return c;
}

Conditioning default_conditioning(int n) {
  Conditioning cond;
  cond.offsets.resize(size_t(1) << n);
  for (int i = 0; i < (1 << n); ++i) {
    cond.offsets[size_t(i)].resize(size_t(n));
    for (int br = 0; br < n; ++br)
      cond.offsets[size_t(i)][size_t(br)] = 2 * ((i >> (n - 1 - br)) & 1);
  }
  return cond;
}

WitnessValue eval_star_svetlichny(const Behavior& b, int n,
                                  const Conditioning& cond) {
  if (n < 1) throw argument_error("star_svetlichny requires n >= 1");
  require(b.scenario.num_parties() == n + 1, "star_svetlichny: wrong party count");
  const int n_central = 1 << n;
  for (int p = 0; p < n; ++p) {
    const auto& ps = b.scenario.parties[size_t(p)];
    if (ps.num_outputs != 2)
      throw scenario_mismatch_error("star_svetlichny: branch must be dichotomic");
  }
  {
    const auto& cps = b.scenario.parties[size_t(n)];
    if (cps.num_inputs != 1 || cps.num_outputs != n_central)
      throw scenario_mismatch_error(
          "star_svetlichny: central party must be (1 input, 2^n outputs)");
  }
  if (int(cond.offsets.size()) != n_central)
    throw argument_error("conditioning must cover every central outcome");
  for (const auto& row : cond.offsets) {
    if (int(row.size()) != n)
      throw argument_error("conditioning must assign an offset per branch");
    for (int br = 0; br < n; ++br)
      if (row[size_t(br)] < 0 ||
          row[size_t(br)] + 1 > b.scenario.parties[size_t(br)].num_inputs - 1)
        throw argument_error("conditioning offset out of setting range");
  }

  const auto coeff = svetlichny_coefficients(n);
  WitnessValue w{Family::star_svetlichny, n, 0.0, {}};
  for (int central = 0; central < n_central; ++central) {
    double score = 0;
    for (int x = 0; x < (1 << n); ++x) {
      std::vector<int> inputs(size_t(n + 1), 0);
      for (int br = 0; br < n; ++br)
        inputs[size_t(br)] =
            cond.offsets[size_t(central)][size_t(br)] + ((x >> (n - 1 - br)) & 1);
      const long xi = b.input_index(inputs);
      for (int a = 0; a < (1 << n); ++a) {
        std::vector<int> outputs(size_t(n + 1), 0);
        for (int br = 0; br < n; ++br) outputs[size_t(br)] = (a >> (n - 1 - br)) & 1;
        outputs[size_t(n)] = central;
        const double sgn = __builtin_popcount(unsigned(a)) % 2 ? -1.0 : 1.0;
        score += coeff[size_t(x)] * sgn * b.at(xi, b.output_index(outputs));
      }
    }
    std::string label;
    for (int br = 0; br < n; ++br)
      label += char('0' + ((central >> (n - 1 - br)) & 1));
    w.components.emplace_back("score_" + label, score);
    w.value += score;
  }
  return w;
}

// --- Bounds ---------------------------------------------------------------

namespace {

double quantum_max_of(Family family, int n) {
  switch (family) {
    case Family::bilocal_ij:
    case Family::chain_ij:
    case Family::star_ij:
      return kSqrt2;
    case Family::linear_b3:
    case Family::linear_bn:
      return 2.0 * kSqrt2;
    case Family::star_svetlichny:
      return double(1 << (n - 1)) * kSqrt2;
  }
  throw argument_error("unknown family");
}

double threshold_of(Family family, int n, int parameter, Model model) {
  switch (family) {
    case Family::bilocal_ij:
      switch (model) {
        case Model::all_classical: return 1.0;
        case Model::hybrid_ns:
          if (parameter != 1) throw argument_error("bilocal hybrid bound requires l=1");
          return kSqrt2;
        case Model::hybrid_quantum:
          if (parameter != 1) throw argument_error("bilocal hybrid bound requires l=1");
          return std::pow(2.0, 0.25);
        case Model::quantum_max: return kSqrt2;
      }
      break;
    case Family::chain_ij: {
      if (n < 3) throw argument_error("chain bounds require n >= 3");
      if (n % 2 == 0) {
        // Even chains are certified through their two odd subchains; the
        // effective bound is the (n-1)-chain bound one level down.
        if (model == Model::all_classical || model == Model::quantum_max)
          return threshold_of(family, n - 1, 0, model);
        if (parameter < 1) throw argument_error("even-chain bound requires parameter >= 1");
        return threshold_of(family, n - 1, parameter - 1, model);
      }
      switch (model) {
        case Model::all_classical: return 1.0;
        case Model::hybrid_ns: {
          // parameter = |S|, the count of odd-position parties holding only
          // classical systems.
          if (parameter < 0 || parameter > (n + 1) / 2)
            throw argument_error("chain hybrid_ns parameter out of range");
          return std::pow(2.0, 1.0 - 2.0 * parameter / double(n + 1));
        }
        case Model::hybrid_quantum: {
          if (parameter < 1 || parameter > n - 1)
            throw argument_error("chain hybrid_quantum parameter out of range");
          if (2 * parameter >= n - 1)
            return std::pow(2.0, double(n - 1) / double(2 * (n + 1)));
          return kSqrt2;
        }
        case Model::quantum_max: return kSqrt2;
      }
      break;
    }
    case Family::star_ij:
      switch (model) {
        case Model::all_classical: return 1.0;
        case Model::hybrid_ns:
          if (parameter < 1 || parameter > n)
            throw argument_error("star hybrid_ns parameter out of range");
          return std::pow(2.0, double(n - parameter) / double(n));
        case Model::hybrid_quantum:
          if (parameter < 1 || parameter > n)
            throw argument_error("star hybrid_quantum parameter out of range");
          return std::pow(2.0, double(n - parameter) / double(2 * n));
        case Model::quantum_max: return kSqrt2;
      }
      break;
    case Family::linear_b3:
    case Family::linear_bn:
      switch (model) {
        case Model::all_classical: return 2.0;
        case Model::hybrid_ns:
        case Model::hybrid_quantum:
          if (parameter < 1 || parameter > std::max(1, n - 1))
            throw argument_error("linear hybrid parameter out of range");
          return 2.0;
        case Model::quantum_max: return 2.0 * kSqrt2;
      }
      break;
    case Family::star_svetlichny:
      switch (model) {
        case Model::all_classical: return double(1 << (n - 1));
        case Model::hybrid_ns:
        case Model::hybrid_quantum:
          if (parameter < 1 || parameter > n)
            throw argument_error("svetlichny hybrid parameter out of range");
          return double(1 << (n - 1));
        case Model::quantum_max: return double(1 << (n - 1)) * kSqrt2;
      }
      break;
  }
  throw argument_error("unknown bound combination");
}

}  // namespace

BoundSpec bound_lookup(Family family, int n, int parameter, Model model) {
  BoundSpec spec{family, n, parameter, model,
                 threshold_of(family, n, parameter, model), false};
  spec.detectable = spec.threshold < quantum_max_of(family, n) - 1e-12;
  return spec;
}

std::vector<BoundSpec> bound_table(Family family, int n) {
  std::vector<BoundSpec> rows;
  rows.push_back(bound_lookup(family, n, 0, Model::all_classical));
  switch (family) {
    case Family::bilocal_ij:
      rows.push_back(bound_lookup(family, n, 1, Model::hybrid_ns));
      rows.push_back(bound_lookup(family, n, 1, Model::hybrid_quantum));
      break;
    case Family::chain_ij: {
      const int n_odd = (n % 2 == 0) ? n - 1 : n;
      for (int s = 0; s <= (n_odd + 1) / 2; ++s)
        rows.push_back(bound_lookup(family, n_odd, s, Model::hybrid_ns));
      for (int l = 1; l <= n_odd - 1; ++l)
        rows.push_back(bound_lookup(family, n_odd, l, Model::hybrid_quantum));
      break;
    }
    case Family::star_ij:
      for (int l = 1; l <= n; ++l)
        rows.push_back(bound_lookup(family, n, l, Model::hybrid_ns));
      for (int l = 1; l <= n; ++l)
        rows.push_back(bound_lookup(family, n, l, Model::hybrid_quantum));
      break;
    case Family::linear_b3:
    case Family::linear_bn:
    case Family::star_svetlichny:
      rows.push_back(bound_lookup(family, n, 1, Model::hybrid_ns));
      rows.push_back(bound_lookup(family, n, 1, Model::hybrid_quantum));
      break;
  }
  rows.push_back(bound_lookup(family, n, 0, Model::quantum_max));
  return rows;
}

int min_isolated_parties(int n, int l) {
  if (n < 3 || n % 2 == 0) throw argument_error("requires odd chain length >= 3");
  if (l < 0 || l > n - 1) throw argument_error("classical-source count out of range");
  // n-1-l quantum sources can shield at most n-1-l of the (n+1)/2 odd-position
  // parties from being fully classical.
  return std::max(0, (n + 1) / 2 - (n - 1 - l));
}

namespace {

void maybe_claim(std::vector<CertificationClaim>& claims, double value,
                 const std::string& name, int level, double threshold) {
  if (value > threshold)
    claims.push_back({name, level, threshold, value - threshold});
}

}  // namespace

std::vector<CertificationClaim> certify(const WitnessValue& w) {
  std::vector<CertificationClaim> claims;
  const double v = w.value;
  const int n = w.n;
  switch (w.family) {
    case Family::bilocal_ij:
      maybe_claim(claims, v, "NN", 2, 1.0);
      maybe_claim(claims, v, "FNN", 1,
                  bound_lookup(w.family, n, 1, Model::hybrid_ns).threshold);
      maybe_claim(claims, v, "FQNN", 1,
                  bound_lookup(w.family, n, 1, Model::hybrid_quantum).threshold);
      break;
    case Family::chain_ij: {
      if (n % 2 == 0)
        throw argument_error("even chains are certified from both odd marginals");
      maybe_claim(claims, v, "NN", n - 1, 1.0);
      // l-NN needs every shielding assignment to leave an isolated party.
      for (int l = (3 * n - 1 + 3) / 4; l <= n - 1; ++l) {
        const int s = min_isolated_parties(n, l);
        const auto b = bound_lookup(w.family, n, s, Model::hybrid_ns);
        maybe_claim(claims, v, "l-NN", l, b.threshold);
      }
      // l-QNN is only sound when classical sources are the majority.
      for (int l = n / 2 + 1; l <= n - 1; ++l) {
        const auto b = bound_lookup(w.family, n, l, Model::hybrid_quantum);
        maybe_claim(claims, v, "l-QNN", l, b.threshold);
      }
      break;
    }
    case Family::star_ij: {
      maybe_claim(claims, v, "NN", n, 1.0);
      for (int l = 1; l <= n; ++l) {
        const auto b = bound_lookup(w.family, n, l, Model::hybrid_ns);
        maybe_claim(claims, v, l == 1 ? "FNN" : "l-NN", l, b.threshold);
      }
      for (int l = 1; l <= n; ++l) {
        const auto b = bound_lookup(w.family, n, l, Model::hybrid_quantum);
        maybe_claim(claims, v, l == 1 ? "FQNN" : "l-QNN", l, b.threshold);
      }
      break;
    }
    case Family::linear_b3:
    case Family::linear_bn: {
      const int sources = (w.family == Family::linear_b3) ? 2 : n - 1;
      maybe_claim(claims, v, "NN", sources, 2.0);
      maybe_claim(claims, v, "FNN", 1, 2.0);
      maybe_claim(claims, v, "FQNN", 1, 2.0);
      break;
    }
    case Family::star_svetlichny: {
      const double t = double(1 << (n - 1));
      maybe_claim(claims, v, "NN", n, t);
      maybe_claim(claims, v, "FNN", 1, t);
      maybe_claim(claims, v, "FQNN", 1, t);
      break;
    }
  }
  // Deterministic order: NN, then no-signaling claims by level, then quantum
  // claims by level.
  auto rank = [](const CertificationClaim& c) {
    if (c.claim == "NN") return 0;
    if (c.claim == "FNN" || c.claim == "l-NN") return 1;
    return 2;
  };
  std::stable_sort(claims.begin(), claims.end(),
                   [&](const CertificationClaim& a, const CertificationClaim& b) {
                     if (rank(a) != rank(b)) return rank(a) < rank(b);
                     return a.level < b.level;
                   });
  return claims;
}

std::vector<CertificationClaim> certify_chain_even(const Behavior& b, int n,
                                                   int fixed_input) {
  if (n < 4 || n % 2 != 0)
    throw argument_error("certify_chain_even requires even n >= 4");
  require(b.scenario.num_parties() == n, "chain_ij: wrong party count");
  const std::string first = b.scenario.parties.front().name;
  const std::string last = b.scenario.parties.back().name;
  const auto left = eval_chain_ij(marginalize_behavior(b, last, fixed_input), n - 1);
  const auto right = eval_chain_ij(marginalize_behavior(b, first, fixed_input), n - 1);
  const auto cl = certify(left);
  const auto cr = certify(right);

  // A claim survives only if both subchains make it; levels lift by one
  // because the dropped endpoint's source is unconstrained.
  std::vector<CertificationClaim> claims;
  for (const auto& a : cl)
    for (const auto& c : cr) {
      if (a.claim != c.claim || a.level != c.level) continue;
      CertificationClaim lifted = a;
      lifted.margin = std::min(a.margin, c.margin);
      if (a.claim == "NN") {
        lifted.level = n - 1;
      } else {
        lifted.level = a.level + 1;
        if (a.claim == "FNN") lifted.claim = "l-NN";
        if (a.claim == "FQNN") lifted.claim = "l-QNN";
      }
      claims.push_back(lifted);
    }
  return claims;
}

// --- Classical oracle -----------------------------------------------------

namespace {

double oracle_bilocal(int alphabet, int grid) {
  if (alphabet > 2 || grid > 9)
    throw resource_error("bilocal oracle supports alphabet <= 2, grid <= 9", 1.0);
  const int al = alphabet;
  const int n_resp = 1 << (2 * al);  // dichotomic response to (x, symbol)
  int n_bob_resp = 1;
  for (int i = 0; i < al * al; ++i) n_bob_resp *= 4;

  // Prior grid: weight of symbol 0 on each source.
  std::vector<double> weights;
  if (al == 1) {
    weights.push_back(1.0);
  } else {
    for (int g = 0; g < grid; ++g)
      weights.push_back(grid == 1 ? 0.5 : double(g) / double(grid - 1));
  }

  double best = 0;
  for (int ra = 0; ra < n_resp; ++ra)
    for (int rc = 0; rc < n_resp; ++rc) {
      // Per-symbol correlator sums and CHSH-signed sums for each endpoint.
      double aplus[2], aminus[2], cplus[2], cminus[2];
      for (int lam = 0; lam < al; ++lam) {
        auto sgn = [](int resp, int x, int lam_, int al_) {
          return (resp >> (x * al_ + lam_)) & 1 ? -1.0 : 1.0;
        };
        aplus[lam] = sgn(ra, 0, lam, al) + sgn(ra, 1, lam, al);
        aminus[lam] = sgn(ra, 0, lam, al) - sgn(ra, 1, lam, al);
        cplus[lam] = sgn(rc, 0, lam, al) + sgn(rc, 1, lam, al);
        cminus[lam] = sgn(rc, 0, lam, al) - sgn(rc, 1, lam, al);
      }
      for (int rb = 0; rb < n_bob_resp; ++rb) {
        // Bob outcome for each symbol pair.
        int bob[2][2];
        int rem = rb;
        for (int l1 = 0; l1 < al; ++l1)
          for (int l2 = 0; l2 < al; ++l2) {
            bob[l1][l2] = rem % 4;
            rem /= 4;
          }
        for (double w1 : weights)
          for (double w2 : weights) {
            double I = 0, J = 0;
            for (int l1 = 0; l1 < al; ++l1)
              for (int l2 = 0; l2 < al; ++l2) {
                const double p = (l1 ? 1.0 - w1 : w1) * (l2 ? 1.0 - w2 : w2);
                if (p == 0) continue;
                const double s0 = (bob[l1][l2] >> 1) & 1 ? -1.0 : 1.0;
                const double s1 = bob[l1][l2] & 1 ? -1.0 : 1.0;
                I += 0.25 * p * s0 * aplus[l1] * cplus[l2];
                J += 0.25 * p * s1 * aminus[l1] * cminus[l2];
              }
            best = std::max(best,
                            std::sqrt(std::abs(I)) + std::sqrt(std::abs(J)));
          }
      }
    }
  return best;
}

double oracle_b3() {
  double best = -1e9;
  for (int ra = 0; ra < 4; ++ra)          // a(x) for x in {0,1}
    for (int rc = 0; rc < 8; ++rc)        // c(z) for z in {0,1,2}
      for (int bob = 0; bob < 4; ++bob) {  // fixed middle outcome
        double v = 0;
        for (const auto& term : kB3Terms) {
          if (term.bob != bob) continue;
          const int a = (ra >> term.x) & 1;
          const int c = (rc >> term.z) & 1;
          v += term.sign * ((a + c) % 2 ? -1.0 : 1.0);
        }
        best = std::max(best, v);
      }
  return best;
}

double oracle_bn(int n) {
  if (n < 3 || n > 8)
    throw resource_error("linear_bn oracle supports 3 <= n <= 8", 2.0);
  const int n_mid = n - 2;
  long n_mid_assign = 1;
  for (int i = 0; i < n_mid; ++i) n_mid_assign *= 4;

  double best = -1e9;
  for (long mids = 0; mids < n_mid_assign; ++mids) {
    int s = 0, t = 0;
    long rem = mids;
    for (int i = 0; i < n_mid; ++i) {
      const int m = int(rem % 4);
      rem /= 4;
      s ^= m & 1;
      t ^= ((m >> 1) ^ m) & 1;
    }
    for (int ra = 0; ra < 4; ++ra)        // a1(x1), x1 in {0,1}
      for (int rn = 0; rn < 16; ++rn) {   // an(xn), xn in {0..3}
        auto sa = [&](int x) { return (ra >> x) & 1 ? -1.0 : 1.0; };
        auto sn = [&](int x) { return (rn >> x) & 1 ? -1.0 : 1.0; };
        double v = 0;
        if (s == 0 && t == 0)
          v = sa(0) * (sn(0) + sn(1)) + sa(1) * (sn(0) - sn(1));
        else if (s == 1 && t == 1)
          v = sa(0) * (sn(0) + sn(1)) - sa(1) * (sn(0) - sn(1));
        else if (s == 0 && t == 1)
          v = sa(0) * (sn(2) + sn(3)) + sa(1) * (sn(2) - sn(3));
        else
          v = sa(0) * (sn(2) + sn(3)) - sa(1) * (sn(2) - sn(3));
        best = std::max(best, v);
      }
  }
  return best;
}

double oracle_svetlichny(int n) {
  if (n < 1 || n > 5)
    throw resource_error("star_svetlichny oracle supports n <= 5",
                         double(1 << std::max(0, n - 1)));
  const auto coeff = svetlichny_coefficients(n);
  // Deterministic center fixes one outcome; each branch then answers only its
  // two conditioned settings, so a strategy is n independent bit pairs.
  long n_branch_assign = 1;
  for (int i = 0; i < n; ++i) n_branch_assign *= 4;
  double best = -1e9;
  for (long resp = 0; resp < n_branch_assign; ++resp) {
    double v = 0;
    for (int x = 0; x < (1 << n); ++x) {
      double sgn = coeff[size_t(x)];
      long rem = resp;
      for (int br = 0; br < n; ++br) {
        const int pair = int(rem % 4);
        rem /= 4;
        const int bit = (x >> (n - 1 - br)) & 1;
        if ((pair >> bit) & 1) sgn = -sgn;
      }
      v += sgn;
    }
    best = std::max(best, v);
  }
  return best;  // independent of which central outcome the center fixes
}

}  // namespace

double brute_force_classical_max(Family family, int n, int alphabet, int grid) {
  switch (family) {
    case Family::bilocal_ij:
      return oracle_bilocal(alphabet, grid);
    case Family::linear_b3:
      return oracle_b3();
    case Family::linear_bn:
      return oracle_bn(n);
    case Family::star_svetlichny:
      return oracle_svetlichny(n);
    case Family::chain_ij:
    case Family::star_ij:
      // The nonlinear multi-source search spaces exceed the enumeration
      // budget; the deterministic all-equal point gives the trivial partial.
      throw resource_error("enumeration budget exceeded for " +
                               family_name(family),
                           1.0);
  }
  throw argument_error("unknown family");
}

}  // namespace netcert
