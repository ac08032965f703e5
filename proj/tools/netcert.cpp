// Command-line front end: witness evaluation, canonical behavior generation,
// parameter sweeps, whole-network certification, topology decomposition, and
// the exhaustive classical oracle.

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "netcert/canonical.hpp"
#include "netcert/jsonio.hpp"
#include "netcert/report.hpp"

namespace {

using namespace netcert;

constexpr int kExitOk = 0;
constexpr int kExitFile = 1;
constexpr int kExitSchema = 2;
constexpr int kExitScenario = 3;

constexpr double kPi4 = 0.78539816339744831;

struct file_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw file_error("cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  if (in.bad()) throw file_error("cannot read " + path);
  return os.str();
}

void write_file(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw file_error("cannot write " + path);
  out << text;
  if (!out) throw file_error("cannot write " + path);
}

// Derives the scenario size expected by a family from the party list.
int family_n(Family family, const Scenario& sc, std::optional<int> requested) {
  int derived;
  switch (family) {
    case Family::bilocal_ij: derived = 2; break;
    case Family::chain_ij:
    case Family::linear_bn: derived = sc.num_parties(); break;
    case Family::linear_b3: derived = 3; break;
    case Family::star_ij:
    case Family::star_svetlichny: derived = sc.num_parties() - 1; break;
    default: throw argument_error("unknown family");
  }
  if (requested && *requested != derived)
    throw scenario_mismatch_error("behavior has " +
                                  std::to_string(sc.num_parties()) +
                                  " parties; inconsistent with requested n");
  return derived;
}

WitnessValue eval_family(Family family, const Behavior& b, int n) {
  switch (family) {
    case Family::bilocal_ij: return eval_bilocal_ij(b);
    case Family::chain_ij: return eval_chain_ij(b, n);
    case Family::star_ij: return eval_star_ij(b, n);
    case Family::linear_b3: return eval_linear_b3(b);
    case Family::linear_bn: return eval_linear_bn(b, n);
    case Family::star_svetlichny:
      return eval_star_svetlichny(b, n, default_conditioning(n));
  }
  throw argument_error("unknown family");
}

std::vector<double> broadcast(std::vector<double> values, size_t count,
                              double fallback, const char* what) {
  if (values.empty()) values.assign(count, fallback);
  if (values.size() == 1) values.assign(count, values[0]);
  if (values.size() != count)
    throw argument_error(std::string("expected ") + std::to_string(count) +
                         " " + what + " values");
  return values;
}

CanonicalStrategy build_canonical(Family family, int n,
                                  std::vector<double> thetas,
                                  std::vector<double> vis,
                                  std::optional<double> vartheta) {
  switch (family) {
    case Family::bilocal_ij: {
      thetas = broadcast(std::move(thetas), 2, kPi4, "theta");
      vis = broadcast(std::move(vis), 2, 1.0, "visibility");
      return canonical_bilocal(thetas[0], thetas[1], vartheta, vis);
    }
    case Family::chain_ij: {
      if (n < 3) throw argument_error("chain_ij needs n >= 3");
      thetas = broadcast(std::move(thetas), size_t(n - 1), kPi4, "theta");
      vis = broadcast(std::move(vis), size_t(n - 1), 1.0, "visibility");
      return canonical_chain(thetas, ChainVariant::ij, vartheta, vis);
    }
    case Family::linear_b3:
      n = 3;
      [[fallthrough]];
    case Family::linear_bn: {
      if (n < 3) throw argument_error("linear chain needs n >= 3");
      thetas = broadcast(std::move(thetas), size_t(n - 1), kPi4, "theta");
      vis = broadcast(std::move(vis), size_t(n - 1), 1.0, "visibility");
      return canonical_chain(thetas, ChainVariant::bn, vartheta, vis);
    }
    case Family::star_ij: {
      if (n < 1) throw argument_error("star needs n >= 1");
      thetas = broadcast(std::move(thetas), size_t(n), kPi4, "theta");
      vis = broadcast(std::move(vis), size_t(n), 1.0, "visibility");
      return canonical_star(thetas, vartheta, false, vis);
    }
    case Family::star_svetlichny: {
      if (n < 1) throw argument_error("star needs n >= 1");
      thetas = broadcast(std::move(thetas), size_t(n), kPi4, "theta");
      vis = broadcast(std::move(vis), size_t(n), 1.0, "visibility");
      return canonical_star(thetas, vartheta, true, vis);
    }
  }
  throw argument_error("unknown family");
}

int cmd_eval(const std::string& behavior_file, const std::string& family_name_,
             std::optional<int> n_opt) {
  const Family family = family_from_name(family_name_);
  const Behavior b = parse_behavior(read_file(behavior_file));
  const int n = family_n(family, b.scenario, n_opt);
  const auto report =
      make_witness_report(eval_family(family, b, n), check_no_signaling(b));
  std::cout << witness_report_to_json(report, tolerance()) << "\n";
  return kExitOk;
}

int cmd_generate(const std::string& family_name_, int n,
                 std::vector<double> thetas, std::vector<double> vis,
                 std::optional<double> vartheta, const std::string& out) {
  const Family family = family_from_name(family_name_);
  const auto cs = build_canonical(family, n, std::move(thetas), std::move(vis),
                                  vartheta);
  write_file(out, behavior_to_json(behavior_of(cs)) + "\n");
  return kExitOk;
}

int cmd_sweep(const std::string& family_name_, int n, const std::string& param,
              double start, double stop, int steps, const std::string& out) {
  const Family family = family_from_name(family_name_);
  if (family != Family::bilocal_ij && family != Family::star_ij)
    throw argument_error("sweep supports bilocal_ij and star_ij");
  if (steps < 2) throw argument_error("sweep needs steps >= 2");
  if (!(start < stop)) throw argument_error("sweep needs start < stop");
  if (param != "s" && param != "v")
    throw argument_error("swept parameter must be \"s\" (sin 2 theta product) "
                         "or \"v\" (common visibility)");
  if (family == Family::bilocal_ij) n = 2;

  std::ostringstream csv;
  csv << "param,value,nn_threshold,fnn_threshold,fqnn_threshold,nn,fnn,fqnn\n";
  const auto nn = bound_lookup(family, n, 0, Model::all_classical);
  const auto fnn = bound_lookup(family, n, 1, Model::hybrid_ns);
  const auto fqnn = bound_lookup(family, n, 1, Model::hybrid_quantum);
  for (int i = 0; i < steps; ++i) {
    const double x = start + (stop - start) * double(i) / double(steps - 1);
    std::vector<double> thetas(size_t(n), kPi4), vis(size_t(n), 1.0);
    if (param == "s") {
      const double s = std::clamp(x, 0.0, 1.0);
      if (family == Family::bilocal_ij)
        thetas[1] = 0.5 * std::asin(s);  // sin2t1 * sin2t2 = s
      else
        for (auto& t : thetas) t = 0.5 * std::asin(s);
    } else {
      for (auto& v : vis) v = std::clamp(x, 0.0, 1.0);
    }
    const auto cs = (family == Family::bilocal_ij)
                        ? canonical_bilocal(thetas[0], thetas[1], {}, vis)
                        : canonical_star(thetas, {}, false, vis);
    const auto b = behavior_of(cs);
    const auto w = (family == Family::bilocal_ij) ? eval_bilocal_ij(b)
                                                  : eval_star_ij(b, n);
    csv << format_double(x) << "," << format_double(w.value) << ","
        << format_double(nn.threshold) << "," << format_double(fnn.threshold)
        << "," << format_double(fqnn.threshold) << ","
        << (w.value > nn.threshold ? 1 : 0) << ","
        << (w.value > fnn.threshold ? 1 : 0) << ","
        << (w.value > fqnn.threshold ? 1 : 0) << "\n";
  }
  write_file(out, csv.str());
  return kExitOk;
}

int cmd_certify(const std::string& topology_file, const std::string& input_file) {
  const NetworkTopology topology = parse_topology(read_file(topology_file));
  const std::string text = read_file(input_file);

  // A strategy file carries "topology"; anything else must be a behavior.
  if (text.find("\"probabilities\"") == std::string::npos) {
    const NetworkStrategySpec spec = parse_network_strategy(text);
    if (topology_to_json(spec.topology) != topology_to_json(topology))
      throw schema_error("strategy topology differs from the topology file");
    std::cout << network_report_to_json(certify_network(topology, spec.sources))
              << "\n";
    return kExitOk;
  }

  // Behavior input: only single-subnetwork topologies can be evaluated
  // directly against a full joint behavior.
  const Behavior b = parse_behavior(text);
  NetworkReport report;
  report.topology = topology;
  report.tolerance = tolerance();
  report.cover = decompose_into_chains_and_stars(topology);
  if (report.cover.subnetworks.size() != 1)
    throw unsupported_topology_error(
        "behavior-based certification supports single-subnetwork topologies; "
        "provide a strategy file for composite networks");
  const auto& sub = report.cover.subnetworks[0];
  if (int(b.scenario.parties.size()) != int(sub.topology.parties.size()))
    throw scenario_mismatch_error("behavior party count does not match topology");
  WitnessValue w;
  if (sub.kind == SubnetworkKind::star) {
    w = eval_star_ij(b, int(sub.source_indices.size()));
  } else if (sub.source_indices.size() == 1) {
    w = eval_star_ij(b, 1);
  } else if (sub.source_indices.size() == 2) {
    w = eval_linear_b3(b);
  } else {
    w = eval_linear_bn(b, int(sub.topology.parties.size()));
  }
  report.subnetworks.push_back({sub, make_witness_report(w, check_no_signaling(b))});
  for (const char* name : {"NN", "FNN", "FQNN"})
    for (const auto& c : report.subnetworks[0].report.claims)
      if (c.claim == name) report.overall_claims.push_back(name);
  std::cout << network_report_to_json(report) << "\n";
  return kExitOk;
}

int cmd_decompose(const std::string& topology_file) {
  const NetworkTopology topology = parse_topology(read_file(topology_file));
  std::cout << cover_to_json(topology, decompose_into_chains_and_stars(topology))
            << "\n";
  return kExitOk;
}

int cmd_oracle(const std::string& family_name_, int n, int alphabet, int grid) {
  const Family family = family_from_name(family_name_);
  const double value = brute_force_classical_max(family, n, alphabet, grid);
  std::cout << "{\"family\":\"" << family_name(family) << "\",\"n\":" << n
            << ",\"value\":" << format_double(value) << "}\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"quantum network nonlocality witnesses and certification"};
  app.require_subcommand(1);

  double tol = 1e-9;
  if (const char* env = std::getenv("NETCERT_TOL")) {
    try {
      tol = std::stod(env);
    } catch (...) {
      std::cerr << "error: NETCERT_TOL is not a number\n";
      return kExitSchema;
    }
  }
  app.add_option("--tol", tol, "numerical tolerance (overrides NETCERT_TOL)");

  std::string behavior_file, family, out, param = "s", topology_file, input_file;
  int n = 0, steps = 2, alphabet = 2, grid = 9;
  std::optional<int> n_opt;
  std::optional<double> vartheta;
  double start = 0, stop = 1;
  std::vector<double> thetas, vis;

  auto* eval = app.add_subcommand("eval", "evaluate a witness on a behavior file");
  eval->add_option("behavior", behavior_file, "behavior JSON file")->required();
  eval->add_option("--family", family, "witness family")->required();
  eval->add_option("--n", n_opt, "scenario size (checked against the file)");

  auto* generate =
      app.add_subcommand("generate", "write a canonical-strategy behavior file");
  generate->add_option("--family", family, "witness family")->required();
  generate->add_option("--n", n, "scenario size");
  generate->add_option("--theta", thetas, "source angles (radians)");
  generate->add_option("--vis", vis, "source visibilities");
  generate->add_option("--vartheta", vartheta, "measurement angle override");
  generate->add_option("--out", out, "output file (default stdout)");

  auto* sweep = app.add_subcommand("sweep", "sweep a parameter to CSV");
  sweep->add_option("--family", family, "bilocal_ij or star_ij")->required();
  sweep->add_option("--n", n, "branch count for star_ij");
  sweep->add_option("--param", param, "\"s\" or \"v\"");
  sweep->add_option("--start", start, "first value")->required();
  sweep->add_option("--stop", stop, "last value")->required();
  sweep->add_option("--steps", steps, "grid points")->required();
  sweep->add_option("--out", out, "output CSV file (default stdout)");

  auto* certify = app.add_subcommand("certify", "certify a whole network");
  certify->add_option("topology", topology_file, "topology JSON file")->required();
  certify->add_option("input", input_file, "strategy or behavior JSON file")
      ->required();

  auto* decompose =
      app.add_subcommand("decompose", "cover a topology with chains and stars");
  decompose->add_option("topology", topology_file, "topology JSON file")
      ->required();

  auto* oracle =
      app.add_subcommand("oracle", "exhaustive classical maximum of a family");
  oracle->add_option("--family", family, "witness family")->required();
  oracle->add_option("--n", n, "scenario size");
  oracle->add_option("--alphabet", alphabet, "classical symbol count per source");
  oracle->add_option("--grid", grid, "prior grid points per source");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitSchema;
  }

  set_tolerance(tol);
  try {
    if (eval->parsed()) return cmd_eval(behavior_file, family, n_opt);
    if (generate->parsed())
      return cmd_generate(family, n, thetas, vis, vartheta, out);
    if (sweep->parsed())
      return cmd_sweep(family, n, param, start, stop, steps, out);
    if (certify->parsed()) return cmd_certify(topology_file, input_file);
    if (decompose->parsed()) return cmd_decompose(topology_file);
    if (oracle->parsed()) return cmd_oracle(family, n, alphabet, grid);
  } catch (const file_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFile;
  } catch (const scenario_mismatch_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitScenario;
  } catch (const resource_error& e) {
    std::cerr << "error: " << e.what()
              << " (partial maximum: " << format_double(e.partial_maximum)
              << ")\n";
    return kExitSchema;
  } catch (const schema_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitSchema;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitSchema;
  }
  return kExitSchema;
}
