#include "netcert/jsonio.hpp"

#include <charconv>
#include <cmath>
#include <sstream>

#include <json.hpp>

namespace netcert {

using json = nlohmann::json;

std::string format_double(double v) {
  if (std::isnan(v)) return "null";
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v,
                           std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

namespace {

json parse_json(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw schema_error("input is not valid JSON");
  return j;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof(buf), "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  return out;
}

std::string quoted(const std::string& s) { return "\"" + escape(s) + "\""; }

}  // namespace

namespace {
NetworkTopology topology_from_json(const json& j) {
  if (!j.is_object() || !j.contains("parties") || !j.contains("sources"))
    throw schema_error("topology needs \"parties\" and \"sources\"");
  NetworkTopology t;
  if (!j["parties"].is_array()) throw schema_error("\"parties\" must be an array");
  for (const auto& p : j["parties"]) {
    if (!p.is_string()) throw schema_error("party names must be strings");
    t.parties.push_back(p.get<std::string>());
  }
  if (!j["sources"].is_array()) throw schema_error("\"sources\" must be an array");
  for (const auto& s : j["sources"]) {
    if (!s.is_array()) throw schema_error("each source must be an array of parties");
    std::vector<std::string> fed;
    for (const auto& p : s) {
      if (!p.is_string()) throw schema_error("source entries must be party names");
      fed.push_back(p.get<std::string>());
    }
    t.sources.push_back(fed);
  }
  try {
    validate(t);
  } catch (const argument_error& e) {
    throw schema_error(std::string("invalid topology: ") + e.what());
  }
  return t;
}
}  // namespace

NetworkTopology parse_topology(const std::string& text) {
  return topology_from_json(parse_json(text));
}

std::string topology_to_json(const NetworkTopology& t) {
  std::ostringstream os;
  os << "{\"parties\":[";
  for (size_t i = 0; i < t.parties.size(); ++i)
    os << (i ? "," : "") << quoted(t.parties[i]);
  os << "],\"sources\":[";
  for (size_t i = 0; i < t.sources.size(); ++i) {
    os << (i ? "," : "") << "[";
    for (size_t k = 0; k < t.sources[i].size(); ++k)
      os << (k ? "," : "") << quoted(t.sources[i][k]);
    os << "]";
  }
  os << "]}";
  return os.str();
}

Behavior parse_behavior(const std::string& text) {
  const json j = parse_json(text);
  if (!j.is_object() || !j.contains("scenario") || !j.contains("probabilities"))
    throw schema_error("behavior needs \"scenario\" and \"probabilities\"");
  const json& sc = j["scenario"];
  if (!sc.is_object() || !sc.contains("parties") || !sc["parties"].is_array())
    throw schema_error("\"scenario\" needs a \"parties\" array");
  Behavior b;
  for (const auto& p : sc["parties"]) {
    if (!p.is_object() || !p.contains("name") || !p.contains("inputs") ||
        !p.contains("outputs"))
      throw schema_error("each party needs \"name\", \"inputs\", \"outputs\"");
    if (!p["name"].is_string() || !p["inputs"].is_number_integer() ||
        !p["outputs"].is_number_integer())
      throw schema_error("party fields have the wrong types");
    b.scenario.parties.push_back({p["name"].get<std::string>(),
                                  p["inputs"].get<int>(),
                                  p["outputs"].get<int>()});
  }
  if (!j["probabilities"].is_array())
    throw schema_error("\"probabilities\" must be an array");
  for (const auto& v : j["probabilities"]) {
    if (!v.is_number()) throw schema_error("probabilities must be numbers");
    b.table.push_back(v.get<double>());
  }
  try {
    validate(b);
  } catch (const argument_error& e) {
    throw schema_error(std::string("invalid behavior: ") + e.what());
  }
  return b;
}

std::string behavior_to_json(const Behavior& b) {
  std::ostringstream os;
  os << "{\"scenario\":{\"parties\":[";
  for (size_t i = 0; i < b.scenario.parties.size(); ++i) {
    const auto& p = b.scenario.parties[i];
    os << (i ? "," : "") << "{\"name\":" << quoted(p.name)
       << ",\"inputs\":" << p.num_inputs << ",\"outputs\":" << p.num_outputs
       << "}";
  }
  os << "]},\"probabilities\":[";
  for (size_t i = 0; i < b.table.size(); ++i)
    os << (i ? "," : "") << format_double(b.table[i]);
  os << "]}";
  return os.str();
}

NetworkStrategySpec parse_network_strategy(const std::string& text) {
  const json j = parse_json(text);
  if (!j.is_object() || !j.contains("topology") || !j.contains("sources"))
    throw schema_error("strategy needs \"topology\" and \"sources\"");
  NetworkStrategySpec spec;
  spec.topology = topology_from_json(j["topology"]);
  if (!j["sources"].is_array())
    throw schema_error("\"sources\" must be an array");
  for (const auto& s : j["sources"]) {
    if (!s.is_object() || !s.contains("kind") || !s["kind"].is_string())
      throw schema_error("each strategy source needs a \"kind\"");
    NetworkSourceSpec ns;
    const std::string kind = s["kind"].get<std::string>();
    if (kind == "classical") {
      ns.classical = true;
    } else if (kind == "epr") {
      ns.classical = false;
      if (s.contains("theta")) {
        if (!s["theta"].is_number()) throw schema_error("\"theta\" must be a number");
        ns.theta = s["theta"].get<double>();
      }
      if (s.contains("visibility")) {
        if (!s["visibility"].is_number())
          throw schema_error("\"visibility\" must be a number");
        ns.visibility = s["visibility"].get<double>();
        if (ns.visibility < 0.0 || ns.visibility > 1.0)
          throw schema_error("\"visibility\" must lie in [0,1]");
      }
    } else {
      throw schema_error("unknown source kind: " + kind);
    }
    spec.sources.push_back(ns);
  }
  if (spec.sources.size() != spec.topology.sources.size())
    throw schema_error("need one strategy source per topology source");
  return spec;
}

namespace {

void append_witness_report(std::ostringstream& os, const WitnessReport& r,
                           double tol) {
  os << "{\"family\":" << quoted(family_name(r.witness.family))
     << ",\"n\":" << r.witness.n
     << ",\"value\":" << format_double(r.witness.value) << ",\"components\":{";
  for (size_t i = 0; i < r.witness.components.size(); ++i)
    os << (i ? "," : "") << quoted(r.witness.components[i].first) << ":"
       << format_double(r.witness.components[i].second);
  os << "},\"bounds\":[";
  for (size_t i = 0; i < r.bounds.size(); ++i) {
    const auto& b = r.bounds[i];
    os << (i ? "," : "") << "{\"model\":" << quoted(model_name(b.model))
       << ",\"parameter\":" << b.parameter
       << ",\"threshold\":" << format_double(b.threshold)
       << ",\"detectable\":" << (b.detectable ? "true" : "false") << "}";
  }
  os << "],\"claims\":[";
  for (size_t i = 0; i < r.claims.size(); ++i) {
    const auto& c = r.claims[i];
    os << (i ? "," : "") << "{\"claim\":" << quoted(c.claim)
       << ",\"level\":" << c.level
       << ",\"margin\":" << format_double(c.margin) << "}";
  }
  os << "],\"tolerance\":" << format_double(tol);
  if (!r.warnings.empty()) {
    os << ",\"warnings\":[";
    for (size_t i = 0; i < r.warnings.size(); ++i)
      os << (i ? "," : "") << quoted(r.warnings[i]);
    os << "]";
  }
  os << "}";
}

void append_subnetwork(std::ostringstream& os, const Subnetwork& sub) {
  os << "{\"kind\":"
     << quoted(sub.kind == SubnetworkKind::chain ? "chain" : "star")
     << ",\"parties\":[";
  for (size_t i = 0; i < sub.topology.parties.size(); ++i)
    os << (i ? "," : "") << quoted(sub.topology.parties[i]);
  os << "],\"source_indices\":[";
  for (size_t i = 0; i < sub.source_indices.size(); ++i)
    os << (i ? "," : "") << sub.source_indices[i];
  os << "]}";
}

}  // namespace

std::string witness_report_to_json(const WitnessReport& r, double tol) {
  std::ostringstream os;
  append_witness_report(os, r, tol);
  return os.str();
}

std::string cover_to_json(const NetworkTopology& parent, const SubnetworkCover& c) {
  std::ostringstream os;
  os << "{\"topology\":" << topology_to_json(parent) << ",\"subnetworks\":[";
  for (size_t i = 0; i < c.subnetworks.size(); ++i) {
    if (i) os << ",";
    append_subnetwork(os, c.subnetworks[i]);
  }
  os << "]}";
  return os.str();
}

std::string network_report_to_json(const NetworkReport& r) {
  std::ostringstream os;
  os << "{\"version\":" << quoted(r.version)
     << ",\"tolerance\":" << format_double(r.tolerance)
     << ",\"topology\":" << topology_to_json(r.topology)
     << ",\"subnetworks\":[";
  for (size_t i = 0; i < r.subnetworks.size(); ++i) {
    if (i) os << ",";
    os << "{\"subnetwork\":";
    append_subnetwork(os, r.subnetworks[i].subnetwork);
    os << ",\"report\":";
    append_witness_report(os, r.subnetworks[i].report, r.tolerance);
    os << "}";
  }
  os << "],\"overall_claims\":[";
  for (size_t i = 0; i < r.overall_claims.size(); ++i)
    os << (i ? "," : "") << quoted(r.overall_claims[i]);
  os << "]}";
  return os.str();
}

}  // namespace netcert
