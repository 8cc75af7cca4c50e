#include "ramsey/json_io.hpp"

#include <cinttypes>
#include <cstdio>
#include <fstream>

#include "ramsey/family.hpp"
#include "ramsey/graph6.hpp"

namespace ramsey {
namespace {

using nlohmann::json;

const char* verdict_str(ArrowVerdict v) {
  switch (v) {
    case ArrowVerdict::Ramsey: return "Ramsey";
    case ArrowVerdict::NotRamsey: return "NotRamsey";
    case ArrowVerdict::Unknown: return "Unknown";
  }
  return "Unknown";
}

std::string fixed6(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", x);
  return buf;
}

json condition_json(const ConditionReport& c) {
  return json{{"id", c.id}, {"status", to_string(c.status)}, {"evidence", c.evidence}};
}

}  // namespace

json density_json(const Graph& g, const DensityReport& m2r, const DensityReport& mr,
                  const Rational& d2, const Rational& ev) {
  return json{{"schema", "density-report/1"},
              {"graph6", emit_graph6(g)},
              {"d2", d2.str()},
              {"ev", ev.str()},
              {"m2", m2r.value.str()},
              {"m2_witness", witness_vertices(m2r.witness)},
              {"m2_strict", m2r.strict},
              {"m", mr.value.str()},
              {"m_witness", witness_vertices(mr.witness)},
              {"m_strict", mr.strict}};
}

json asym_json(const Graph& h1, const Graph& h2, const DensityReport& r) {
  return json{{"schema", "asym-density-report/1"},
              {"h1_graph6", emit_graph6(h1)},
              {"h2_graph6", emit_graph6(h2)},
              {"value", r.value.str()},
              {"witness", witness_vertices(r.witness)},
              {"strict", r.strict}};
}

json balance_json(const Graph& g, bool balanced, bool strictly_2_balanced) {
  return json{{"schema", "balance-report/1"},
              {"graph6", emit_graph6(g)},
              {"balanced", balanced},
              {"strictly_2_balanced", strictly_2_balanced}};
}

json certificate_json(const Graph& host, const std::vector<std::uint8_t>& red_bits) {
  json red = json::array();
  const auto edges = host.edges();
  for (std::size_t i = 0; i < edges.size(); ++i)
    if (i < red_bits.size() && red_bits[i] != 0)
      red.push_back(json::array({edges[i].first, edges[i].second}));
  return json{{"host", emit_graph6(host)}, {"red_edges", red}};
}

json arrow_json(const Graph& host, const ArrowResult& r) {
  json j{{"schema", "arrow-report/1"}, {"outcome", verdict_str(r.verdict)}};
  if (r.verdict == ArrowVerdict::NotRamsey) j["certificate"] = certificate_json(host, r.good_red);
  return j;
}

json global_json(const Graph& host, const Rational& mu, const GlobalArrowResult& r) {
  json j{{"schema", "global-report/1"},
         {"outcome", verdict_str(r.verdict)},
         {"mu", mu.str()}};
  if (r.verdict == ArrowVerdict::NotRamsey) {
    j["witness_subset"] = witness_vertices(r.witness_subset);
    j["certificate"] = certificate_json(host.induced(r.witness_subset), r.good_red);
  }
  return j;
}

json chromatic_json(const Graph& g, const ChromaticResult& r) {
  json j{{"schema", "chromatic-report/1"},
         {"graph6", emit_graph6(g)},
         {"status", r.status == SearchStatus::Found ? "Found" : "Unknown"}};
  if (r.status == SearchStatus::Found) j["value"] = r.value;
  return j;
}

json hypothesis_json(const HypothesisReport& r) {
  json conds = json::array();
  for (const ConditionReport& c : r.conditions) conds.push_back(condition_json(c));
  json aux = json::array();
  for (const AuxChoice& a : r.aux)
    aux.push_back(json{{"role", a.role}, {"detail", a.detail}, {"graph6", a.g6}});
  return json{{"schema", "hypothesis-report/1"},
              {"theorem", r.theorem},
              {"conditions", conds},
              {"aux", aux},
              {"d_low", r.d_low.str()},
              {"d_high", r.d_high.str()},
              {"fully_verified", r.fully_verified}};
}

json threshold_json(const ThresholdReport& r) {
  json j{{"schema", "threshold-report/1"},
         {"routed", r.routed},
         {"no_route_reasons", r.no_route_reasons},
         {"fully_verified", r.fully_verified}};
  if (r.routed) {
    j["exponent"] = r.exponent.str();
    j["source"] = r.source;
    j["convention"] = r.convention;
    j["k"] = r.k;
    if (r.hypothesis) j["hypothesis"] = hypothesis_json(*r.hypothesis);
    json asms = json::array();
    for (const RegistryUse& a : r.assumptions)
      asms.push_back(json{{"pair", a.pair_key}, {"citation", a.citation}});
    j["assumptions"] = asms;
  }
  return j;
}

json witness_json(const WitnessOutcome& o) {
  json j{{"schema", "witness-report/1"}, {"status", to_string(o.status)}, {"note", o.note}};
  if (o.witness) {
    j["provenance"] = o.witness->provenance;
    j["verified"] = o.witness->verified;
    j["failure"] = o.witness->failure;
    j["certificate"] = certificate_json(o.witness->host, o.witness->coloring.bits());
  }
  return j;
}

std::string sim_csv(const SimResult& r) {
  std::string out = "# " + r.note + "\n";
  out += "n,p,trials,ramsey,notramsey,unknown,wilson_low,wilson_high\n";
  for (const CellResult& c : r.cells) {
    const Wilson w = wilson95(c.ramsey, c.trials);
    out += std::to_string(c.n) + "," + c.p_effective.str() + "," + std::to_string(c.trials) +
           "," + std::to_string(c.ramsey) + "," + std::to_string(c.notramsey) + "," +
           std::to_string(c.unknown) + "," + fixed6(w.low) + "," + fixed6(w.high) + "\n";
  }
  return out;
}

json sim_json(const SimResult& r) {
  json cells = json::array();
  for (const CellResult& c : r.cells) {
    const Wilson w = wilson95(c.ramsey, c.trials);
    cells.push_back(json{{"n", c.n},
                         {"p", c.p_effective.str()},
                         {"p_text", c.p_text},
                         {"trials", c.trials},
                         {"ramsey", c.ramsey},
                         {"notramsey", c.notramsey},
                         {"unknown", c.unknown},
                         {"wilson_low", fixed6(w.low)},
                         {"wilson_high", fixed6(w.high)}});
  }
  return json{{"schema", "sim-result/1"}, {"note", r.note}, {"cells", cells}};
}

AssumptionRegistry load_registry(const std::string& path) {
  AssumptionRegistry reg = AssumptionRegistry::with_builtins();
  if (path.empty()) return reg;
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open registry file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw std::invalid_argument("malformed registry file " + path + ": " + e.what());
  }
  if (!j.is_object() || !j.contains("entries") || !j["entries"].is_array())
    throw std::invalid_argument("registry file " + path + " needs an \"entries\" array");
  for (const json& e : j["entries"]) {
    if (!e.is_object() || !e.contains("first") || !e.contains("second") || !e.contains("citation"))
      throw std::invalid_argument("registry entry needs first, second and citation fields");
    const Graph first = build(GraphSpec::parse(e["first"].get<std::string>()));
    const Graph second = build(GraphSpec::parse(e["second"].get<std::string>()));
    reg.add_exact(canonical_key(first), canonical_key(second), e["citation"].get<std::string>());
  }
  return reg;
}

}  // namespace ramsey
