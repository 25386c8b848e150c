#include "orideal/serialize.hpp"

#include <fstream>
#include <map>

#include "orideal/errors.hpp"
#include "orideal/theorems.hpp"

namespace orideal {

using nlohmann::json;

WeightedOrientedGraph graph_from_json(const json& j, std::vector<std::string>* warnings) {
  if (!j.is_object()) throw InputError("graph JSON must be an object");
  if (!j.contains("vertices") || !j["vertices"].is_array()) throw InputError("graph JSON needs a \"vertices\" array");

  std::vector<std::string> names;
  for (const auto& v : j["vertices"]) {
    if (!v.is_string()) throw InputError("vertex names must be strings");
    names.push_back(v.get<std::string>());
  }

  std::vector<std::pair<std::string, std::string>> edges;
  if (j.contains("edges")) {
    if (!j["edges"].is_array()) throw InputError("\"edges\" must be an array");
    for (const auto& e : j["edges"]) {
      if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string())
        throw InputError("each edge must be a [tail, head] pair of vertex names");
      edges.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
    }
  }

  std::map<std::string, Weight> weights;
  if (j.contains("weights")) {
    if (!j["weights"].is_object()) throw InputError("\"weights\" must be an object");
    for (const auto& [name, w] : j["weights"].items()) {
      if (!w.is_number_integer() || w.get<long long>() < 1 || w.get<long long>() > 0xffffffffLL)
        throw InputError("weight of '" + name + "' must be a positive integer");
      weights[name] = static_cast<Weight>(w.get<long long>());
    }
  }
  if (warnings)
    for (const auto& n : names)
      if (!weights.count(n)) warnings->push_back("vertex '" + n + "' has no weight; using 1");

  return WeightedOrientedGraph::from_names(std::move(names), edges, weights);
}

json graph_to_json(const WeightedOrientedGraph& g) {
  json edges = json::array();
  for (const Edge& e : g.edges()) edges.push_back({g.name(e.tail), g.name(e.head)});
  json weights = json::object();
  for (Vertex v = 0; v < g.vertex_count(); ++v) weights[g.name(v)] = g.weight(v);
  return json{{"vertices", g.names()}, {"edges", std::move(edges)}, {"weights", std::move(weights)}};
}

WeightedOrientedGraph load_graph(const std::filesystem::path& path, std::vector<std::string>* warnings) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open graph file '" + path.string() + "'");
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw InputError("graph file '" + path.string() + "' is not valid JSON: " + e.what());
  }
  return graph_from_json(j, warnings);
}

json vertex_set_to_json(const WeightedOrientedGraph& g, const VertexSet& set) { return g.names_of(set); }

json partition_to_json(const WeightedOrientedGraph& g, const CoverPartition& p) {
  return json{{"cover", vertex_set_to_json(g, p.cover)},
              {"L1", vertex_set_to_json(g, p.l1)},
              {"L2", vertex_set_to_json(g, p.l2)},
              {"L3", vertex_set_to_json(g, p.l3)}};
}

json ideal_to_json(const MonomialIdeal& ideal) { return generator_strings(ideal); }

json component_to_json(const WeightedOrientedGraph& g, const IrreducibleComponent& c) {
  json out = partition_to_json(g, c.partition);
  out["ideal"] = ideal_to_json(c.ideal);
  return out;
}

json decomposition_to_json(const WeightedOrientedGraph& g, const Decomposition& d) {
  json components = json::array();
  for (const auto& c : d.components) components.push_back(component_to_json(g, c));
  json redundant = json::array();
  for (const auto& c : d.redundant) redundant.push_back(vertex_set_to_json(g, c));
  return json{{"components", std::move(components)},
              {"edge_ideal", ideal_to_json(edge_ideal(g))},
              {"intersection", ideal_to_json(d.intersection)},
              {"intersection_equals_edge_ideal", d.intersection_equals_edge_ideal},
              {"redundant_components", std::move(redundant)}};
}

json report_to_json(const EqualityReport& report) {
  json rows = json::array();
  for (const auto& r : report.per_s) {
    rows.push_back(json{{"s", r.s},
                        {"equal", r.equal},
                        {"witness", r.witness ? json(to_string(*r.witness, *report.ring)) : json(nullptr)},
                        {"generator_counts", {{"ordinary", r.ordinary_generators}, {"symbolic", r.symbolic_generators}}}});
  }
  return json{{"graph", report.graph}, {"s_max", report.s_max}, {"per_s", std::move(rows)}};
}

json verdict_to_json(const Verdict& v) {
  return json{{"check", v.check},       {"instance", v.instance}, {"hypotheses_ok", v.hypotheses_ok},
              {"prediction", v.prediction}, {"computed", v.computed}, {"pass", v.pass},
              {"notes", v.notes}};
}

json regression_to_json(const RegressionSummary& summary) {
  json failures = json::array();
  for (const auto& f : summary.failures)
    failures.push_back(json{{"trial", f.trial}, {"graph", f.graph}, {"reason", f.reason}});
  return json{{"check", "random_regression"},
              {"seed", summary.seed},
              {"trials", summary.trials},
              {"passed", summary.passed},
              {"pass", summary.failures.empty()},
              {"failures", std::move(failures)}};
}

}  // namespace orideal
