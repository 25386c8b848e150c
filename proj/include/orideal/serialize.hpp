#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "orideal/covers.hpp"
#include "orideal/ideal_theory.hpp"
#include "orideal/symbolic.hpp"

namespace orideal {

struct RegressionSummary;
struct Verdict;

// Graph files:
//   {"vertices": ["x1", ...], "edges": [["x1", "x2"], ...], "weights": {"x1": 1, ...}}
// A vertex missing from "weights" gets weight 1 and a warning.

/// Throws InputError on malformed input. Warnings are appended when given.
WeightedOrientedGraph graph_from_json(const nlohmann::json& j, std::vector<std::string>* warnings = nullptr);
nlohmann::json graph_to_json(const WeightedOrientedGraph& g);
WeightedOrientedGraph load_graph(const std::filesystem::path& path, std::vector<std::string>* warnings = nullptr);

/// Vertex names in index order.
nlohmann::json vertex_set_to_json(const WeightedOrientedGraph& g, const VertexSet& set);
/// {"cover": [...], "L1": [...], "L2": [...], "L3": [...]}
nlohmann::json partition_to_json(const WeightedOrientedGraph& g, const CoverPartition& p);

nlohmann::json ideal_to_json(const MonomialIdeal& ideal);
nlohmann::json component_to_json(const WeightedOrientedGraph& g, const IrreducibleComponent& c);
/// {"components": [...], "intersection_equals_edge_ideal": bool, ...}
nlohmann::json decomposition_to_json(const WeightedOrientedGraph& g, const Decomposition& d);

nlohmann::json report_to_json(const EqualityReport& report);
nlohmann::json verdict_to_json(const Verdict& v);
nlohmann::json regression_to_json(const RegressionSummary& summary);

}  // namespace orideal
