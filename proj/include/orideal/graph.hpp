#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "orideal/monomial.hpp"

namespace orideal {

using Vertex = std::uint32_t;
using Weight = std::uint32_t;
/// Sorted, duplicate-free list of vertex indices.
using VertexSet = std::vector<Vertex>;

struct Edge {
  Vertex tail;
  Vertex head;
  auto operator<=>(const Edge&) const = default;
};

/// Directed simple graph with a positive weight on every vertex. Vertices are
/// named; their index is their position in the input, which also fixes the
/// variable order of the associated polynomial ring.
///
/// Only head weights enter the edge ideal, so weights on sources are stored
/// but never used.
class WeightedOrientedGraph {
 public:
  WeightedOrientedGraph() : WeightedOrientedGraph({}, {}, {}) {}
  /// Throws InputError on loops, repeated underlying edges (including
  /// anti-parallel pairs), zero weights, or out-of-range endpoints.
  WeightedOrientedGraph(std::vector<std::string> names, std::vector<Edge> edges, std::vector<Weight> weights);

  static WeightedOrientedGraph from_names(std::vector<std::string> names,
                                          const std::vector<std::pair<std::string, std::string>>& edges,
                                          const std::map<std::string, Weight>& weights);

  std::size_t vertex_count() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(Vertex v) const { return names_.at(v); }
  /// Throws InputError for an unknown name.
  Vertex index(std::string_view name) const;

  std::span<const Edge> edges() const { return edges_; }
  std::span<const Weight> weights() const { return weights_; }
  Weight weight(Vertex v) const { return weights_.at(v); }

  const VertexSet& out_neighbors(Vertex v) const;
  const VertexSet& in_neighbors(Vertex v) const;
  VertexSet out_neighbors(std::string_view name) const { return out_neighbors(index(name)); }
  VertexSet in_neighbors(std::string_view name) const { return in_neighbors(index(name)); }
  bool has_edge(Vertex tail, Vertex head) const;
  bool is_isolated(Vertex v) const { return out_.at(v).empty() && in_.at(v).empty(); }

  /// Non-isolated vertices without in-neighbours (resp. out-neighbours).
  VertexSet sources() const;
  VertexSet sinks() const;

  /// Polynomial ring whose variables are the vertices, in index order.
  const RingPtr& ring() const { return ring_; }

  VertexSet vertices_by_name(const std::vector<std::string>& names) const;
  std::vector<std::string> names_of(const VertexSet& set) const;

  bool operator==(const WeightedOrientedGraph& other) const;

 private:
  std::vector<std::string> names_;
  std::vector<Edge> edges_;
  std::vector<Weight> weights_;
  std::vector<VertexSet> out_;
  std::vector<VertexSet> in_;
  RingPtr ring_;
};

WeightedOrientedGraph induced_subgraph(const WeightedOrientedGraph& g, const VertexSet& keep);

/// x1 -> x2 -> ... -> xn.
WeightedOrientedGraph oriented_line(std::size_t n, const std::vector<Weight>& weights);
/// x1 -> x2 -> ... -> xn -> x1, n >= 3.
WeightedOrientedGraph oriented_cycle(std::size_t n, const std::vector<Weight>& weights);

/// Tree with every edge directed from parent to child. `parent_of` lists
/// (child, parent) pairs; vertex order is the root followed by the children
/// in the given order. Missing weights default to 1.
WeightedOrientedGraph rooted_tree(const std::vector<std::pair<std::string, std::string>>& parent_of,
                                  const std::string& root, const std::map<std::string, Weight>& weights);

/// Returns the root if `g` is a rooted tree oriented away from it; throws
/// InputError otherwise.
Vertex tree_root(const WeightedOrientedGraph& g);

/// The graph x -> y -> z plus a tree rooted at z. New vertices are named
/// "x" and "y" and come first; z keeps the tree's root name and gets weight
/// w_z. Every non-sink vertex must have weight >= 2.
WeightedOrientedGraph forest_broom(Weight w_y, Weight w_z, const WeightedOrientedGraph& tree, Weight w_x = 2);

/// One line, e.g. "x1->x2, x2->x3; vertices=(x1,x2,x3); w=(1,2,2)".
std::string describe(const WeightedOrientedGraph& g);

}  // namespace orideal
