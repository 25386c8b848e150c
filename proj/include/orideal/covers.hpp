#pragma once

#include <cstddef>
#include <vector>

#include "orideal/graph.hpp"

namespace orideal {

/// A vertex cover split by how its vertices meet the uncovered vertices:
///   l1: has an out-neighbour outside the cover,
///   l2: not in l1, has an in-neighbour outside the cover,
///   l3: everything else (all neighbours covered).
struct CoverPartition {
  VertexSet cover;
  VertexSet l1;
  VertexSet l2;
  VertexSet l3;
  bool operator==(const CoverPartition&) const = default;
};

/// Default limit on vertex count for 2^n subset scans. The environment
/// variable ORIENTED_IDEAL_CAP overrides it (hard maximum 62).
inline constexpr std::size_t kDefaultEnumerationCap = 20;
std::size_t enumeration_cap();

bool is_vertex_cover(const WeightedOrientedGraph& g, const VertexSet& cover);

/// Throws InputError if `cover` is not a vertex cover.
CoverPartition cover_partition(const WeightedOrientedGraph& g, const VertexSet& cover);

/// A cover is strong when each l3 vertex has an in-neighbour in l2 or l3 of
/// weight at least 2. Non-covers are not strong.
bool is_strong_cover(const WeightedOrientedGraph& g, const VertexSet& cover);
bool is_strong_cover(const WeightedOrientedGraph& g, const CoverPartition& partition);

// Enumerations scan all 2^n subsets and throw CapExceeded when n > cap.
// Output is sorted by size, then lexicographically by vertex index.
std::vector<VertexSet> enumerate_strong_covers(const WeightedOrientedGraph& g);
std::vector<VertexSet> enumerate_strong_covers(const WeightedOrientedGraph& g, std::size_t cap);
std::vector<VertexSet> maximal_strong_covers(const WeightedOrientedGraph& g);
std::vector<VertexSet> maximal_strong_covers(const WeightedOrientedGraph& g, std::size_t cap);
std::vector<VertexSet> minimal_vertex_covers(const WeightedOrientedGraph& g);
std::vector<VertexSet> minimal_vertex_covers(const WeightedOrientedGraph& g, std::size_t cap);

/// Inclusion-maximal members of `sets`, in input order.
std::vector<VertexSet> maximal_elements(const std::vector<VertexSet>& sets);

/// Orders by size, then lexicographically.
bool cover_order_less(const VertexSet& a, const VertexSet& b);

bool is_subset(const VertexSet& a, const VertexSet& b);

}  // namespace orideal
