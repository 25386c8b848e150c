#include "orideal/covers.hpp"

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <cstdlib>
#include <string_view>

#include "orideal/errors.hpp"

namespace orideal {

namespace {

constexpr std::size_t kHardCap = 62;

void check_cap(const WeightedOrientedGraph& g, std::size_t cap) {
  cap = std::min(cap, kHardCap);
  if (g.vertex_count() > cap)
    throw CapExceeded("graph has " + std::to_string(g.vertex_count()) + " vertices; subset enumeration is capped at " +
                      std::to_string(cap) + " (raise it with ORIENTED_IDEAL_CAP)");
}

std::vector<bool> membership(const WeightedOrientedGraph& g, const VertexSet& set) {
  std::vector<bool> in(g.vertex_count(), false);
  for (Vertex v : set) {
    if (v >= g.vertex_count()) throw InputError("unknown vertex index " + std::to_string(v));
    in[v] = true;
  }
  return in;
}

bool covers_all_edges(const WeightedOrientedGraph& g, const std::vector<bool>& in) {
  return std::all_of(g.edges().begin(), g.edges().end(), [&](const Edge& e) { return in[e.tail] || in[e.head]; });
}

VertexSet normalized(VertexSet set) {
  std::sort(set.begin(), set.end());
  set.erase(std::unique(set.begin(), set.end()), set.end());
  return set;
}

VertexSet from_mask(std::uint64_t mask, std::size_t n) {
  VertexSet out;
  for (Vertex v = 0; v < n; ++v)
    if (mask >> v & 1) out.push_back(v);
  return out;
}

CoverPartition partition_unchecked(const WeightedOrientedGraph& g, const VertexSet& cover,
                                   const std::vector<bool>& in) {
  CoverPartition p;
  p.cover = cover;
  auto meets_outside = [&](const VertexSet& nbrs) {
    return std::any_of(nbrs.begin(), nbrs.end(), [&](Vertex u) { return !in[u]; });
  };
  for (Vertex v : cover) {
    if (meets_outside(g.out_neighbors(v)))
      p.l1.push_back(v);
    else if (meets_outside(g.in_neighbors(v)))
      p.l2.push_back(v);
    else
      p.l3.push_back(v);
  }
  return p;
}

bool strong_partition(const WeightedOrientedGraph& g, const CoverPartition& p) {
  std::vector<bool> upper(g.vertex_count(), false);  // l2 ∪ l3
  for (Vertex v : p.l2) upper[v] = true;
  for (Vertex v : p.l3) upper[v] = true;
  for (Vertex v : p.l3) {
    const auto& preds = g.in_neighbors(v);
    bool ok = std::any_of(preds.begin(), preds.end(), [&](Vertex y) { return upper[y] && g.weight(y) >= 2; });
    if (!ok) return false;
  }
  return true;
}

template <class Pred>
std::vector<VertexSet> scan_subsets(const WeightedOrientedGraph& g, std::size_t cap, Pred keep) {
  check_cap(g, cap);
  const std::size_t n = g.vertex_count();
  std::vector<std::uint64_t> tails(g.edges().size());
  std::vector<std::uint64_t> heads(g.edges().size());
  for (std::size_t i = 0; i < g.edges().size(); ++i) {
    tails[i] = std::uint64_t{1} << g.edges()[i].tail;
    heads[i] = std::uint64_t{1} << g.edges()[i].head;
  }
  std::vector<VertexSet> out;
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    bool cover = true;
    for (std::size_t i = 0; i < tails.size() && cover; ++i) cover = (mask & (tails[i] | heads[i])) != 0;
    if (!cover) continue;
    VertexSet set = from_mask(mask, n);
    if (keep(set)) out.push_back(std::move(set));
  }
  std::sort(out.begin(), out.end(), cover_order_less);
  return out;
}

}  // namespace

std::size_t enumeration_cap() {
  const char* env = std::getenv("ORIENTED_IDEAL_CAP");
  if (env == nullptr) return kDefaultEnumerationCap;
  std::string_view text(env);
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || value == 0)
    throw InputError("ORIENTED_IDEAL_CAP must be a positive integer, got '" + std::string(text) + "'");
  return std::min(value, kHardCap);
}

bool cover_order_less(const VertexSet& a, const VertexSet& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

bool is_subset(const VertexSet& a, const VertexSet& b) { return std::includes(b.begin(), b.end(), a.begin(), a.end()); }

bool is_vertex_cover(const WeightedOrientedGraph& g, const VertexSet& cover) {
  return covers_all_edges(g, membership(g, cover));
}

CoverPartition cover_partition(const WeightedOrientedGraph& g, const VertexSet& cover) {
  VertexSet c = normalized(cover);
  auto in = membership(g, c);
  if (!covers_all_edges(g, in)) throw InputError("not a vertex cover");
  return partition_unchecked(g, c, in);
}

bool is_strong_cover(const WeightedOrientedGraph& g, const VertexSet& cover) {
  VertexSet c = normalized(cover);
  auto in = membership(g, c);
  if (!covers_all_edges(g, in)) return false;
  return strong_partition(g, partition_unchecked(g, c, in));
}

bool is_strong_cover(const WeightedOrientedGraph& g, const CoverPartition& partition) {
  return is_vertex_cover(g, partition.cover) && strong_partition(g, partition);
}

std::vector<VertexSet> enumerate_strong_covers(const WeightedOrientedGraph& g) {
  return enumerate_strong_covers(g, enumeration_cap());
}

std::vector<VertexSet> enumerate_strong_covers(const WeightedOrientedGraph& g, std::size_t cap) {
  return scan_subsets(g, cap, [&](const VertexSet& c) {
    return strong_partition(g, partition_unchecked(g, c, membership(g, c)));
  });
}

std::vector<VertexSet> maximal_elements(const std::vector<VertexSet>& sets) {
  std::vector<VertexSet> out;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < sets.size() && !dominated; ++j)
      dominated = j != i && sets[j].size() > sets[i].size() && is_subset(sets[i], sets[j]);
    if (!dominated) out.push_back(sets[i]);
  }
  return out;
}

std::vector<VertexSet> maximal_strong_covers(const WeightedOrientedGraph& g) {
  return maximal_strong_covers(g, enumeration_cap());
}

std::vector<VertexSet> maximal_strong_covers(const WeightedOrientedGraph& g, std::size_t cap) {
  return maximal_elements(enumerate_strong_covers(g, cap));
}

std::vector<VertexSet> minimal_vertex_covers(const WeightedOrientedGraph& g) {
  return minimal_vertex_covers(g, enumeration_cap());
}

std::vector<VertexSet> minimal_vertex_covers(const WeightedOrientedGraph& g, std::size_t cap) {
  // Minimal iff no single vertex can be dropped, i.e. every covered vertex
  // has an uncovered neighbour.
  return scan_subsets(g, cap, [&](const VertexSet& c) {
    auto in = membership(g, c);
    for (Vertex v : c) {
      bool needed = false;
      for (Vertex u : g.out_neighbors(v)) needed = needed || !in[u];
      for (Vertex u : g.in_neighbors(v)) needed = needed || !in[u];
      if (!needed) return false;
    }
    return true;
  });
}

}  // namespace orideal
