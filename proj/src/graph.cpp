#include "orideal/graph.hpp"

#include <algorithm>
#include <optional>
#include <set>

#include "orideal/errors.hpp"

namespace orideal {

WeightedOrientedGraph::WeightedOrientedGraph(std::vector<std::string> names, std::vector<Edge> edges,
                                             std::vector<Weight> weights)
    : names_(std::move(names)), edges_(std::move(edges)), weights_(std::move(weights)) {
  const std::size_t n = names_.size();
  if (weights_.size() != n) throw InputError("weight list length does not match vertex count");
  for (std::size_t v = 0; v < n; ++v)
    if (weights_[v] < 1) throw InputError("weight of vertex '" + names_[v] + "' must be >= 1");
  ring_ = make_ring(names_);  // also rejects duplicate names

  std::set<std::pair<Vertex, Vertex>> underlying;
  for (const Edge& e : edges_) {
    if (e.tail >= n || e.head >= n) throw InputError("edge endpoint is not a declared vertex");
    if (e.tail == e.head) throw InputError("loop at vertex '" + names_[e.tail] + "'");
    auto key = std::minmax(e.tail, e.head);
    if (!underlying.insert(key).second)
      throw InputError("repeated edge between '" + names_[e.tail] + "' and '" + names_[e.head] + "'");
  }
  std::sort(edges_.begin(), edges_.end());

  out_.assign(n, {});
  in_.assign(n, {});
  for (const Edge& e : edges_) {
    out_[e.tail].push_back(e.head);
    in_[e.head].push_back(e.tail);
  }
  for (auto& s : out_) std::sort(s.begin(), s.end());
  for (auto& s : in_) std::sort(s.begin(), s.end());
}

WeightedOrientedGraph WeightedOrientedGraph::from_names(
    std::vector<std::string> names, const std::vector<std::pair<std::string, std::string>>& edges,
    const std::map<std::string, Weight>& weights) {
  Ring lookup(names);
  std::vector<Edge> idx;
  idx.reserve(edges.size());
  for (const auto& [t, h] : edges) {
    auto ti = lookup.find(t);
    auto hi = lookup.find(h);
    if (!ti || !hi) throw InputError("edge (" + t + ", " + h + ") uses an undeclared vertex");
    idx.push_back({*ti, *hi});
  }
  for (const auto& [name, w] : weights)
    if (!lookup.find(name)) throw InputError("weight given for undeclared vertex '" + name + "'");
  std::vector<Weight> w(names.size(), 1);
  for (std::size_t i = 0; i < names.size(); ++i)
    if (auto it = weights.find(names[i]); it != weights.end()) w[i] = it->second;
  return WeightedOrientedGraph(std::move(names), std::move(idx), std::move(w));
}

Vertex WeightedOrientedGraph::index(std::string_view name) const {
  if (auto v = ring_->find(name)) return *v;
  throw InputError("unknown vertex '" + std::string(name) + "'");
}

const VertexSet& WeightedOrientedGraph::out_neighbors(Vertex v) const {
  if (v >= out_.size()) throw InputError("unknown vertex index " + std::to_string(v));
  return out_[v];
}

const VertexSet& WeightedOrientedGraph::in_neighbors(Vertex v) const {
  if (v >= in_.size()) throw InputError("unknown vertex index " + std::to_string(v));
  return in_[v];
}

bool WeightedOrientedGraph::has_edge(Vertex tail, Vertex head) const {
  return std::binary_search(edges_.begin(), edges_.end(), Edge{tail, head});
}

VertexSet WeightedOrientedGraph::sources() const {
  VertexSet out;
  for (Vertex v = 0; v < vertex_count(); ++v)
    if (in_[v].empty() && !out_[v].empty()) out.push_back(v);
  return out;
}

VertexSet WeightedOrientedGraph::sinks() const {
  VertexSet out;
  for (Vertex v = 0; v < vertex_count(); ++v)
    if (out_[v].empty() && !in_[v].empty()) out.push_back(v);
  return out;
}

VertexSet WeightedOrientedGraph::vertices_by_name(const std::vector<std::string>& names) const {
  VertexSet out;
  out.reserve(names.size());
  for (const auto& n : names) out.push_back(index(n));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<std::string> WeightedOrientedGraph::names_of(const VertexSet& set) const {
  std::vector<std::string> out;
  out.reserve(set.size());
  for (Vertex v : set) out.push_back(name(v));
  return out;
}

bool WeightedOrientedGraph::operator==(const WeightedOrientedGraph& other) const {
  return names_ == other.names_ && edges_ == other.edges_ && weights_ == other.weights_;
}

WeightedOrientedGraph induced_subgraph(const WeightedOrientedGraph& g, const VertexSet& keep) {
  std::vector<Vertex> sorted = keep;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  constexpr Vertex absent = ~Vertex{0};
  std::vector<Vertex> remap(g.vertex_count(), absent);
  std::vector<std::string> names;
  std::vector<Weight> weights;
  for (Vertex v : sorted) {
    if (v >= g.vertex_count()) throw InputError("induced subgraph on unknown vertex index " + std::to_string(v));
    remap[v] = static_cast<Vertex>(names.size());
    names.push_back(g.name(v));
    weights.push_back(g.weight(v));
  }
  std::vector<Edge> edges;
  for (const Edge& e : g.edges())
    if (remap[e.tail] != absent && remap[e.head] != absent) edges.push_back({remap[e.tail], remap[e.head]});
  return WeightedOrientedGraph(std::move(names), std::move(edges), std::move(weights));
}

namespace {

std::vector<std::string> indexed_names(std::size_t n) {
  std::vector<std::string> names;
  names.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
  return names;
}

}  // namespace

WeightedOrientedGraph oriented_line(std::size_t n, const std::vector<Weight>& weights) {
  if (n < 1) throw InputError("a line needs at least one vertex");
  if (weights.size() != n) throw InputError("expected " + std::to_string(n) + " weights for the line");
  std::vector<Edge> edges;
  for (Vertex i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  return WeightedOrientedGraph(indexed_names(n), std::move(edges), weights);
}

WeightedOrientedGraph oriented_cycle(std::size_t n, const std::vector<Weight>& weights) {
  if (n < 3) throw InputError("a cycle needs at least three vertices");
  if (weights.size() != n) throw InputError("expected " + std::to_string(n) + " weights for the cycle");
  std::vector<Edge> edges;
  for (Vertex i = 0; i < n; ++i) edges.push_back({i, static_cast<Vertex>((i + 1) % n)});
  return WeightedOrientedGraph(indexed_names(n), std::move(edges), weights);
}

WeightedOrientedGraph rooted_tree(const std::vector<std::pair<std::string, std::string>>& parent_of,
                                  const std::string& root, const std::map<std::string, Weight>& weights) {
  std::vector<std::string> names{root};
  std::map<std::string, std::string> parent;
  for (const auto& [child, par] : parent_of) {
    if (child == root) throw InputError("the root '" + root + "' cannot have a parent");
    if (!parent.emplace(child, par).second) throw InputError("vertex '" + child + "' has two parents");
    names.push_back(child);
  }
  for (const auto& [child, par] : parent) {
    if (par != root && !parent.count(par))
      throw InputError("vertex '" + par + "' is a second root (it has no parent and is not '" + root + "')");
    // Walk up; a path longer than the vertex count means a cycle.
    std::string at = child;
    for (std::size_t steps = 0; at != root; ++steps) {
      if (steps > parent.size()) throw InputError("parent mapping contains a cycle through '" + child + "'");
      at = parent.at(at);
    }
  }
  std::vector<std::pair<std::string, std::string>> edges;
  for (const auto& [child, par] : parent_of) edges.emplace_back(par, child);
  return WeightedOrientedGraph::from_names(std::move(names), edges, weights);
}

Vertex tree_root(const WeightedOrientedGraph& g) {
  const std::size_t n = g.vertex_count();
  if (n == 0) throw InputError("empty graph is not a rooted tree");
  if (g.edges().size() != n - 1) throw InputError("a tree on n vertices has n-1 edges");
  std::optional<Vertex> root;
  for (Vertex v = 0; v < n; ++v) {
    const auto indeg = g.in_neighbors(v).size();
    if (indeg == 0) {
      if (root) throw InputError("more than one vertex without a parent");
      root = v;
    } else if (indeg > 1) {
      throw InputError("vertex '" + g.name(v) + "' has more than one parent");
    }
  }
  if (!root) throw InputError("no root: every vertex has a parent");
  // n-1 edges, in-degree one off the root: connected iff all reachable.
  std::vector<bool> seen(n, false);
  std::vector<Vertex> stack{*root};
  seen[*root] = true;
  std::size_t count = 1;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Vertex u : g.out_neighbors(v))
      if (!seen[u]) {
        seen[u] = true;
        ++count;
        stack.push_back(u);
      }
  }
  if (count != n) throw InputError("tree is not connected from its root");
  return *root;
}

WeightedOrientedGraph forest_broom(Weight w_y, Weight w_z, const WeightedOrientedGraph& tree, Weight w_x) {
  const Vertex z = tree_root(tree);
  for (const char* fresh : {"x", "y"})
    if (tree.ring()->find(fresh)) throw InputError(std::string("tree already has a vertex named '") + fresh + "'");

  std::vector<std::string> names{"x", "y"};
  std::vector<Weight> weights{w_x, w_y};
  for (Vertex v = 0; v < tree.vertex_count(); ++v) {
    names.push_back(tree.name(v));
    weights.push_back(v == z ? w_z : tree.weight(v));
  }
  std::vector<Edge> edges{{0, 1}, {1, z + 2}};
  for (const Edge& e : tree.edges()) edges.push_back({e.tail + 2, e.head + 2});
  WeightedOrientedGraph g(std::move(names), std::move(edges), std::move(weights));

  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (!g.out_neighbors(v).empty() && g.weight(v) < 2)
      throw InputError("broom needs weight >= 2 on non-sink vertex '" + g.name(v) + "'");
  return g;
}

std::string describe(const WeightedOrientedGraph& g) {
  std::string out;
  for (const Edge& e : g.edges()) {
    if (!out.empty()) out += ", ";
    out += g.name(e.tail) + "->" + g.name(e.head);
  }
  if (g.edges().empty()) out = "no edges";
  out += "; vertices=(";
  for (Vertex v = 0; v < g.vertex_count(); ++v) out += (v ? "," : "") + g.name(v);
  out += "); w=(";
  for (Vertex v = 0; v < g.vertex_count(); ++v) out += (v ? "," : "") + std::to_string(g.weight(v));
  return out + ")";
}

}  // namespace orideal
