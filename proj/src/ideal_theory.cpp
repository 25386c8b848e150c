#include "orideal/ideal_theory.hpp"

#include "orideal/errors.hpp"

namespace orideal {

MonomialIdeal edge_ideal(const WeightedOrientedGraph& g) { return edge_ideal(g, g.ring()); }

MonomialIdeal edge_ideal(const WeightedOrientedGraph& g, const RingPtr& ring) {
  std::vector<VarIndex> var(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) var[v] = ring->index(g.name(v));
  std::vector<Monomial> gens;
  gens.reserve(g.edges().size());
  for (const Edge& e : g.edges())
    gens.push_back(Monomial({{var[e.tail], 1}, {var[e.head], g.weight(e.head)}}));
  return minimalize(ring, std::move(gens));
}

IrreducibleComponent irreducible_ideal(const WeightedOrientedGraph& g, const VertexSet& cover,
                                       ComponentReading reading) {
  CoverPartition p = cover_partition(g, cover);
  if (!is_strong_cover(g, p)) throw InputError("irreducible component requested for a cover that is not strong");
  std::vector<Monomial> gens;
  for (Vertex v : p.l1) gens.push_back(Monomial::variable(v));
  if (reading == ComponentReading::adopted) {
    for (Vertex v : p.l2) gens.push_back(Monomial::variable(v, g.weight(v)));
    for (Vertex v : p.l3) gens.push_back(Monomial::variable(v, g.weight(v)));
  } else {
    for (Vertex v : p.l1) gens.push_back(Monomial::variable(v, g.weight(v)));
    for (Vertex v : p.l2) gens.push_back(Monomial::variable(v, g.weight(v)));
  }
  VertexSet support = p.cover;
  return IrreducibleComponent{std::move(p), minimalize(g.ring(), std::move(gens)), std::move(support)};
}

std::vector<IrreducibleComponent> strong_components(const WeightedOrientedGraph& g, ComponentReading reading) {
  std::vector<IrreducibleComponent> out;
  // The zero ideal of an edgeless graph has no proper components.
  if (g.edges().empty()) return out;
  for (const VertexSet& c : enumerate_strong_covers(g)) out.push_back(irreducible_ideal(g, c, reading));
  return out;
}

std::vector<std::size_t> redundant_components(const RingPtr& ring,
                                              const std::vector<IrreducibleComponent>& components) {
  std::vector<std::size_t> out;
  const std::size_t k = components.size();
  if (k < 2) return out;
  // prefix[i] = ∩ of components [0, i); suffix[i] = ∩ of [i, k).
  std::vector<MonomialIdeal> prefix{MonomialIdeal::unit(ring)};
  for (const auto& c : components) prefix.push_back(ideal_intersection(prefix.back(), c.ideal));
  std::vector<MonomialIdeal> suffix(k + 1, MonomialIdeal::unit(ring));
  for (std::size_t i = k; i-- > 0;) suffix[i] = ideal_intersection(suffix[i + 1], components[i].ideal);
  for (std::size_t i = 0; i < k; ++i) {
    MonomialIdeal others = ideal_intersection(prefix[i], suffix[i + 1]);
    if (components[i].ideal.contains(others)) out.push_back(i);
  }
  return out;
}

Decomposition irreducible_decomposition(const WeightedOrientedGraph& g, const DecompositionOptions& options) {
  Decomposition d{strong_components(g, options.reading), MonomialIdeal(g.ring()), false, {}};
  std::vector<MonomialIdeal> ideals;
  ideals.reserve(d.components.size());
  for (const auto& c : d.components) ideals.push_back(c.ideal);
  if (!ideals.empty()) d.intersection = ideal_intersection(g.ring(), ideals);
  d.intersection_equals_edge_ideal = ideal_equal(d.intersection, edge_ideal(g));
  if (options.check_irredundancy)
    for (std::size_t i : redundant_components(g.ring(), d.components)) d.redundant.push_back(d.components[i].cover());
  return d;
}

std::vector<VertexSet> associated_primes(const WeightedOrientedGraph& g) {
  // The empty set is the only cover of an edgeless graph; the zero ideal
  // gets no primes.
  if (g.edges().empty()) return {};
  return enumerate_strong_covers(g);
}

}  // namespace orideal
