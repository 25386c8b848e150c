#pragma once

#include <vector>

#include "orideal/covers.hpp"
#include "orideal/graph.hpp"
#include "orideal/ideal.hpp"

namespace orideal {

/// Which vertices of a strong cover contribute a weighted pure power x^w(x).
///   adopted: l2 ∪ l3 (l1 vertices contribute the variable itself). This is
///            the reading under which the strong-cover decomposition holds.
///   literal: l1 ∪ l2 as the formula is commonly printed; l3 contributes
///            nothing. Kept for comparison only.
enum class ComponentReading { adopted, literal };

struct IrreducibleComponent {
  CoverPartition partition;
  MonomialIdeal ideal;
  /// Variables of the radical; always equal to the cover.
  VertexSet radical_support;

  const VertexSet& cover() const { return partition.cover; }
};

/// Generated by tail * head^w(head), one per edge.
MonomialIdeal edge_ideal(const WeightedOrientedGraph& g);
/// Same, embedded in a larger ring containing every vertex name of `g`.
MonomialIdeal edge_ideal(const WeightedOrientedGraph& g, const RingPtr& ring);

/// Throws InputError if `cover` is not strong.
IrreducibleComponent irreducible_ideal(const WeightedOrientedGraph& g, const VertexSet& cover,
                                       ComponentReading reading = ComponentReading::adopted);

struct Decomposition {
  std::vector<IrreducibleComponent> components;
  MonomialIdeal intersection;
  bool intersection_equals_edge_ideal;
  /// Covers whose component contains the intersection of all the others.
  /// Expected empty; reported, never removed.
  std::vector<VertexSet> redundant;
};

struct DecompositionOptions {
  ComponentReading reading = ComponentReading::adopted;
  bool check_irredundancy = true;
};

Decomposition irreducible_decomposition(const WeightedOrientedGraph& g, const DecompositionOptions& options = {});

/// One component per strong cover, in cover enumeration order.
std::vector<IrreducibleComponent> strong_components(const WeightedOrientedGraph& g,
                                                    ComponentReading reading = ComponentReading::adopted);

/// Variable supports of the associated primes: exactly the strong covers.
std::vector<VertexSet> associated_primes(const WeightedOrientedGraph& g);

/// Indices of components that can be dropped without changing the
/// intersection of the rest.
std::vector<std::size_t> redundant_components(const RingPtr& ring, const std::vector<IrreducibleComponent>& components);

}  // namespace orideal
