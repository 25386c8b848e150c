#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "orideal/ideal_theory.hpp"

namespace orideal {

/// Intersection of the components whose cover lies inside `prime`. Throws
/// InputError unless `prime` is the cover of one of the components.
MonomialIdeal q_sub_p(const RingPtr& ring, const std::vector<IrreducibleComponent>& components, const VertexSet& prime);

struct SymbolicOptions {
  /// Intersect over every associated prime instead of the maximal ones.
  bool all_primes = false;
  /// Compute both ways and throw VerificationFailure if they differ.
  bool verify_maximal_reduction = false;
};

/// Caches the decomposition data and the powers of one graph's edge ideal so
/// that sequences of s share work.
///
/// Two independent routes to the symbolic power:
///   symbolic(s): ∩ over maximal associated primes P of (Q_{⊆P})^s;
///   oracle(s):   ∩ over the same P of I^s with the variables outside P
///                inverted, i.e. the localisation definition.
/// The oracle never touches the components; it only needs the primes.
class PowerEngine {
 public:
  explicit PowerEngine(WeightedOrientedGraph g);

  const WeightedOrientedGraph& graph() const { return graph_; }
  const MonomialIdeal& edge_ideal() const { return edge_ideal_; }
  const std::vector<IrreducibleComponent>& components() const { return components_; }
  const std::vector<VertexSet>& primes() const { return primes_; }
  const std::vector<VertexSet>& maximal_primes() const { return maximal_primes_; }

  const MonomialIdeal& ordinary(unsigned s);
  const MonomialIdeal& symbolic(unsigned s);
  MonomialIdeal symbolic(unsigned s, const SymbolicOptions& options);
  MonomialIdeal oracle(unsigned s);
  const MonomialIdeal& q_sub_p(const VertexSet& prime);

 private:
  MonomialIdeal symbolic_over(unsigned s, const std::vector<VertexSet>& primes);
  const MonomialIdeal& q_power(const VertexSet& prime, unsigned s);

  WeightedOrientedGraph graph_;
  MonomialIdeal edge_ideal_;
  std::vector<IrreducibleComponent> components_;
  std::vector<VertexSet> primes_;
  std::vector<VertexSet> maximal_primes_;
  std::vector<MonomialIdeal> ordinary_;  // ordinary_[s-1] = I^s
  std::map<unsigned, MonomialIdeal> symbolic_;
  std::map<VertexSet, MonomialIdeal> q_;
  std::map<VertexSet, std::vector<MonomialIdeal>> q_powers_;
};

/// s >= 1; throws InputError for s = 0.
MonomialIdeal symbolic_power(const WeightedOrientedGraph& g, unsigned s, const SymbolicOptions& options = {});
MonomialIdeal symbolic_power_oracle(const WeightedOrientedGraph& g, unsigned s);

struct PowerComparison {
  unsigned s;
  bool equal;
  /// A minimal generator of I^(s) outside I^s; present iff !equal.
  std::optional<Monomial> witness;
  std::size_t ordinary_generators;
  std::size_t symbolic_generators;
};

struct EqualityReport {
  std::string graph;
  RingPtr ring;
  unsigned s_max;
  std::vector<PowerComparison> per_s;

  bool all_equal() const;
  /// Smallest s with I^(s) != I^s.
  std::optional<unsigned> first_inequality() const;
};

/// Compares I^s with I^(s) for s = 1..s_max. The witness is the first
/// generator of I^(s), in canonical order, not lying in I^s. Throws
/// VerificationFailure if I^s is not contained in I^(s).
EqualityReport compare_powers(const WeightedOrientedGraph& g, unsigned s_max);
EqualityReport compare_powers(PowerEngine& engine, unsigned s_max);

}  // namespace orideal
