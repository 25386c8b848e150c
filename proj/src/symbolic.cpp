#include "orideal/symbolic.hpp"

#include <algorithm>

#include "orideal/errors.hpp"

namespace orideal {

MonomialIdeal q_sub_p(const RingPtr& ring, const std::vector<IrreducibleComponent>& components,
                      const VertexSet& prime) {
  bool is_associated = std::any_of(components.begin(), components.end(),
                                   [&](const IrreducibleComponent& c) { return c.cover() == prime; });
  if (!is_associated) throw InputError("q_sub_p: the given vertex set is not an associated prime");
  MonomialIdeal acc = MonomialIdeal::unit(ring);
  for (const auto& c : components)
    if (is_subset(c.cover(), prime)) acc = ideal_intersection(acc, c.ideal);
  return acc;
}

PowerEngine::PowerEngine(WeightedOrientedGraph g)
    : graph_(std::move(g)),
      edge_ideal_(orideal::edge_ideal(graph_)),
      components_(strong_components(graph_)),
      primes_(associated_primes(graph_)),
      maximal_primes_(maximal_elements(primes_)) {}

const MonomialIdeal& PowerEngine::ordinary(unsigned s) {
  if (s == 0) throw InputError("power exponent must be >= 1");
  if (ordinary_.empty()) ordinary_.push_back(edge_ideal_);
  while (ordinary_.size() < s) ordinary_.push_back(ideal_product(ordinary_.back(), edge_ideal_));
  return ordinary_[s - 1];
}

const MonomialIdeal& PowerEngine::q_sub_p(const VertexSet& prime) {
  auto it = q_.find(prime);
  if (it == q_.end()) it = q_.emplace(prime, orideal::q_sub_p(graph_.ring(), components_, prime)).first;
  return it->second;
}

const MonomialIdeal& PowerEngine::q_power(const VertexSet& prime, unsigned s) {
  auto& powers = q_powers_[prime];
  if (powers.empty()) powers.push_back(q_sub_p(prime));
  while (powers.size() < s) powers.push_back(ideal_product(powers.back(), powers.front()));
  return powers[s - 1];
}

MonomialIdeal PowerEngine::symbolic_over(unsigned s, const std::vector<VertexSet>& primes) {
  if (s == 0) throw InputError("symbolic power exponent must be >= 1");
  // Edgeless graph: zero ideal, no primes.
  if (primes.empty()) return MonomialIdeal(graph_.ring());
  MonomialIdeal acc = MonomialIdeal::unit(graph_.ring());
  for (const VertexSet& p : primes) acc = ideal_intersection(acc, q_power(p, s));
  return acc;
}

const MonomialIdeal& PowerEngine::symbolic(unsigned s) {
  auto it = symbolic_.find(s);
  if (it == symbolic_.end()) it = symbolic_.emplace(s, symbolic_over(s, maximal_primes_)).first;
  return it->second;
}

MonomialIdeal PowerEngine::symbolic(unsigned s, const SymbolicOptions& options) {
  if (options.verify_maximal_reduction) {
    MonomialIdeal full = symbolic_over(s, primes_);
    const MonomialIdeal& reduced = symbolic(s);
    if (!ideal_equal(full, reduced))
      throw VerificationFailure("symbolic power over all primes " + to_string(full) +
                                " differs from the maximal-prime result " + to_string(reduced));
    return full;
  }
  if (options.all_primes) return symbolic_over(s, primes_);
  return symbolic(s);
}

MonomialIdeal PowerEngine::oracle(unsigned s) {
  if (s == 0) throw InputError("symbolic power exponent must be >= 1");
  if (maximal_primes_.empty()) return MonomialIdeal(graph_.ring());
  const MonomialIdeal& power = ordinary(s);
  MonomialIdeal acc = MonomialIdeal::unit(graph_.ring());
  for (const VertexSet& p : maximal_primes_) {
    std::vector<VarIndex> outside;
    for (Vertex v = 0; v < graph_.vertex_count(); ++v)
      if (!std::binary_search(p.begin(), p.end(), v)) outside.push_back(v);
    acc = ideal_intersection(acc, saturate_by_variables(power, outside));
  }
  return acc;
}

MonomialIdeal symbolic_power(const WeightedOrientedGraph& g, unsigned s, const SymbolicOptions& options) {
  if (s == 0) throw InputError("symbolic power exponent must be >= 1");
  PowerEngine engine(g);
  return engine.symbolic(s, options);
}

MonomialIdeal symbolic_power_oracle(const WeightedOrientedGraph& g, unsigned s) {
  if (s == 0) throw InputError("symbolic power exponent must be >= 1");
  PowerEngine engine(g);
  return engine.oracle(s);
}

bool EqualityReport::all_equal() const {
  return std::all_of(per_s.begin(), per_s.end(), [](const PowerComparison& c) { return c.equal; });
}

std::optional<unsigned> EqualityReport::first_inequality() const {
  for (const auto& c : per_s)
    if (!c.equal) return c.s;
  return std::nullopt;
}

EqualityReport compare_powers(const WeightedOrientedGraph& g, unsigned s_max) {
  PowerEngine engine(g);
  return compare_powers(engine, s_max);
}

EqualityReport compare_powers(PowerEngine& engine, unsigned s_max) {
  if (s_max == 0) throw InputError("s_max must be >= 1");
  EqualityReport report{describe(engine.graph()), engine.graph().ring(), s_max, {}};
  for (unsigned s = 1; s <= s_max; ++s) {
    const MonomialIdeal& ordinary = engine.ordinary(s);
    const MonomialIdeal& symbolic = engine.symbolic(s);
    if (!symbolic.contains(ordinary))
      throw VerificationFailure("I^" + std::to_string(s) + " is not contained in I^(" + std::to_string(s) +
                                ") for " + report.graph);
    PowerComparison row{s, ideal_equal(ordinary, symbolic), std::nullopt, ordinary.size(), symbolic.size()};
    if (!row.equal) {
      for (const Monomial& g : symbolic.generators())
        if (!ordinary.contains(g)) {
          row.witness = g;
          break;
        }
    }
    report.per_s.push_back(std::move(row));
  }
  return report;
}

}  // namespace orideal
