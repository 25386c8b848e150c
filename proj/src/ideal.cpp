#include "orideal/ideal.hpp"

#include <algorithm>

#include "orideal/errors.hpp"

namespace orideal {

namespace {

void require_same_ring(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (a.ring_ptr() == b.ring_ptr()) return;
  if (!(a.ring() == b.ring())) throw InputError("monomial ideals live in different ambient rings");
}

void require_ring(const RingPtr& ring) {
  if (!ring) throw InputError("null ambient ring");
}

}  // namespace

MonomialIdeal::MonomialIdeal(RingPtr ring) : ring_(std::move(ring)) { require_ring(ring_); }

MonomialIdeal::MonomialIdeal(RingPtr ring, std::vector<Monomial> generators)
    : MonomialIdeal(minimalize(std::move(ring), std::move(generators))) {}

MonomialIdeal::MonomialIdeal(RingPtr ring, std::vector<Monomial> gens, Trusted)
    : ring_(std::move(ring)), gens_(std::move(gens)) {}

MonomialIdeal MonomialIdeal::unit(RingPtr ring) { return MonomialIdeal(std::move(ring), {Monomial()}); }

bool MonomialIdeal::contains(const Monomial& m) const {
  for (const Monomial& g : gens_) {
    if (g.degree() > m.degree()) break;
    if (divides(g, m)) return true;
  }
  return false;
}

bool MonomialIdeal::contains(const MonomialIdeal& other) const {
  require_same_ring(*this, other);
  return std::all_of(other.gens_.begin(), other.gens_.end(), [this](const Monomial& g) { return contains(g); });
}

bool MonomialIdeal::operator==(const MonomialIdeal& other) const { return ideal_equal(*this, other); }

MonomialIdeal minimalize(RingPtr ring, std::vector<Monomial> gens) {
  require_ring(ring);
  for (const Monomial& g : gens)
    if (!g.terms().empty() && g.terms().back().var >= ring->size())
      throw InputError("monomial uses a variable outside the ambient ring");
  std::sort(gens.begin(), gens.end(), canonical_less);
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());

  // Sorted by degree, so only strictly lower-degree survivors can divide a
  // candidate; equal-degree distinct monomials never divide each other.
  std::vector<Monomial> kept;
  kept.reserve(gens.size());
  std::size_t lower_end = 0;
  for (Monomial& m : gens) {
    if (!kept.empty() && kept.back().degree() < m.degree()) lower_end = kept.size();
    bool redundant = false;
    for (std::size_t i = 0; i < lower_end; ++i) {
      if (divides(kept[i], m)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) kept.push_back(std::move(m));
  }
  return MonomialIdeal(std::move(ring), std::move(kept), MonomialIdeal::Trusted{});
}

MonomialIdeal ideal_sum(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_ring(a, b);
  std::vector<Monomial> gens(a.generators().begin(), a.generators().end());
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return minimalize(a.ring_ptr(), std::move(gens));
}

MonomialIdeal ideal_product(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_ring(a, b);
  std::vector<Monomial> gens;
  gens.reserve(a.size() * b.size());
  for (const Monomial& g : a.generators())
    for (const Monomial& h : b.generators()) gens.push_back(g * h);
  return minimalize(a.ring_ptr(), std::move(gens));
}

MonomialIdeal ideal_power(const MonomialIdeal& a, unsigned s) {
  if (s == 0) return MonomialIdeal::unit(a.ring_ptr());
  MonomialIdeal acc = a;
  for (unsigned k = 1; k < s; ++k) acc = ideal_product(acc, a);
  return acc;
}

MonomialIdeal ideal_intersection(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_ring(a, b);
  std::vector<Monomial> gens;
  gens.reserve(a.size() + b.size());
  // A generator already in the other ideal is its own contribution; every
  // other lcm it forms is a multiple of it.
  std::vector<const Monomial*> a_rest;
  std::vector<const Monomial*> b_rest;
  for (const Monomial& g : a.generators()) {
    if (b.contains(g))
      gens.push_back(g);
    else
      a_rest.push_back(&g);
  }
  for (const Monomial& h : b.generators()) {
    if (a.contains(h))
      gens.push_back(h);
    else
      b_rest.push_back(&h);
  }
  for (const Monomial* g : a_rest)
    for (const Monomial* h : b_rest) gens.push_back(lcm(*g, *h));
  return minimalize(a.ring_ptr(), std::move(gens));
}

MonomialIdeal ideal_intersection(const RingPtr& ring, std::span<const MonomialIdeal> ideals) {
  MonomialIdeal acc = MonomialIdeal::unit(ring);
  for (const MonomialIdeal& next : ideals) acc = ideal_intersection(acc, next);
  return acc;
}

MonomialIdeal saturate_by_variables(const MonomialIdeal& a, std::span<const VarIndex> vars) {
  std::vector<bool> dropped(a.ring().size(), false);
  for (VarIndex v : vars) {
    if (v >= dropped.size()) throw InputError("saturation variable outside the ambient ring");
    dropped[v] = true;
  }
  std::vector<Monomial> gens;
  gens.reserve(a.size());
  for (const Monomial& g : a.generators()) gens.push_back(g.drop_variables(dropped));
  return minimalize(a.ring_ptr(), std::move(gens));
}

MonomialIdeal embed(const MonomialIdeal& a, RingPtr target) {
  require_ring(target);
  std::vector<Monomial> gens;
  gens.reserve(a.size());
  for (const Monomial& g : a.generators()) {
    std::vector<Monomial::Term> terms;
    for (const auto& t : g.terms()) terms.push_back({target->index(a.ring().name(t.var)), t.exp});
    gens.push_back(Monomial(std::move(terms)));
  }
  return minimalize(std::move(target), std::move(gens));
}

bool contains_monomial(const MonomialIdeal& a, const Monomial& m) { return a.contains(m); }

bool ideal_equal(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_ring(a, b);
  return std::equal(a.generators().begin(), a.generators().end(), b.generators().begin(), b.generators().end());
}

std::vector<std::string> generator_strings(const MonomialIdeal& ideal) {
  std::vector<std::string> out;
  out.reserve(ideal.size());
  for (const Monomial& g : ideal.generators()) out.push_back(to_string(g, ideal.ring()));
  return out;
}

std::string to_string(const MonomialIdeal& ideal) {
  std::string out = "[";
  bool first = true;
  for (const std::string& g : generator_strings(ideal)) {
    if (!first) out += ", ";
    out += g;
    first = false;
  }
  return out + "]";
}

MonomialIdeal parse_ideal(std::string_view text, RingPtr ring) {
  require_ring(ring);
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  if (text.size() < 2 || text.front() != '[' || text.back() != ']')
    throw InputError("ideal must be written as a bracketed generator list");
  text = text.substr(1, text.size() - 2);
  std::vector<Monomial> gens;
  if (text.find_first_not_of(" \t") != std::string_view::npos) {
    while (true) {
      auto comma = text.find(',');
      gens.push_back(parse_monomial(text.substr(0, comma), *ring));
      if (comma == std::string_view::npos) break;
      text = text.substr(comma + 1);
    }
  }
  return minimalize(std::move(ring), std::move(gens));
}

}  // namespace orideal
