#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "orideal/monomial.hpp"

namespace orideal {

/// A monomial ideal held by its minimal generating set, sorted canonically.
/// Minimal monomial generating sets are unique, so two ideals over the same
/// ring are equal exactly when their generator lists are.
///
/// The zero ideal has no generators; the unit ideal is generated by 1.
class MonomialIdeal {
 public:
  explicit MonomialIdeal(RingPtr ring);
  MonomialIdeal(RingPtr ring, std::vector<Monomial> generators);

  static MonomialIdeal unit(RingPtr ring);

  const Ring& ring() const { return *ring_; }
  const RingPtr& ring_ptr() const { return ring_; }
  std::span<const Monomial> generators() const { return gens_; }
  std::size_t size() const { return gens_.size(); }
  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const { return gens_.size() == 1 && gens_.front().is_one(); }

  bool contains(const Monomial& m) const;
  /// Ideal containment: every generator of `other` lies in *this.
  bool contains(const MonomialIdeal& other) const;

  bool operator==(const MonomialIdeal& other) const;

 private:
  struct Trusted {};
  MonomialIdeal(RingPtr ring, std::vector<Monomial> gens, Trusted);
  friend MonomialIdeal minimalize(RingPtr ring, std::vector<Monomial> gens);

  RingPtr ring_;
  std::vector<Monomial> gens_;
};

MonomialIdeal minimalize(RingPtr ring, std::vector<Monomial> gens);

// Binary operations throw InputError when the ambient rings differ.
MonomialIdeal ideal_sum(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal ideal_product(const MonomialIdeal& a, const MonomialIdeal& b);
/// s = 0 gives the unit ideal.
MonomialIdeal ideal_power(const MonomialIdeal& a, unsigned s);
MonomialIdeal ideal_intersection(const MonomialIdeal& a, const MonomialIdeal& b);
/// Left fold; the empty intersection is the unit ideal of `ring`.
MonomialIdeal ideal_intersection(const RingPtr& ring, std::span<const MonomialIdeal> ideals);

/// Sets the exponents of `vars` to zero in every generator. For monomial
/// ideals this is the saturation by the product of those variables, i.e.
/// the contraction of the extension to the ring with them inverted.
MonomialIdeal saturate_by_variables(const MonomialIdeal& a, std::span<const VarIndex> vars);

/// Re-expresses `a` over `target`, matching variables by name. Throws
/// InputError if a generator uses a variable `target` lacks.
MonomialIdeal embed(const MonomialIdeal& a, RingPtr target);

bool contains_monomial(const MonomialIdeal& a, const Monomial& m);
bool ideal_equal(const MonomialIdeal& a, const MonomialIdeal& b);

/// "[x1*x2^2, x2*x3^2]"; zero ideal "[]", unit ideal "[1]".
std::string to_string(const MonomialIdeal& ideal);
std::vector<std::string> generator_strings(const MonomialIdeal& ideal);
MonomialIdeal parse_ideal(std::string_view text, RingPtr ring);

}  // namespace orideal
