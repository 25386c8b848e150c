#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace orideal {

using VarIndex = std::uint32_t;
using Exponent = std::uint32_t;

/// Ordered set of variable names. Variable i of the polynomial ring is the
/// vertex with input-order index i.
class Ring {
 public:
  explicit Ring(std::vector<std::string> names);

  std::size_t size() const { return names_.size(); }
  const std::string& name(VarIndex v) const { return names_.at(v); }
  const std::vector<std::string>& names() const { return names_; }

  std::optional<VarIndex> find(std::string_view name) const;
  /// Throws InputError for an unknown name.
  VarIndex index(std::string_view name) const;

  bool operator==(const Ring& other) const { return names_ == other.names_; }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, VarIndex> lookup_;
};

using RingPtr = std::shared_ptr<const Ring>;

RingPtr make_ring(std::vector<std::string> names);

/// A power product, stored sparsely as (variable, exponent) pairs sorted by
/// variable with every exponent >= 1. The empty product is the identity.
class Monomial {
 public:
  struct Term {
    VarIndex var;
    Exponent exp;
    bool operator==(const Term&) const = default;
  };

  Monomial() = default;
  /// Any order, repeated variables are multiplied, zero exponents dropped.
  explicit Monomial(std::vector<Term> terms);

  static Monomial variable(VarIndex v, Exponent e = 1);

  std::span<const Term> terms() const { return terms_; }
  Exponent exponent(VarIndex v) const;
  std::uint64_t degree() const { return degree_; }
  bool is_one() const { return terms_.empty(); }
  /// Bit (v mod 64) set for every variable v in the support.
  std::uint64_t support_mask() const { return mask_; }

  bool operator==(const Monomial& other) const { return terms_ == other.terms_; }

  friend bool divides(const Monomial& a, const Monomial& b);
  friend Monomial lcm(const Monomial& a, const Monomial& b);
  friend Monomial operator*(const Monomial& a, const Monomial& b);

  /// Copy with the exponents of the flagged variables set to zero.
  Monomial drop_variables(const std::vector<bool>& dropped) const;

 private:
  void refresh();

  std::vector<Term> terms_;
  std::uint64_t degree_ = 0;
  std::uint64_t mask_ = 0;
};

bool divides(const Monomial& a, const Monomial& b);
Monomial lcm(const Monomial& a, const Monomial& b);
Monomial operator*(const Monomial& a, const Monomial& b);
Monomial pow(const Monomial& m, Exponent k);

/// Canonical generator order: ascending total degree, then lexicographic
/// with larger exponents on lower-indexed variables first.
bool canonical_less(const Monomial& a, const Monomial& b);

/// Formats as "x3^2*x5"; the identity prints as "1".
std::string to_string(const Monomial& m, const Ring& ring);
Monomial parse_monomial(std::string_view text, const Ring& ring);

}  // namespace orideal
