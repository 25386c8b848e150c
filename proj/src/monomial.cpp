#include "orideal/monomial.hpp"

#include <algorithm>
#include <charconv>
#include <limits>

#include "orideal/errors.hpp"

namespace orideal {

namespace {

Exponent checked_add(Exponent a, Exponent b) {
  Exponent out{};
  if (__builtin_add_overflow(a, b, &out)) throw ExponentOverflow("exponent overflow in monomial product");
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\n')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\n')) s.remove_suffix(1);
  return s;
}

}  // namespace

Ring::Ring(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.size() > std::numeric_limits<VarIndex>::max()) throw InputError("too many variables");
  for (VarIndex i = 0; i < names_.size(); ++i) {
    if (names_[i].empty()) throw InputError("empty variable name");
    if (!lookup_.emplace(names_[i], i).second) throw InputError("duplicate variable name '" + names_[i] + "'");
  }
}

std::optional<VarIndex> Ring::find(std::string_view name) const {
  auto it = lookup_.find(std::string(name));
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

VarIndex Ring::index(std::string_view name) const {
  if (auto v = find(name)) return *v;
  throw InputError("unknown variable '" + std::string(name) + "'");
}

RingPtr make_ring(std::vector<std::string> names) { return std::make_shared<const Ring>(std::move(names)); }

Monomial::Monomial(std::vector<Term> terms) : terms_(std::move(terms)) {
  std::sort(terms_.begin(), terms_.end(), [](const Term& a, const Term& b) { return a.var < b.var; });
  std::vector<Term> merged;
  merged.reserve(terms_.size());
  for (const Term& t : terms_) {
    if (t.exp == 0) continue;
    if (!merged.empty() && merged.back().var == t.var)
      merged.back().exp = checked_add(merged.back().exp, t.exp);
    else
      merged.push_back(t);
  }
  terms_ = std::move(merged);
  refresh();
}

Monomial Monomial::variable(VarIndex v, Exponent e) { return Monomial({Term{v, e}}); }

void Monomial::refresh() {
  degree_ = 0;
  mask_ = 0;
  for (const Term& t : terms_) {
    degree_ += t.exp;
    mask_ |= std::uint64_t{1} << (t.var % 64);
  }
}

Exponent Monomial::exponent(VarIndex v) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), v, [](const Term& t, VarIndex x) { return t.var < x; });
  return (it != terms_.end() && it->var == v) ? it->exp : 0;
}

Monomial Monomial::drop_variables(const std::vector<bool>& dropped) const {
  Monomial out;
  out.terms_.reserve(terms_.size());
  for (const Term& t : terms_)
    if (t.var >= dropped.size() || !dropped[t.var]) out.terms_.push_back(t);
  out.refresh();
  return out;
}

bool divides(const Monomial& a, const Monomial& b) {
  if (a.degree_ > b.degree_ || (a.mask_ & ~b.mask_) != 0) return false;
  auto ib = b.terms_.begin();
  for (const auto& ta : a.terms_) {
    while (ib != b.terms_.end() && ib->var < ta.var) ++ib;
    if (ib == b.terms_.end() || ib->var != ta.var || ib->exp < ta.exp) return false;
  }
  return true;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial out;
  out.terms_.reserve(a.terms_.size() + b.terms_.size());
  auto ia = a.terms_.begin();
  auto ib = b.terms_.begin();
  while (ia != a.terms_.end() || ib != b.terms_.end()) {
    if (ib == b.terms_.end() || (ia != a.terms_.end() && ia->var < ib->var)) {
      out.terms_.push_back(*ia++);
    } else if (ia == a.terms_.end() || ib->var < ia->var) {
      out.terms_.push_back(*ib++);
    } else {
      out.terms_.push_back({ia->var, std::max(ia->exp, ib->exp)});
      ++ia;
      ++ib;
    }
  }
  out.refresh();
  return out;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial out;
  out.terms_.reserve(a.terms_.size() + b.terms_.size());
  auto ia = a.terms_.begin();
  auto ib = b.terms_.begin();
  while (ia != a.terms_.end() || ib != b.terms_.end()) {
    if (ib == b.terms_.end() || (ia != a.terms_.end() && ia->var < ib->var)) {
      out.terms_.push_back(*ia++);
    } else if (ia == a.terms_.end() || ib->var < ia->var) {
      out.terms_.push_back(*ib++);
    } else {
      out.terms_.push_back({ia->var, checked_add(ia->exp, ib->exp)});
      ++ia;
      ++ib;
    }
  }
  out.refresh();
  return out;
}

Monomial pow(const Monomial& m, Exponent k) {
  std::vector<Monomial::Term> terms(m.terms().begin(), m.terms().end());
  for (auto& t : terms) {
    Exponent e{};
    if (__builtin_mul_overflow(t.exp, k, &e)) throw ExponentOverflow("exponent overflow in monomial power");
    t.exp = e;
  }
  return Monomial(std::move(terms));
}

bool canonical_less(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  auto ta = a.terms();
  auto tb = b.terms();
  std::size_t i = 0;
  for (; i < ta.size() && i < tb.size(); ++i) {
    if (ta[i].var != tb[i].var) return ta[i].var < tb[i].var;
    if (ta[i].exp != tb[i].exp) return ta[i].exp > tb[i].exp;
  }
  // Equal degree and a common prefix means both are exhausted together.
  return false;
}

std::string to_string(const Monomial& m, const Ring& ring) {
  if (m.is_one()) return "1";
  std::string out;
  for (const auto& t : m.terms()) {
    if (!out.empty()) out += '*';
    out += ring.name(t.var);
    if (t.exp != 1) {
      out += '^';
      out += std::to_string(t.exp);
    }
  }
  return out;
}

Monomial parse_monomial(std::string_view text, const Ring& ring) {
  text = trim(text);
  if (text.empty()) throw InputError("empty monomial");
  if (text == "1") return Monomial();
  std::vector<Monomial::Term> terms;
  while (true) {
    auto star = text.find('*');
    std::string_view factor = trim(text.substr(0, star));
    Exponent e = 1;
    auto caret = factor.find('^');
    std::string_view name = trim(factor.substr(0, caret));
    if (caret != std::string_view::npos) {
      std::string_view digits = trim(factor.substr(caret + 1));
      auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), e);
      if (ec != std::errc{} || ptr != digits.data() + digits.size())
        throw InputError("bad exponent in monomial '" + std::string(factor) + "'");
    }
    if (name == "1") {
      if (caret != std::string_view::npos) throw InputError("exponent on constant factor");
    } else {
      terms.push_back({ring.index(name), e});
    }
    if (star == std::string_view::npos) break;
    text = text.substr(star + 1);
  }
  return Monomial(std::move(terms));
}

}  // namespace orideal
