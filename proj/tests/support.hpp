#pragma once

#include <string>
#include <vector>

#include "orideal/ideal.hpp"

namespace support {

inline orideal::RingPtr ring(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
  return orideal::make_ring(std::move(names));
}

inline orideal::MonomialIdeal ideal(const orideal::RingPtr& r, const std::string& text) {
  return orideal::parse_ideal(text, r);
}

inline orideal::Monomial mono(const orideal::RingPtr& r, const std::string& text) {
  return orideal::parse_monomial(text, *r);
}

}  // namespace support
