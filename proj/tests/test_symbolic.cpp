#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "orideal/errors.hpp"
#include "orideal/symbolic.hpp"

using namespace orideal;

namespace {

/// Checks `computed` against the localisation definition by brute force.
bool matches_definition(const WeightedOrientedGraph& g, unsigned s, const MonomialIdeal& computed) {
  oracle::Graph pg = oracle::plain(g);
  unsigned bound = s * std::max<unsigned>(1, oracle::max_exponent(oracle::edge_generators(pg)));
  return oracle::equals_on_box(computed, [&](const oracle::Dense& m) { return oracle::in_symbolic_power(pg, s, m); },
                               bound);
}

}  // namespace

TEST_CASE("q_sub_p") {
  WeightedOrientedGraph line2 = oriented_line(2, {1, 1});
  auto comps = strong_components(line2);
  CHECK(to_string(q_sub_p(line2.ring(), comps, {0})) == "[x1]");
  CHECK_THROWS_AS(q_sub_p(line2.ring(), comps, {0, 1}), InputError);

  WeightedOrientedGraph cycle = oriented_cycle(3, {2, 2, 2});
  auto cc = strong_components(cycle);
  std::vector<MonomialIdeal> all;
  for (const auto& c : cc) all.push_back(c.ideal);
  CHECK(q_sub_p(cycle.ring(), cc, {0, 1, 2}) == ideal_intersection(cycle.ring(), all));

  // Broom with tree {z}: the prime {x, z} collects the components under it.
  WeightedOrientedGraph broom = forest_broom(2, 2, rooted_tree({}, "z", {}));
  CHECK(to_string(q_sub_p(broom.ring(), strong_components(broom), broom.vertices_by_name({"x", "z"}))) == "[x, z^2]");
}

TEST_CASE("symbolic_power") {
  WeightedOrientedGraph line = oriented_line(5, {1, 2, 1, 1, 1});
  CHECK(symbolic_power(line, 1) == edge_ideal(line));
  MonomialIdeal third = symbolic_power(line, 3);
  CHECK(third.contains(parse_monomial("x1*x2^2*x3^2*x4", *line.ring())));
  CHECK(matches_definition(line, 3, third));

  WeightedOrientedGraph cycle = oriented_cycle(3, {2, 2, 2});
  CHECK(symbolic_power(cycle, 2) == ideal_power(edge_ideal(cycle), 2));
  CHECK_THROWS_AS(symbolic_power(cycle, 0), InputError);
  CHECK_THROWS_AS(symbolic_power_oracle(cycle, 0), InputError);
}

TEST_CASE("symbolic_power_oracle") {
  WeightedOrientedGraph line3 = oriented_line(3, {1, 1, 1});
  CHECK(symbolic_power_oracle(line3, 1) == edge_ideal(line3));
  CHECK(symbolic_power_oracle(line3, 2) == symbolic_power(line3, 2));
  WeightedOrientedGraph line5 = oriented_line(5, {1, 2, 1, 1, 1});
  CHECK(symbolic_power_oracle(line5, 3) == symbolic_power(line5, 3));
}

TEST_CASE("all-primes mode agrees with maximal primes") {
  SymbolicOptions all;
  all.all_primes = true;
  SymbolicOptions verify;
  verify.verify_maximal_reduction = true;
  for (const auto& g : {oriented_line(5, {1, 2, 1, 1, 1}), oriented_cycle(4, {2, 1, 3, 2})}) {
    for (unsigned s = 1; s <= 3; ++s) {
      CHECK(symbolic_power(g, s, all) == symbolic_power(g, s));
      CHECK_NOTHROW(symbolic_power(g, s, verify));
    }
  }
}

TEST_CASE("compare_powers") {
  EqualityReport line = compare_powers(oriented_line(5, {1, 2, 1, 1, 1}), 3);
  REQUIRE(line.per_s.size() == 3);
  CHECK(line.per_s[0].equal);
  CHECK(line.per_s[1].equal);
  CHECK_FALSE(line.per_s[2].equal);
  REQUIRE(line.per_s[2].witness);
  CHECK(to_string(*line.per_s[2].witness, *line.ring) == "x1*x2^2*x3^2*x4");
  CHECK(line.per_s[2].ordinary_generators == 20);
  CHECK(line.per_s[2].symbolic_generators == 19);
  CHECK(line.first_inequality() == 3u);
  CHECK_FALSE(line.per_s[0].witness);

  CHECK(compare_powers(oriented_line(4, {1, 2, 2, 1}), 3).all_equal());
  for (Weight a = 1; a <= 3; ++a)
    for (Weight b = 1; b <= 3; ++b) CHECK(compare_powers(oriented_line(2, {a, b}), 4).all_equal());
  CHECK(compare_powers(oriented_line(3, {1, 1, 1}), 1).per_s.size() == 1);
}

TEST_CASE("edgeless graphs have zero symbolic powers") {
  WeightedOrientedGraph g({"a", "b"}, {}, {1, 1});
  CHECK(symbolic_power(g, 2).is_zero());
  CHECK(symbolic_power_oracle(g, 2).is_zero());
  CHECK(compare_powers(g, 2).all_equal());
}

TEST_CASE("property: oracle equivalence, containments, definition") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 60; ++trial) {
    WeightedOrientedGraph g = oracle::random_graph(rng, 6, 3);
    PowerEngine engine(g);
    REQUIRE(engine.symbolic(1) == engine.edge_ideal());
    for (unsigned s = 1; s <= 3; ++s) {
      const MonomialIdeal& sym = engine.symbolic(s);
      REQUIRE(sym == engine.oracle(s));
      REQUIRE(sym.contains(engine.ordinary(s)));
      if (s > 1) REQUIRE(engine.symbolic(s - 1).contains(sym));
      SymbolicOptions all;
      all.all_primes = true;
      REQUIRE(engine.symbolic(s, all) == sym);
    }
    if (g.vertex_count() <= 4) REQUIRE(matches_definition(g, 2, engine.symbolic(2)));
  }
}

TEST_CASE("property: witnesses lie in I^(s) but not in I^s") {
  std::mt19937_64 rng(42);
  int unequal = 0;
  for (int trial = 0; trial < 80; ++trial) {
    WeightedOrientedGraph g = oracle::random_graph(rng, 6, 3);
    PowerEngine engine(g);
    EqualityReport r = compare_powers(engine, 3);
    REQUIRE(r.per_s.size() == 3);
    for (const auto& row : r.per_s) {
      REQUIRE(row.witness.has_value() == !row.equal);
      if (!row.witness) continue;
      ++unequal;
      REQUIRE(engine.symbolic(row.s).contains(*row.witness));
      REQUIRE_FALSE(engine.ordinary(row.s).contains(*row.witness));
    }
  }
  CHECK(unequal > 0);
}
