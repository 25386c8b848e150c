#include <doctest.h>

#include <algorithm>
#include <random>

#include "oracles.hpp"
#include "orideal/errors.hpp"
#include "orideal/graph.hpp"
#include "orideal/ideal_theory.hpp"
#include "support.hpp"

using namespace orideal;
using support::ideal;
using support::mono;

namespace {

MonomialIdeal random_ideal(std::mt19937_64& rng, const RingPtr& r, std::size_t max_gens, unsigned max_exp) {
  std::size_t k = std::uniform_int_distribution<std::size_t>(0, max_gens)(rng);
  std::uniform_int_distribution<unsigned> e(0, max_exp);
  std::vector<Monomial> gens;
  for (std::size_t i = 0; i < k; ++i) {
    oracle::Dense d(r->size());
    for (auto& x : d) x = e(rng);
    gens.push_back(oracle::sparse(d));
  }
  return minimalize(r, std::move(gens));
}

}  // namespace

TEST_CASE("monomial representation") {
  auto r = support::ring(5);
  Monomial m({{2, 2}, {4, 1}, {0, 0}});
  CHECK(to_string(m, *r) == "x3^2*x5");
  CHECK(m.degree() == 3);
  CHECK(m.exponent(0) == 0);
  CHECK(m.terms().size() == 2);
  CHECK(to_string(Monomial(), *r) == "1");
  CHECK(Monomial({{1, 1}, {1, 2}}) == Monomial::variable(1, 3));
  CHECK(parse_monomial("x3^2*x5", *r) == m);
  CHECK_THROWS_AS(parse_monomial("y1", *r), InputError);
  CHECK_THROWS_AS(parse_monomial("x1^a", *r), InputError);
}

TEST_CASE("divides") {
  auto r = support::ring(3);
  CHECK(divides(Monomial(), Monomial()));
  CHECK(divides(mono(r, "x1*x2^2"), mono(r, "x1^2*x2^2*x3")));
  CHECK_FALSE(divides(mono(r, "x1^3"), mono(r, "x1^2*x3^5")));
}

TEST_CASE("lcm") {
  auto r = support::ring(3);
  CHECK(lcm(mono(r, "x1^2*x2"), mono(r, "x2^3")) == mono(r, "x1^2*x2^3"));
  Monomial m = mono(r, "x1*x3^4");
  CHECK(lcm(m, Monomial()) == m);
  CHECK(lcm(m, m) == m);
}

TEST_CASE("exponent overflow is an error") {
  Monomial big = Monomial::variable(0, 0xffffffffu);
  CHECK_THROWS_AS(big * Monomial::variable(0), ExponentOverflow);
  CHECK_THROWS_AS(pow(Monomial::variable(0, 0x10000u), 0x10000u), ExponentOverflow);
}

TEST_CASE("minimalize") {
  auto r = support::ring(3);
  CHECK(to_string(ideal(r, "[x1, x1*x2]")) == "[x1]");
  CHECK(to_string(ideal(r, "[x2*x3^2, x1*x2^2]")) == "[x1*x2^2, x2*x3^2]");
  MonomialIdeal zero = minimalize(r, {});
  CHECK(zero.is_zero());
  CHECK(to_string(zero) == "[]");
  CHECK(MonomialIdeal::unit(r).is_unit());
  CHECK(to_string(ideal(r, "[x1, 1]")) == "[1]");
}

TEST_CASE("canonical order is graded, then larger exponents on earlier variables") {
  auto r = support::ring(3);
  CHECK(to_string(ideal(r, "[x3^2, x1*x2, x1^2, x2, x2*x3]")) == "[x2, x1^2, x3^2]");
  CHECK(to_string(ideal(r, "[x3^3, x1*x3^2, x1^2*x3, x2^3, x1*x2*x3]")) == "[x1^2*x3, x1*x2*x3, x1*x3^2, x2^3, x3^3]");
}

TEST_CASE("ideal_sum") {
  auto r = support::ring(2);
  CHECK(to_string(ideal_sum(ideal(r, "[x1]"), ideal(r, "[x2]"))) == "[x1, x2]");
  CHECK(to_string(ideal_sum(ideal(r, "[x1]"), ideal(r, "[x1*x2]"))) == "[x1]");
  CHECK_THROWS_AS(ideal_sum(ideal(r, "[x1]"), ideal(support::ring(3), "[x1]")), InputError);
}

TEST_CASE("ideal_sum rebuilds a broom from its pieces") {
  WeightedOrientedGraph tree = rooted_tree({{"t1", "z"}, {"t2", "t1"}}, "z", {{"z", 2}, {"t1", 2}, {"t2", 2}});
  WeightedOrientedGraph broom = forest_broom(2, 2, tree);
  RingPtr r = broom.ring();
  MonomialIdeal spine = parse_ideal("[x*y^2, y*z^2]", r);
  CHECK(ideal_sum(spine, edge_ideal(tree, r)) == edge_ideal(broom));
}

TEST_CASE("ideal_product") {
  auto r = support::ring(2);
  CHECK(to_string(ideal_product(ideal(r, "[x1]"), ideal(r, "[x2]"))) == "[x1*x2]");
  MonomialIdeal i = ideal(r, "[x1*x2^2, x2^3]");
  CHECK(ideal_product(i, MonomialIdeal::unit(r)) == i);
  CHECK(to_string(ideal_product(ideal(r, "[x1, x2]"), ideal(r, "[x1, x2]"))) == "[x1^2, x1*x2, x2^2]");
  CHECK(ideal_product(i, MonomialIdeal(r)).is_zero());
}

TEST_CASE("ideal_power") {
  auto r = support::ring(3);
  MonomialIdeal i = ideal(r, "[x1*x2^2, x2*x3^2]");
  MonomialIdeal sq = ideal_power(i, 2);
  CHECK(to_string(sq) == "[x1^2*x2^4, x1*x2^3*x3^2, x2^2*x3^4]");
  // Same value from the brute-force product oracle.
  CHECK(oracle::equals_on_box(sq, [&](const oracle::Dense& m) { return oracle::in_power(oracle::dense_generators(i), 2, m); }, 4));
  CHECK(ideal_power(i, 1) == i);
  CHECK(ideal_power(i, 0).is_unit());
  CHECK(to_string(ideal_power(ideal(r, "[x1]"), 3)) == "[x1^3]");
}

TEST_CASE("ideal_intersection") {
  auto r = support::ring(3);
  CHECK(to_string(ideal_intersection(ideal(r, "[x1]"), ideal(r, "[x2]"))) == "[x1*x2]");
  MonomialIdeal i = ideal(r, "[x1*x2^2, x3]");
  CHECK(ideal_intersection(i, i) == i);
  CHECK(ideal_intersection(i, MonomialIdeal(r)).is_zero());
  CHECK(ideal_intersection(r, std::span<const MonomialIdeal>{}).is_unit());

  auto xyz = make_ring({"x", "y", "z"});
  MonomialIdeal meet = ideal_intersection(parse_ideal("[x, z^2]", xyz), parse_ideal("[y^2, y*z^2]", xyz));
  CHECK(meet.contains(parse_monomial("x*y^2", *xyz)));
  CHECK(meet.contains(parse_monomial("y*z^2", *xyz)));
  CHECK(to_string(meet) == "[x*y^2, y*z^2]");
}

TEST_CASE("saturate_by_variables") {
  auto r = support::ring(3);
  std::vector<VarIndex> x3{2}, none, x1x2{0, 1};
  MonomialIdeal i = ideal(r, "[x1*x2^2, x2*x3^2]");
  CHECK(to_string(saturate_by_variables(i, x3)) == "[x2]");
  CHECK(saturate_by_variables(i, none) == i);
  CHECK(saturate_by_variables(ideal(r, "[x1^2*x2^3]"), x1x2).is_unit());
}

TEST_CASE("contains_monomial") {
  auto r = support::ring(5);
  CHECK(contains_monomial(ideal(r, "[x1*x2^2]"), mono(r, "x1*x2^3*x3")));
  CHECK_FALSE(contains_monomial(ideal(r, "[x1*x2^2]"), mono(r, "x1*x2")));
  MonomialIdeal cube = ideal_power(edge_ideal(oriented_line(5, {1, 2, 1, 1, 1})), 3);
  CHECK_FALSE(contains_monomial(cube, mono(r, "x1*x2^2*x3^2*x4")));
}

TEST_CASE("ideal_equal") {
  auto r = support::ring(3);
  CHECK(ideal_equal(ideal(r, "[x1, x2]"), ideal(r, "[x2, x1]")));
  CHECK_FALSE(ideal_equal(ideal(r, "[x1]"), ideal(r, "[x1^2]")));
  CHECK_THROWS_AS(ideal_equal(ideal(r, "[x1]"), ideal(support::ring(2), "[x1]")), InputError);
}

TEST_CASE("embed matches variables by name") {
  auto small = make_ring({"b", "a"});
  auto big = make_ring({"a", "b", "c"});
  MonomialIdeal i = parse_ideal("[b*a^2]", small);
  CHECK(to_string(embed(i, big)) == "[a^2*b]");
  CHECK_THROWS_AS(embed(parse_ideal("[c]", big), small), InputError);
}

TEST_CASE("property: intersection generators and lcm pairs") {
  std::mt19937_64 rng(1);
  auto r = support::ring(4);
  for (int trial = 0; trial < 200; ++trial) {
    MonomialIdeal a = random_ideal(rng, r, 4, 3), b = random_ideal(rng, r, 4, 3);
    MonomialIdeal c = ideal_intersection(a, b);
    for (const auto& g : c.generators()) {
      REQUIRE(contains_monomial(a, g));
      REQUIRE(contains_monomial(b, g));
    }
    for (const auto& g : a.generators())
      for (const auto& h : b.generators()) REQUIRE(contains_monomial(c, lcm(g, h)));
    auto ga = oracle::dense_generators(a), gb = oracle::dense_generators(b);
    REQUIRE(oracle::equals_on_box(c, [&](const oracle::Dense& m) { return oracle::member(ga, m) && oracle::member(gb, m); }, 3));
  }
}

TEST_CASE("property: powers add") {
  std::mt19937_64 rng(2);
  auto r = support::ring(3);
  for (int trial = 0; trial < 60; ++trial) {
    MonomialIdeal a = random_ideal(rng, r, 3, 2);
    for (unsigned s = 0; s <= 2; ++s)
      for (unsigned t = 0; t <= 2; ++t) {
        MonomialIdeal lhs = ideal_power(a, s + t);
        MonomialIdeal rhs = ideal_product(ideal_power(a, s), ideal_power(a, t));
        REQUIRE(lhs.contains(rhs));
        REQUIRE(rhs.contains(lhs));
      }
    auto ga = oracle::dense_generators(a);
    REQUIRE(oracle::equals_on_box(ideal_power(a, 3), [&](const oracle::Dense& m) { return oracle::in_power(ga, 3, m); }, 6));
  }
}

TEST_CASE("property: minimalize is idempotent and order-insensitive") {
  std::mt19937_64 rng(3);
  auto r = support::ring(4);
  std::uniform_int_distribution<unsigned> e(0, 3);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Monomial> gens;
    for (int k = 0; k < 6; ++k) {
      oracle::Dense d(4);
      for (auto& x : d) x = e(rng);
      gens.push_back(oracle::sparse(d));
    }
    MonomialIdeal once = minimalize(r, gens);
    std::vector<Monomial> again(once.generators().begin(), once.generators().end());
    REQUIRE(minimalize(r, again).generators().size() == once.size());
    REQUIRE(minimalize(r, again) == once);
    std::shuffle(gens.begin(), gens.end(), rng);
    REQUIRE(minimalize(r, gens) == once);
    // Minimality: no generator divides another.
    for (const auto& g : once.generators())
      for (const auto& h : once.generators()) REQUIRE((g == h || !divides(g, h)));
  }
}

TEST_CASE("property: membership agrees with brute force up to degree 12 on 5 variables") {
  std::mt19937_64 rng(4);
  auto r = support::ring(5);
  for (int trial = 0; trial < 4; ++trial) {
    MonomialIdeal a = random_ideal(rng, r, 5, 3);
    auto gens = oracle::dense_generators(a);
    std::size_t checked = 0;
    oracle::for_each_up_to_degree(5, 12, [&](const oracle::Dense& m) {
      ++checked;
      if (contains_monomial(a, oracle::sparse(m)) != oracle::generator_multiple(gens, m))
        FAIL("membership mismatch on " << to_string(oracle::sparse(m), *r) << " in " << to_string(a));
    });
    CHECK(checked == 6188);
  }
}

TEST_CASE("property: saturation contains the ideal and is idempotent") {
  std::mt19937_64 rng(5);
  auto r = support::ring(4);
  for (int trial = 0; trial < 200; ++trial) {
    MonomialIdeal a = random_ideal(rng, r, 4, 3);
    std::vector<VarIndex> vars;
    for (VarIndex v = 0; v < 4; ++v)
      if (rng() & 1) vars.push_back(v);
    MonomialIdeal sat = saturate_by_variables(a, vars);
    REQUIRE(sat.contains(a));
    REQUIRE(saturate_by_variables(sat, vars) == sat);
    // m is in the saturation iff m times a high power of the variables is in a.
    Monomial boost;
    for (VarIndex v : vars) boost = boost * Monomial::variable(v, 3);
    auto ga = oracle::dense_generators(a);
    REQUIRE(oracle::equals_on_box(sat, [&](const oracle::Dense& m) { return oracle::member(ga, oracle::dense(oracle::sparse(m) * boost, 4)); }, 3));
  }
}

TEST_CASE("property: equality is mutual containment") {
  std::mt19937_64 rng(6);
  auto r = support::ring(3);
  for (int trial = 0; trial < 300; ++trial) {
    MonomialIdeal a = random_ideal(rng, r, 3, 2), b = random_ideal(rng, r, 3, 2);
    REQUIRE(ideal_equal(a, b) == (a.contains(b) && b.contains(a)));
    MonomialIdeal c = ideal_sum(a, ideal_intersection(a, b));
    REQUIRE(ideal_equal(a, c));
  }
}
