#include <doctest.h>

#include <cstdlib>
#include <random>
#include <set>

#include "oracles.hpp"
#include "orideal/covers.hpp"
#include "orideal/errors.hpp"

using namespace orideal;

namespace {

using Names = std::vector<std::string>;
using NameSets = std::vector<Names>;

NameSets named(const WeightedOrientedGraph& g, const std::vector<VertexSet>& sets) {
  NameSets out;
  for (const auto& s : sets) out.push_back(g.names_of(s));
  return out;
}

VertexSet all_vertices(const WeightedOrientedGraph& g) {
  VertexSet v(g.vertex_count());
  for (Vertex i = 0; i < v.size(); ++i) v[i] = i;
  return v;
}

WeightedOrientedGraph edgeless(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
  return WeightedOrientedGraph(names, {}, std::vector<Weight>(n, 1));
}

}  // namespace

TEST_CASE("is_vertex_cover") {
  WeightedOrientedGraph line = oriented_line(3, {1, 1, 1});
  CHECK(is_vertex_cover(line, {1}));
  CHECK_FALSE(is_vertex_cover(line, {0}));
  CHECK(is_vertex_cover(line, {0, 1, 2}));
  CHECK_THROWS_AS(is_vertex_cover(line, {5}), InputError);
}

TEST_CASE("cover_partition") {
  WeightedOrientedGraph line = oriented_line(3, {1, 1, 1});
  CHECK(cover_partition(line, {1}) == CoverPartition{{1}, {1}, {}, {}});
  CHECK(cover_partition(line, {0, 1, 2}) == CoverPartition{{0, 1, 2}, {}, {}, {0, 1, 2}});
  CHECK(cover_partition(line, {0, 2}) == CoverPartition{{0, 2}, {0}, {2}, {}});
  CHECK_THROWS_AS(cover_partition(line, {0}), InputError);
}

TEST_CASE("is_strong_cover") {
  WeightedOrientedGraph line = oriented_line(5, {1, 2, 1, 1, 1});
  for (const auto& c : minimal_vertex_covers(line)) CHECK(is_strong_cover(line, c));
  for (std::size_t n = 2; n <= 5; ++n) {
    WeightedOrientedGraph heavy = oriented_line(n, std::vector<Weight>(n, 3));
    CHECK_FALSE(is_strong_cover(heavy, all_vertices(heavy)));
  }
  WeightedOrientedGraph cycle = oriented_cycle(4, {2, 3, 2, 2});
  CHECK(is_strong_cover(cycle, all_vertices(cycle)));
  CHECK_FALSE(is_strong_cover(line, {0}));
}

TEST_CASE("enumerate_strong_covers") {
  WeightedOrientedGraph line2 = oriented_line(2, {1, 1});
  CHECK(named(line2, enumerate_strong_covers(line2)) == NameSets{{"x1"}, {"x2"}});
  WeightedOrientedGraph edge = WeightedOrientedGraph::from_names({"x", "y"}, {{"x", "y"}}, {{"y", 3}});
  CHECK(named(edge, enumerate_strong_covers(edge)) == NameSets{{"x"}, {"y"}});
  WeightedOrientedGraph cycle = oriented_cycle(3, {2, 2, 2});
  auto covers = enumerate_strong_covers(cycle);
  CHECK(covers.back() == all_vertices(cycle));
  CHECK(named(cycle, covers) == NameSets{{"x1", "x2"}, {"x1", "x3"}, {"x2", "x3"}, {"x1", "x2", "x3"}});
}

TEST_CASE("maximal_strong_covers") {
  WeightedOrientedGraph line2 = oriented_line(2, {1, 1});
  CHECK(named(line2, maximal_strong_covers(line2)) == NameSets{{"x1"}, {"x2"}});
  WeightedOrientedGraph cycle = oriented_cycle(5, {2, 2, 2, 2, 2});
  CHECK(maximal_strong_covers(cycle) == std::vector<VertexSet>{all_vertices(cycle)});
  // Brute force by hand from the definitions: x2 in L2 has weight 2, so
  // {x2,x3,x4} and {x2,x3,x5} keep x3 in L3 legally.
  WeightedOrientedGraph line = oriented_line(5, {1, 2, 1, 1, 1});
  CHECK(named(line, maximal_strong_covers(line)) ==
        NameSets{{"x1", "x3", "x4"}, {"x1", "x3", "x5"}, {"x2", "x3", "x4"}, {"x2", "x3", "x5"}});
  CHECK(named(line, enumerate_strong_covers(line)) == NameSets{{"x2", "x4"},
                                                                {"x1", "x3", "x4"},
                                                                {"x1", "x3", "x5"},
                                                                {"x2", "x3", "x4"},
                                                                {"x2", "x3", "x5"}});
}

TEST_CASE("minimal_vertex_covers") {
  WeightedOrientedGraph line3 = oriented_line(3, {1, 1, 1});
  CHECK(named(line3, minimal_vertex_covers(line3)) == NameSets{{"x2"}, {"x1", "x3"}});
  WeightedOrientedGraph empty = edgeless(3);
  CHECK(minimal_vertex_covers(empty) == std::vector<VertexSet>{{}});
  WeightedOrientedGraph line4 = oriented_line(4, {1, 1, 1, 1});
  CHECK(named(line4, minimal_vertex_covers(line4)) == NameSets{{"x1", "x3"}, {"x2", "x3"}, {"x2", "x4"}});
}

TEST_CASE("enumeration cap") {
  WeightedOrientedGraph big = edgeless(21);
  CHECK_THROWS_AS(enumerate_strong_covers(big), CapExceeded);
  CHECK(enumerate_strong_covers(big, 21).size() == 1);
  CHECK_THROWS_AS(minimal_vertex_covers(edgeless(6), 5), CapExceeded);
  CHECK_THROWS_AS(minimal_vertex_covers(edgeless(63), 63), CapExceeded);

  ::setenv("ORIENTED_IDEAL_CAP", "4", 1);
  CHECK(enumeration_cap() == 4);
  CHECK_THROWS_AS(maximal_strong_covers(edgeless(5)), CapExceeded);
  ::setenv("ORIENTED_IDEAL_CAP", "lots", 1);
  CHECK_THROWS_AS(enumeration_cap(), InputError);
  ::unsetenv("ORIENTED_IDEAL_CAP");
  CHECK(enumeration_cap() == kDefaultEnumerationCap);
}

TEST_CASE("property: minimal covers are strong") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 150; ++trial) {
    WeightedOrientedGraph g = oracle::random_graph(rng, 7, 3);
    for (const auto& c : minimal_vertex_covers(g)) REQUIRE(is_strong_cover(g, c));
  }
}

TEST_CASE("property: with all weights >= 2, V is strong iff there is no source") {
  std::mt19937_64 rng(22);
  int strong = 0;
  for (int trial = 0; trial < 200; ++trial) {
    WeightedOrientedGraph base = oracle::random_graph(rng, 7, 3);
    std::vector<Weight> w(base.weights().begin(), base.weights().end());
    for (auto& x : w) x = std::max<Weight>(x, 2);
    std::vector<Edge> edges(base.edges().begin(), base.edges().end());
    WeightedOrientedGraph g(base.names(), edges, w);
    // Isolated vertices would land in L3 with no in-neighbour.
    bool isolated = false;
    for (Vertex v = 0; v < g.vertex_count(); ++v) isolated |= g.is_isolated(v);
    if (isolated) continue;
    bool v_strong = is_strong_cover(g, all_vertices(g));
    strong += v_strong;
    REQUIRE(v_strong == g.sources().empty());
  }
  CHECK(strong > 0);
}

TEST_CASE("property: partition is exhaustive and disjoint") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 100; ++trial) {
    WeightedOrientedGraph g = oracle::random_graph(rng, 7, 3);
    oracle::Graph pg = oracle::plain(g);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << g.vertex_count()); ++mask) {
      VertexSet c = oracle::to_set(mask, g.vertex_count());
      oracle::Partition expect;
      bool cover = oracle::partition(pg, mask, expect);
      REQUIRE(is_vertex_cover(g, c) == cover);
      if (!cover) continue;
      CoverPartition p = cover_partition(g, c);
      std::set<Vertex> seen;
      for (const auto* part : {&p.l1, &p.l2, &p.l3})
        for (Vertex v : *part) REQUIRE(seen.insert(v).second);
      REQUIRE(VertexSet(seen.begin(), seen.end()) == c);
      for (Vertex v : p.l1) REQUIRE(expect.l1[v]);
      for (Vertex v : p.l2) REQUIRE(expect.l2[v]);
      for (Vertex v : p.l3) REQUIRE(expect.l3[v]);
    }
  }
}

TEST_CASE("property: enumeration matches the full subset scan for n <= 6") {
  std::mt19937_64 rng(24);
  for (int trial = 0; trial < 150; ++trial) {
    WeightedOrientedGraph g = oracle::random_graph(rng, 6, 3);
    auto listed = enumerate_strong_covers(g);
    for (const auto& c : listed) REQUIRE(is_strong_cover(g, c));
    std::set<VertexSet> got(listed.begin(), listed.end());
    REQUIRE(got.size() == listed.size());
    REQUIRE(got == oracle::strong_covers(oracle::plain(g)));
    for (std::size_t i = 1; i < listed.size(); ++i) REQUIRE(cover_order_less(listed[i - 1], listed[i]));

    std::set<VertexSet> maximal;
    for (auto m : oracle::maximal_masks(oracle::strong_cover_masks(oracle::plain(g))))
      maximal.insert(oracle::to_set(m, g.vertex_count()));
    auto max_listed = maximal_strong_covers(g);
    REQUIRE(std::set<VertexSet>(max_listed.begin(), max_listed.end()) == maximal);
  }
}
