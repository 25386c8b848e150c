#include "orideal/theorems.hpp"

#include <algorithm>
#include <set>

#include "orideal/errors.hpp"
#include "orideal/serialize.hpp"

namespace orideal {

using nlohmann::json;

namespace {

std::string equality_summary(const EqualityReport& r) {
  if (auto s = r.first_inequality()) return "first inequality at s=" + std::to_string(*s);
  return "equal for all s <= " + std::to_string(r.s_max);
}

bool all_weights_at_least(std::span<const Weight> w, Weight bound) {
  return std::all_of(w.begin(), w.end(), [&](Weight x) { return x >= bound; });
}

// 1-based line vertex x_i as a monomial.
Monomial line_var(std::size_t i, Exponent e = 1) { return Monomial::variable(static_cast<VarIndex>(i - 1), e); }

// x_a * x_{a+1}^{w_{a+1}} for first <= a <= n-1 (1-based).
void append_line_edges(std::vector<Monomial>& gens, const std::vector<Weight>& w, std::size_t first) {
  for (std::size_t a = first; a + 1 <= w.size(); ++a) gens.push_back(line_var(a) * line_var(a + 1, w[a]));
}

std::string names_string(const WeightedOrientedGraph& g, const VertexSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + g.name(s[i]);
  return out + "}";
}

}  // namespace

Verdict check_source_lemma(const WeightedOrientedGraph& g, unsigned s_max) {
  Verdict v;
  v.check = "source_lemma";
  v.instance = json{{"graph", graph_to_json(g)}, {"s_max", s_max}};
  if (!all_weights_at_least(g.weights(), 2)) {
    v.notes.push_back("skipped: every weight must be >= 2");
    return v;
  }
  if (g.vertex_count() == 0 || std::any_of(g.names().begin(), g.names().end(),
                                           [&](const std::string& n) { return g.is_isolated(g.index(n)); })) {
    v.notes.push_back("skipped: the graph must be nonempty without isolated vertices");
    return v;
  }
  v.hypotheses_ok = true;

  VertexSet all(g.vertex_count());
  for (Vertex i = 0; i < all.size(); ++i) all[i] = i;
  const bool strong = is_strong_cover(g, all);
  const bool no_source = g.sources().empty();
  v.instance["v_is_strong"] = strong;
  v.prediction = no_source ? "V strong; I^(s) = I^s" : "V not strong";
  v.computed = std::string("V ") + (strong ? "strong" : "not strong");
  v.pass = strong == no_source;
  if (!v.pass) v.notes.push_back("strong-cover status of V disagrees with the absence of sources");
  if (strong) {
    EqualityReport r = compare_powers(g, s_max);
    v.computed += "; " + equality_summary(r);
    if (!r.all_equal()) {
      v.pass = false;
      v.notes.push_back("V is strong but ordinary and symbolic powers differ");
    }
  }
  return v;
}

Verdict check_cycle_corollary(std::size_t n, const std::vector<Weight>& weights, unsigned s_max) {
  Verdict v;
  v.check = "cycle_corollary";
  v.instance = json{{"n", n}, {"weights", weights}, {"s_max", s_max}};
  if (n < 3 || weights.size() != n) {
    v.notes.push_back("skipped: need n >= 3 and one weight per vertex");
    return v;
  }
  if (!all_weights_at_least(weights, 2)) {
    v.notes.push_back("skipped: every weight must be >= 2");
    return v;
  }
  v.hypotheses_ok = true;
  v.prediction = "equal for all s";
  EqualityReport r = compare_powers(oriented_cycle(n, weights), s_max);
  v.computed = equality_summary(r);
  v.pass = r.all_equal();
  return v;
}

Verdict check_forest_theorem(const WeightedOrientedGraph& tree, Weight w_y, Weight w_z, unsigned s_max) {
  Verdict v;
  v.check = "forest_theorem";
  v.instance = json{{"tree", graph_to_json(tree)}, {"w_y", w_y}, {"w_z", w_z}, {"s_max", s_max}};
  WeightedOrientedGraph g;
  Vertex z = 0;
  try {
    z = tree_root(tree) + 2;
    g = forest_broom(w_y, w_z, tree);
  } catch (const InputError& e) {
    v.notes.push_back(std::string("skipped: ") + e.what());
    return v;
  }
  v.hypotheses_ok = true;
  v.prediction = "equal for all s; I_1 = (x, z^w(z)) + I(D'); I_2 = (y^w(y), y*z^w(z)) + I(D')";
  const Vertex x = 0;
  const Vertex y = 1;
  const RingPtr& ring = g.ring();
  PowerEngine engine(g);
  v.pass = true;

  EqualityReport r = compare_powers(engine, s_max);
  v.computed = equality_summary(r);
  if (!r.all_equal()) {
    v.pass = false;
    v.notes.push_back("ordinary and symbolic powers differ");
  }

  // Every strong cover holds {x, z} without y, or y without x.
  auto has = [](const VertexSet& c, Vertex u) { return std::binary_search(c.begin(), c.end(), u); };
  MonomialIdeal i1 = MonomialIdeal::unit(ring);
  MonomialIdeal i2 = MonomialIdeal::unit(ring);
  for (const auto& c : engine.components()) {
    const VertexSet& cover = c.cover();
    if (has(cover, x) && has(cover, z) && !has(cover, y)) {
      i1 = ideal_intersection(i1, c.ideal);
    } else if (has(cover, y) && !has(cover, x)) {
      i2 = ideal_intersection(i2, c.ideal);
    } else {
      v.pass = false;
      v.notes.push_back("strong cover " + names_string(g, cover) + " is in neither class");
    }
  }

  VertexSet without_y;
  VertexSet without_x;
  for (Vertex u = 0; u < g.vertex_count(); ++u) {
    if (u != y) without_y.push_back(u);
    if (u != x) without_x.push_back(u);
  }
  std::vector<VertexSet> expected_max{without_y, without_x};
  std::sort(expected_max.begin(), expected_max.end(), cover_order_less);
  if (engine.maximal_primes() != expected_max) {
    v.pass = false;
    v.notes.push_back("maximal strong covers are not exactly {x,z}+V(D') and {y,z}+V(D')");
  }

  MonomialIdeal tree_ideal = edge_ideal(tree, ring);
  MonomialIdeal want1 = ideal_sum(MonomialIdeal(ring, {Monomial::variable(x), Monomial::variable(z, w_z)}), tree_ideal);
  MonomialIdeal want2 = ideal_sum(
      MonomialIdeal(ring, {Monomial::variable(y, w_y), Monomial::variable(y) * Monomial::variable(z, w_z)}), tree_ideal);
  if (!ideal_equal(i1, want1)) {
    v.pass = false;
    v.notes.push_back("I_1 = " + to_string(i1) + ", expected " + to_string(want1));
  }
  if (!ideal_equal(i2, want2)) {
    v.pass = false;
    v.notes.push_back("I_2 = " + to_string(i2) + ", expected " + to_string(want2));
  }
  if (v.pass) v.computed += "; I_1 and I_2 match; cover classes match";
  return v;
}

Verdict check_3rdsym_lemma(std::size_t n, const std::vector<Weight>& weights, std::size_t i) {
  Verdict v;
  v.check = "third_symbolic_power_lemma";
  v.instance = json{{"n", n}, {"weights", weights}, {"i", i}};
  if (weights.size() != n || n < 4) {
    v.notes.push_back("skipped: need n >= 4 and one weight per vertex");
    return v;
  }
  if (!(1 < i && i + 1 < n) || weights[i - 1] < 2 || weights[i] != 1) {
    v.notes.push_back("skipped: need 1 < i < n-1 with w_i >= 2 and w_{i+1} = 1");
    return v;
  }
  v.hypotheses_ok = true;
  const Monomial f = line_var(i - 1) * line_var(i, weights[i - 1]) * line_var(i + 1, 2) * line_var(i + 2, weights[i + 1]);
  PowerEngine engine(oriented_line(n, weights));
  const std::string fs = to_string(f, *engine.graph().ring());
  v.instance["witness"] = fs;
  v.prediction = fs + " in I^(3), not in I^3";

  const bool in_symbolic = engine.symbolic(3).contains(f);
  const bool in_ordinary = engine.ordinary(3).contains(f);
  EqualityReport r = compare_powers(engine, 3);
  v.computed = fs + (in_symbolic ? " in" : " not in") + " I^(3), " + (in_ordinary ? "in" : "not in") + " I^3; " +
               equality_summary(r);
  v.pass = in_symbolic && !in_ordinary && !r.per_s[2].equal;
  return v;
}

bool line_condition(const std::vector<Weight>& w) {
  const std::size_t n = w.size();
  for (std::size_t j = 2; j < n; ++j) {
    if (w[j - 1] < 2) continue;
    for (std::size_t i = j; i <= n - 1; ++i)
      if (w[i - 1] < 2) return false;
  }
  return true;
}

std::optional<std::size_t> line_break_index(const std::vector<Weight>& w) {
  for (std::size_t j = 2; j < w.size(); ++j)
    if (w[j - 1] >= 2) return j;
  return std::nullopt;
}

Verdict check_line_theorem(const std::vector<Weight>& weights, unsigned s_max) {
  if (s_max < 3) throw InputError("the line theorem check needs s_max >= 3");
  Verdict v;
  v.check = "line_theorem";
  v.instance = json{{"weights", weights}, {"s_max", s_max}};
  if (weights.size() < 2) {
    v.notes.push_back("skipped: need at least two vertices");
    return v;
  }
  v.hypotheses_ok = true;
  const bool condition = line_condition(weights);
  v.instance["condition"] = condition;
  v.prediction = condition ? "equal for all s" : "I^(3) != I^3";
  EqualityReport r = compare_powers(oriented_line(weights.size(), weights), s_max);
  v.computed = equality_summary(r);
  v.pass = condition ? r.all_equal() : !r.per_s[2].equal;
  return v;
}

Verdict check_jideal_structure(const std::vector<Weight>& w) {
  Verdict v;
  v.check = "line_jideal_structure";
  v.instance = json{{"weights", w}};
  const std::size_t n = w.size();
  auto k_opt = line_break_index(w);
  if (!k_opt) {
    v.notes.push_back("skipped: no interior weight >= 2");
    return v;
  }
  const std::size_t k = *k_opt;
  v.instance["k"] = k;
  bool shape = k > 4 && k < n;
  for (std::size_t i = 1; i < k && shape; ++i) shape = w[i - 1] == 1;
  for (std::size_t i = k; i <= n - 1 && shape; ++i) shape = w[i - 1] >= 2;
  if (!shape) {
    v.notes.push_back("skipped: need w_i = 1 for i < k and w_i >= 2 for k <= i <= n-1, with 4 < k < n");
    return v;
  }
  v.hypotheses_ok = true;
  v.prediction = "maximal strong covers split into alpha/beta/gamma families; Q_{<=C} = (C') + J_i";

  // 0-based index of x_i.
  auto vx = [](std::size_t i) { return static_cast<Vertex>(i - 1); };
  WeightedOrientedGraph g = oriented_line(n, w);
  const RingPtr& ring = g.ring();
  PowerEngine engine(g);

  struct Family {
    std::string name;
    std::size_t prefix;  // C' covers D(x_1..x_prefix)
    VertexSet tail;
    WeightedOrientedGraph prefix_graph;
    std::vector<Monomial> j_gens;
    std::set<VertexSet> predicted;
    std::set<VertexSet> found;
  };
  std::vector<Family> families(3);

  families[0].name = "alpha";
  families[0].prefix = k - 2;
  families[0].tail = {vx(k - 1)};
  for (std::size_t i = k + 1; i <= n; ++i) families[0].tail.push_back(vx(i));
  families[0].j_gens = {line_var(k - 1), line_var(k + 1, w[k])};
  append_line_edges(families[0].j_gens, w, k + 1);

  families[1].name = "beta";
  families[1].prefix = k - 3;
  families[1].tail = {vx(k - 2)};
  for (std::size_t i = k; i <= n; ++i) families[1].tail.push_back(vx(i));
  families[1].j_gens = {line_var(k - 2), line_var(k, w[k - 1])};
  append_line_edges(families[1].j_gens, w, k);

  families[2].name = "gamma";
  families[2].prefix = k - 4;
  families[2].tail = {vx(k - 3), vx(k - 1), vx(k)};
  for (std::size_t i = k + 2; i <= n; ++i) families[2].tail.push_back(vx(i));
  families[2].j_gens = {line_var(k - 3), line_var(k - 1), line_var(k)};
  if (k + 2 <= n) families[2].j_gens.push_back(line_var(k + 2, w[k + 1]));
  append_line_edges(families[2].j_gens, w, k + 2);

  v.pass = true;
  for (Family& fam : families) {
    VertexSet prefix_vertices;
    for (std::size_t i = 1; i <= fam.prefix; ++i) prefix_vertices.push_back(vx(i));
    fam.prefix_graph = induced_subgraph(g, prefix_vertices);
    for (VertexSet c : minimal_vertex_covers(fam.prefix_graph)) {
      // Prefix vertices keep their indices: they are the first ones of g.
      c.insert(c.end(), fam.tail.begin(), fam.tail.end());
      std::sort(c.begin(), c.end());
      fam.predicted.insert(c);
    }
  }

  auto has = [](const VertexSet& c, Vertex u) { return std::binary_search(c.begin(), c.end(), u); };
  for (const VertexSet& c : engine.maximal_primes()) {
    const bool a = has(c, vx(k - 1));
    const bool b = has(c, vx(k));
    const bool d = has(c, vx(k + 1));
    Family* fam = nullptr;
    if (!b)
      fam = &families[0];
    else if (d && !a)
      fam = &families[1];
    else if (a && !d)
      fam = &families[2];
    if (fam == nullptr) {
      v.pass = false;
      v.notes.push_back("maximal strong cover " + names_string(g, c) + " fits no family");
      continue;
    }
    fam->found.insert(c);

    VertexSet prime_part;
    for (Vertex u : c)
      if (u < fam->prefix) prime_part.push_back(u);
    std::vector<Monomial> gens = fam->j_gens;
    for (Vertex u : prime_part) gens.push_back(Monomial::variable(u));
    MonomialIdeal predicted(ring, std::move(gens));
    const MonomialIdeal& computed = engine.q_sub_p(c);
    if (!ideal_equal(predicted, computed)) {
      v.pass = false;
      v.notes.push_back(fam->name + " cover " + names_string(g, c) + ": Q = " + to_string(computed) +
                        ", expected (C') + J = " + to_string(predicted));
    }

    // (C') is also the component of C' in the prefix line: its weights are all 1.
    if (is_strong_cover(fam->prefix_graph, prime_part)) {
      MonomialIdeal component = embed(irreducible_ideal(fam->prefix_graph, prime_part).ideal, ring);
      std::vector<Monomial> vars;
      for (Vertex u : prime_part) vars.push_back(Monomial::variable(u));
      if (!ideal_equal(component, MonomialIdeal(ring, std::move(vars)))) {
        v.pass = false;
        v.notes.push_back(fam->name + " cover " + names_string(g, c) + ": I_{C'} is not generated by C'");
      }
    } else {
      v.pass = false;
      v.notes.push_back(fam->name + " cover " + names_string(g, c) + ": C' is not a strong cover of the prefix");
    }
  }

  std::string counts;
  for (const Family& fam : families) {
    if (fam.found != fam.predicted) {
      v.pass = false;
      v.notes.push_back(fam.name + " family: found " + std::to_string(fam.found.size()) + " covers, predicted " +
                        std::to_string(fam.predicted.size()) + " (sets differ)");
    }
    counts += (counts.empty() ? "" : ", ") + fam.name + "=" + std::to_string(fam.found.size());
  }
  v.computed = "families " + counts + (v.pass ? "; all Q_{<=C} match (C') + J_i" : "; mismatches in notes");
  return v;
}

WeightedOrientedGraph random_graph(std::mt19937_64& rng, std::size_t max_vertices, Weight max_weight) {
  if (max_vertices < 2) throw InputError("random graphs need max_vertices >= 2");
  if (max_weight < 1) throw InputError("random graphs need max_weight >= 1");
  std::uniform_int_distribution<std::size_t> size_dist(2, max_vertices);
  std::uniform_int_distribution<Weight> weight_dist(1, max_weight);
  std::bernoulli_distribution coin(0.5);
  const std::size_t n = size_dist(rng);
  std::vector<std::string> names;
  std::vector<Weight> weights;
  for (std::size_t i = 1; i <= n; ++i) {
    names.push_back("x" + std::to_string(i));
    weights.push_back(weight_dist(rng));
  }
  std::vector<Edge> edges;
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b)
      if (coin(rng)) edges.push_back(coin(rng) ? Edge{a, b} : Edge{b, a});
  return WeightedOrientedGraph(std::move(names), std::move(edges), std::move(weights));
}

std::vector<std::string> invariant_violations(const WeightedOrientedGraph& g, unsigned s_max) {
  std::vector<std::string> out;
  Decomposition d = irreducible_decomposition(g);
  if (!d.intersection_equals_edge_ideal)
    out.push_back("intersection of strong-cover components " + to_string(d.intersection) + " != edge ideal");
  for (const auto& c : d.redundant) out.push_back("redundant component for cover " + names_string(g, c));
  for (const auto& c : d.components)
    if (!c.ideal.contains(edge_ideal(g))) out.push_back("edge ideal not inside component " + names_string(g, c.cover()));

  PowerEngine engine(g);
  if (!ideal_equal(engine.symbolic(1), engine.edge_ideal())) out.push_back("I^(1) != I");
  for (unsigned s = 1; s <= s_max; ++s) {
    const MonomialIdeal symbolic = engine.symbolic(s);
    if (!ideal_equal(symbolic, engine.oracle(s)))
      out.push_back("s=" + std::to_string(s) + ": component route and localisation oracle disagree");
    if (!symbolic.contains(engine.ordinary(s))) out.push_back("s=" + std::to_string(s) + ": I^s not inside I^(s)");
    if (s > 1 && !engine.symbolic(s - 1).contains(symbolic))
      out.push_back("s=" + std::to_string(s) + ": I^(s) not inside I^(s-1)");
  }
  return out;
}

RegressionSummary random_regression(std::uint64_t seed, std::size_t trials, const RegressionOptions& options) {
  RegressionSummary summary{seed, trials, 0, {}};
  std::mt19937_64 rng(seed);
  for (std::size_t t = 0; t < trials; ++t) {
    WeightedOrientedGraph g = random_graph(rng, options.max_vertices, options.max_weight);
    std::vector<std::string> problems = invariant_violations(g, options.s_max);
    if (problems.empty()) {
      ++summary.passed;
      continue;
    }
    std::string reason;
    for (const auto& p : problems) reason += (reason.empty() ? "" : "; ") + p;
    summary.failures.push_back({t, graph_to_json(g), reason});
  }
  return summary;
}

}  // namespace orideal
