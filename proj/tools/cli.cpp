#include "cli.hpp"

#include <algorithm>
#include <iomanip>
#include <map>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "orideal/errors.hpp"
#include "orideal/serialize.hpp"
#include "orideal/theorems.hpp"

namespace orideal::cli {

namespace {

using nlohmann::json;

std::string set_string(const WeightedOrientedGraph& g, const VertexSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? ", " : "") + g.name(s[i]);
  return out + "}";
}

WeightedOrientedGraph read_graph(const std::string& path, std::ostream& err) {
  std::vector<std::string> warnings;
  WeightedOrientedGraph g = load_graph(path, &warnings);
  for (const auto& w : warnings) err << "warning: " << w << '\n';
  return g;
}

// ---- covers ---------------------------------------------------------------

struct CoversArgs {
  std::string graph;
  bool strong = false;
  bool maximal = false;
  bool minimal = false;
  bool partition = false;
  bool json = false;
};

int cmd_covers(const CoversArgs& a, std::ostream& out, std::ostream& err) {
  WeightedOrientedGraph g = read_graph(a.graph, err);
  bool strong = a.strong || (!a.maximal && !a.minimal);
  std::vector<std::pair<std::string, std::vector<VertexSet>>> lists;
  if (strong) lists.emplace_back("strong", enumerate_strong_covers(g));
  if (a.maximal) lists.emplace_back("maximal", maximal_strong_covers(g));
  if (a.minimal) lists.emplace_back("minimal", minimal_vertex_covers(g));

  if (a.json) {
    json report = json::object();
    for (const auto& [name, covers] : lists) {
      json arr = json::array();
      for (const auto& c : covers) arr.push_back(a.partition ? partition_to_json(g, cover_partition(g, c))
                                                             : vertex_set_to_json(g, c));
      report[name] = std::move(arr);
    }
    out << report.dump(2) << '\n';
    return kExitOk;
  }
  for (const auto& [name, covers] : lists) {
    out << name << " covers (" << covers.size() << "):\n";
    for (const auto& c : covers) {
      out << "  " << set_string(g, c);
      if (a.partition) {
        CoverPartition p = cover_partition(g, c);
        out << "  L1=" << set_string(g, p.l1) << " L2=" << set_string(g, p.l2) << " L3=" << set_string(g, p.l3);
      }
      out << '\n';
    }
  }
  return kExitOk;
}

// ---- decompose ------------------------------------------------------------

struct DecomposeArgs {
  std::string graph;
  bool literal = false;
  bool json = false;
};

int cmd_decompose(const DecomposeArgs& a, std::ostream& out, std::ostream& err) {
  WeightedOrientedGraph g = read_graph(a.graph, err);
  DecompositionOptions opts;
  opts.reading = a.literal ? ComponentReading::literal : ComponentReading::adopted;
  Decomposition d = irreducible_decomposition(g, opts);
  if (a.json) {
    out << decomposition_to_json(g, d).dump(2) << '\n';
  } else {
    out << "edge ideal: " << to_string(edge_ideal(g)) << '\n';
    out << "components (" << d.components.size() << "):\n";
    for (const auto& c : d.components) {
      const auto& p = c.partition;
      out << "  cover " << set_string(g, p.cover) << "  L1=" << set_string(g, p.l1) << " L2=" << set_string(g, p.l2)
          << " L3=" << set_string(g, p.l3) << "  I_C = " << to_string(c.ideal) << '\n';
    }
    out << "intersection = edge ideal: " << (d.intersection_equals_edge_ideal ? "true" : "false") << '\n';
    for (const auto& c : d.redundant) out << "finding: component of " << set_string(g, c) << " is redundant\n";
  }
  return d.intersection_equals_edge_ideal ? kExitOk : kExitVerificationFailed;
}

// ---- power ----------------------------------------------------------------

struct PowerArgs {
  std::string graph;
  unsigned s = 1;
  bool symbolic = false;
  bool ordinary = false;
  bool compare = false;
  bool oracle = false;
  bool json = false;
};

void print_table(const EqualityReport& r, std::ostream& out) {
  out << std::left << std::setw(4) << "s" << "| " << std::setw(11) << "#gens(I^s)" << "| " << std::setw(13)
      << "#gens(I^(s))" << "| " << std::setw(6) << "equal" << "| witness\n";
  for (const auto& row : r.per_s) {
    out << std::left << std::setw(4) << row.s << "| " << std::setw(11) << row.ordinary_generators << "| "
        << std::setw(13) << row.symbolic_generators << "| " << std::setw(6) << (row.equal ? "yes" : "no") << "| "
        << (row.witness ? to_string(*row.witness, *r.ring) : "-") << '\n';
  }
}

int cmd_power(const PowerArgs& a, std::ostream& out, std::ostream& err) {
  WeightedOrientedGraph g = read_graph(a.graph, err);
  PowerEngine engine(g);
  const bool compare = a.compare || (!a.symbolic && !a.ordinary);
  json report = json::object();

  if (a.oracle) {
    for (unsigned s = compare ? 1 : a.s; s <= a.s; ++s) {
      MonomialIdeal via_components = engine.symbolic(s);
      MonomialIdeal via_oracle = engine.oracle(s);
      if (!ideal_equal(via_components, via_oracle)) {
        err << "oracle disagreement at s=" << s << "\n  components: " << to_string(via_components)
            << "\n  oracle:     " << to_string(via_oracle) << '\n';
        return kExitVerificationFailed;
      }
    }
    report["oracle_agrees"] = true;
  }
  if (a.ordinary) report["ordinary"] = ideal_to_json(engine.ordinary(a.s));
  if (a.symbolic) report["symbolic"] = ideal_to_json(engine.symbolic(a.s));
  if (compare) report["comparison"] = report_to_json(compare_powers(engine, a.s));

  if (a.json) {
    report["s"] = a.s;
    out << report.dump(2) << '\n';
    return kExitOk;
  }
  if (a.ordinary) out << "I^" << a.s << " = " << to_string(engine.ordinary(a.s)) << '\n';
  if (a.symbolic) out << "I^(" << a.s << ") = " << to_string(engine.symbolic(a.s)) << '\n';
  if (a.oracle) out << "oracle agrees with the component formula\n";
  if (compare) print_table(compare_powers(engine, a.s), out);
  return kExitOk;
}

// ---- verify ---------------------------------------------------------------

struct VerifyArgs {
  std::string family = "all";
  std::vector<Weight> weights;
  std::size_t n = 0;
  std::string tree;
  std::string graph;
  Weight w_y = 2;
  Weight w_z = 2;
  unsigned s_max = kDefaultSMax;
  bool random = false;
  std::uint64_t seed = 42;
  std::size_t trials = 50;
  bool json = false;
};

std::vector<Verdict> line_family(const std::vector<Weight>& w, unsigned s_max) {
  std::vector<Verdict> out{check_line_theorem(w, s_max)};
  const std::size_t n = w.size();
  for (std::size_t i = 2; i + 1 < n; ++i) {
    if (w[i - 1] >= 2 && w[i] == 1) {
      out.push_back(check_3rdsym_lemma(n, w, i));
      break;
    }
  }
  Verdict structure = check_jideal_structure(w);
  if (structure.hypotheses_ok) out.push_back(std::move(structure));
  return out;
}

std::vector<Verdict> default_forest_family(unsigned s_max) {
  std::vector<Verdict> out;
  out.push_back(check_forest_theorem(rooted_tree({}, "z", {{"z", 2}}), 2, 2, s_max));
  out.push_back(
      check_forest_theorem(rooted_tree({{"a", "z"}, {"b", "z"}}, "z", {{"z", 2}, {"a", 1}, {"b", 1}}), 2, 2, s_max));
  out.push_back(check_forest_theorem(rooted_tree({{"t1", "z"}, {"t2", "t1"}}, "z", {{"z", 2}, {"t1", 2}, {"t2", 2}}),
                                     2, 2, s_max));
  return out;
}

std::vector<Verdict> default_cycle_family(unsigned s_max) {
  std::vector<Verdict> out;
  for (std::size_t n : {3, 4, 5}) out.push_back(check_cycle_corollary(n, std::vector<Weight>(n, 2), s_max));
  return out;
}

int cmd_verify(const VerifyArgs& a, std::ostream& out, std::ostream& err) {
  if (a.random) {
    RegressionOptions opts;
    opts.s_max = a.s_max;
    RegressionSummary summary = random_regression(a.seed, a.trials, opts);
    if (a.json) {
      out << regression_to_json(summary).dump(2) << '\n';
    } else {
      out << "random regression seed=" << summary.seed << ": " << summary.passed << "/" << summary.trials
          << " graphs pass\n";
      for (const auto& f : summary.failures)
        out << "  FAIL trial " << f.trial << ": " << f.reason << "\n    graph: " << f.graph.dump() << '\n';
    }
    return summary.failures.empty() ? kExitOk : kExitVerificationFailed;
  }

  std::vector<Verdict> verdicts;
  auto append = [&](std::vector<Verdict> more) {
    for (auto& v : more) verdicts.push_back(std::move(v));
  };
  const std::string& f = a.family;
  if (f == "line") {
    if (a.weights.empty()) throw InputError("--family line needs --weights");
    append(line_family(a.weights, a.s_max));
  } else if (f == "cycle") {
    if (a.weights.empty()) {
      append(default_cycle_family(a.s_max));
    } else {
      verdicts.push_back(check_cycle_corollary(a.n ? a.n : a.weights.size(), a.weights, a.s_max));
    }
  } else if (f == "forest") {
    if (a.tree.empty())
      append(default_forest_family(a.s_max));
    else
      verdicts.push_back(check_forest_theorem(read_graph(a.tree, err), a.w_y, a.w_z, a.s_max));
  } else if (f == "source") {
    if (a.graph.empty()) throw InputError("--family source needs --graph");
    verdicts.push_back(check_source_lemma(read_graph(a.graph, err), a.s_max));
  } else if (f == "all") {
    for (unsigned mask = 0; mask < 32; ++mask) {
      std::vector<Weight> w;
      for (unsigned b = 0; b < 5; ++b) w.push_back(1 + ((mask >> b) & 1));
      append(line_family(w, a.s_max));
    }
    verdicts.push_back(check_jideal_structure({1, 1, 1, 1, 2, 2, 1}));
    append(default_cycle_family(a.s_max));
    append(default_forest_family(a.s_max));
  } else {
    throw InputError("unknown family '" + f + "' (expected line, cycle, forest, source or all)");
  }

  std::size_t failed = 0;
  std::size_t skipped = 0;
  for (const auto& v : verdicts) {
    failed += v.failed();
    skipped += v.skipped();
  }
  if (a.json) {
    json arr = json::array();
    for (const auto& v : verdicts) arr.push_back(verdict_to_json(v));
    out << json{{"verdicts", std::move(arr)}, {"failed", failed}, {"skipped", skipped}}.dump(2) << '\n';
  } else {
    for (const auto& v : verdicts) {
      out << (v.skipped() ? "SKIP" : v.pass ? "PASS" : "FAIL") << ' ' << v.check << ' ' << v.instance.dump();
      if (!v.skipped()) out << "\n     predicted: " << v.prediction << "\n     computed:  " << v.computed;
      out << '\n';
      for (const auto& note : v.notes) out << "     note: " << note << '\n';
    }
    out << verdicts.size() << " checks, " << failed << " failed, " << skipped << " skipped\n";
  }
  return failed == 0 ? kExitOk : kExitVerificationFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Edge ideals of weighted oriented graphs: covers, decompositions, symbolic powers"};
  app.name("orideal");
  app.require_subcommand(1);

  CoversArgs covers;
  auto* c = app.add_subcommand("covers", "List strong, maximal strong, or minimal vertex covers");
  c->add_option("graph", covers.graph, "Graph JSON file")->required();
  c->add_flag("--strong", covers.strong, "Strong vertex covers (default)");
  c->add_flag("--maximal", covers.maximal, "Inclusion-maximal strong covers");
  c->add_flag("--minimal", covers.minimal, "Minimal vertex covers");
  c->add_flag("--partition", covers.partition, "Show the L1/L2/L3 split of each cover");
  c->add_flag("--json", covers.json, "Emit JSON");

  DecomposeArgs decompose;
  auto* d = app.add_subcommand("decompose", "Irreducible decomposition of the edge ideal");
  d->add_option("graph", decompose.graph, "Graph JSON file")->required();
  d->add_flag("--literal", decompose.literal, "Pure powers over L1 and L2 instead of L2 and L3");
  d->add_flag("--json", decompose.json, "Emit JSON");

  PowerArgs power;
  auto* p = app.add_subcommand("power", "Ordinary and symbolic powers");
  p->add_option("graph", power.graph, "Graph JSON file")->required();
  p->add_option("--s", power.s, "Exponent (compare runs 1..s)")->check(CLI::PositiveNumber);
  auto* sym = p->add_flag("--symbolic", power.symbolic, "Print I^(s)");
  auto* ord = p->add_flag("--ordinary", power.ordinary, "Print I^s");
  auto* cmp = p->add_flag("--compare", power.compare, "Compare I^t and I^(t) for t <= s (default)");
  sym->excludes(ord)->excludes(cmp);
  ord->excludes(cmp);
  p->add_flag("--oracle", power.oracle, "Also compute I^(s) by localisation and require agreement");
  p->add_flag("--json", power.json, "Emit JSON");

  VerifyArgs verify;
  auto* v = app.add_subcommand("verify", "Check the theorems on concrete or random instances");
  v->add_option("--family", verify.family, "line, cycle, forest, source or all")
      ->check(CLI::IsMember({"line", "cycle", "forest", "source", "all"}));
  v->add_option("--weights", verify.weights, "Comma-separated vertex weights")->delimiter(',');
  v->add_option("--n", verify.n, "Cycle length");
  v->add_option("--tree", verify.tree, "Rooted tree JSON for the forest family");
  v->add_option("--graph", verify.graph, "Graph JSON for the source family");
  v->add_option("--wy", verify.w_y, "Weight of y in the broom")->check(CLI::PositiveNumber);
  v->add_option("--wz", verify.w_z, "Weight of z in the broom")->check(CLI::PositiveNumber);
  v->add_option("--s-max", verify.s_max, "Largest power tested")->check(CLI::Range(1u, 6u));
  v->add_flag("--random", verify.random, "Random regression instead of a family");
  v->add_option("--seed", verify.seed, "Random seed");
  v->add_option("--trials", verify.trials, "Number of random graphs");
  v->add_flag("--json", verify.json, "Emit JSON");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    // Also covers --help, which exits with code 0.
    return app.exit(e, out, err) == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (c->parsed()) return cmd_covers(covers, out, err);
    if (d->parsed()) return cmd_decompose(decompose, out, err);
    if (p->parsed()) return cmd_power(power, out, err);
    if (v->parsed()) return cmd_verify(verify, out, err);
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kExitCapExceeded;
  } catch (const VerificationFailure& e) {
    err << "verification failure: " << e.what() << '\n';
    return kExitVerificationFailed;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }
  return kExitInputError;
}

}  // namespace orideal::cli
