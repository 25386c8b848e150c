#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <json.hpp>

#include "orideal/symbolic.hpp"

namespace orideal {

/// Outcome of one mechanical check. When the instance does not meet the
/// result's hypotheses the check is skipped: hypotheses_ok is false, pass is
/// false, and notes says why.
struct Verdict {
  std::string check;
  nlohmann::json instance;
  bool hypotheses_ok = false;
  std::string prediction;
  std::string computed;
  bool pass = false;
  std::vector<std::string> notes;

  bool skipped() const { return !hypotheses_ok; }
  bool failed() const { return hypotheses_ok && !pass; }
};

inline constexpr unsigned kDefaultSMax = 3;

/// All weights >= 2, no isolated vertices: V is a strong cover iff there is
/// no source, and then I^(s) = I^s for s <= s_max.
Verdict check_source_lemma(const WeightedOrientedGraph& g, unsigned s_max = kDefaultSMax);

/// Naturally oriented cycle with all weights >= 2 has I^(s) = I^s.
Verdict check_cycle_corollary(std::size_t n, const std::vector<Weight>& weights, unsigned s_max = kDefaultSMax);

/// Broom x -> y -> z + tree rooted at z. Checks equality of powers, the two
/// cover classes (x and z without y; y without x) with their maximal
/// members, and the intersections
///   I_1 = (x, z^w(z)) + I(tree),   I_2 = (y^w(y), y z^w(z)) + I(tree).
Verdict check_forest_theorem(const WeightedOrientedGraph& tree, Weight w_y, Weight w_z,
                             unsigned s_max = kDefaultSMax);

/// Line with w_i >= 2 and w_{i+1} = 1 for some 1 < i < n-1 (1-based):
/// f = x_{i-1} x_i^{w_i} x_{i+1}^2 x_{i+2}^{w_{i+2}} lies in I^(3) but not I^3.
Verdict check_3rdsym_lemma(std::size_t n, const std::vector<Weight>& weights, std::size_t i);

/// True iff: whenever w_j >= 2 for some 1 < j < n, then w_i >= 2 for every
/// j <= i <= n-1 (1-based).
bool line_condition(const std::vector<Weight>& weights);

/// Compares line_condition with computed equality for s <= s_max (s_max >= 3;
/// a violated condition must show I^(3) != I^3).
Verdict check_line_theorem(const std::vector<Weight>& weights, unsigned s_max = kDefaultSMax);

/// Smallest 1 < k < n (1-based) with w_k >= 2, if any.
std::optional<std::size_t> line_break_index(const std::vector<Weight>& weights);

/// For a line with w_i = 1 (i < k) and w_i >= 2 (k <= i <= n-1), 4 < k < n:
/// the maximal strong covers split into the families avoiding x_k, avoiding
/// x_{k-1}, and avoiding x_{k+1}, each a minimal cover of an initial
/// segment plus a fixed tail, and each Q_{⊆C} equals (C') + J_i.
Verdict check_jideal_structure(const std::vector<Weight>& weights);

struct RegressionOptions {
  std::size_t max_vertices = 7;
  Weight max_weight = 3;
  unsigned s_max = kDefaultSMax;
};

struct RegressionFailure {
  std::size_t trial;
  nlohmann::json graph;
  std::string reason;
};

struct RegressionSummary {
  std::uint64_t seed;
  std::size_t trials = 0;
  std::size_t passed = 0;
  std::vector<RegressionFailure> failures;
};

/// Random graph on 2..max_vertices vertices: each pair is an edge with
/// probability 1/2, oriented uniformly, weights uniform in 1..max_weight.
WeightedOrientedGraph random_graph(std::mt19937_64& rng, std::size_t max_vertices, Weight max_weight);

/// Reasons a graph breaks the module invariants (decomposition identity,
/// irredundancy, oracle equivalence, I^s ⊆ I^(s)); empty when it passes.
std::vector<std::string> invariant_violations(const WeightedOrientedGraph& g, unsigned s_max);

RegressionSummary random_regression(std::uint64_t seed, std::size_t trials, const RegressionOptions& options = {});

}  // namespace orideal
