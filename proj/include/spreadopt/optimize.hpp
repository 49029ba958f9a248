// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "spreadopt/errors.hpp"
#include "spreadopt/graph.hpp"
#include "spreadopt/hitting.hpp"
#include "spreadopt/node_set.hpp"
#include "spreadopt/ranking.hpp"

namespace spreadopt {

struct ExtensionStep {
  int node;        // node added at this step
  double f_after;  // objective value after the addition
};

/// Record of one greedy extension from a seed to the budget cardinality.
struct ExtensionTrace {
  NodeSet seed;
  std::vector<ExtensionStep> steps;
  NodeSet final_set;
  double final_f = 0.0;
  double final_rank = 0.0;
};

struct BruteForceResult {
  NodeSet best;
  double f = 0.0;
};

struct SearchOptions {
  bool certify = true;  // confirm against brute force when the gate permits
  std::uint64_t brute_budget = 10000000;
};

struct SearchResult {
  NodeSet best;
  double best_f = 0.0;
  double best_rank = 0.0;
  std::vector<ExtensionTrace> traces;  // one per seed, in seed order
  bool certificate_attempted = false;
  bool certified = false;   // brute force confirmed best_f is optimal
  double optimum_f = 0.0;   // only meaningful when certificate_attempted
};

/// Exact minimizer of the objective over nonempty sets of cardinality <= k.
/// Adding a node always strictly lowers the objective, so only sets of
/// cardinality exactly k need scoring. Ties go to the lexicographically
/// smallest set. Gated by C(N, k) <= budget.
inline BruteForceResult brute_force_optimum(
    const Objective& obj, int k, std::uint64_t budget = 10000000) {
  int n = obj.graph().node_count();
  if (k < 1 || k > n)
    throw InvalidArgumentError("cardinality budget must lie in [1, N]");
  std::uint64_t required = detail::binomial_capped(n, k);
  if (required > budget)
    throw BudgetExceededError(required, budget,
                              "brute force needs " + std::to_string(required) +
                                  " subsets, budget is " +
                                  std::to_string(budget));
  BruteForceResult best;
  std::vector<int> combo(k);
  for (int i = 0; i < k; ++i) combo[i] = i;
  bool first = true;
  do {
    NodeSet a = NodeSet::from_indices(n, combo);
    double f = obj.F(a);
    // Combinations arrive in lexicographic order, so keeping the incumbent
    // on ties realizes the lexicographic tie-break.
    if (first || f < best.f - detail::value_tie_eps(best.f)) {
      best.best = a;
      best.f = f;
      first = false;
    }
  } while (detail::next_combination(combo, n));
  return best;
}

inline BruteForceResult brute_force_optimum(const Graph& g, int k,
                                            std::uint64_t budget = 10000000) {
  Objective obj(g);
  return brute_force_optimum(obj, k, budget);
}

/// Greedily grows `seed` to cardinality k, at each step adding the node
/// whose addition yields the lowest objective value; value ties resolve to
/// the smallest label. Zero steps when the seed already has cardinality k.
inline ExtensionTrace greedy_extend(const Objective& obj,
                                    const RankContext& ctx,
                                    const NodeSet& seed, int k) {
  const Graph& g = obj.graph();
  int n = g.node_count();
  if (seed.universe() != n)
    throw InvalidArgumentError("seed universe does not match graph");
  if (k < 1 || k < seed.size() || k > n)
    throw InvalidArgumentError(
        "budget must lie between max(1, seed cardinality) and N");
  ExtensionTrace tr;
  tr.seed = seed;
  NodeSet cur = seed;
  while (cur.size() < k) {
    int best_node = -1;
    double best_f = 0.0;
    for (int v = 0; v < n; ++v) {
      if (cur.contains(v)) continue;
      double f = obj.F(cur.with(v));
      if (best_node < 0 || f < best_f - detail::value_tie_eps(best_f)) {
        best_node = v;
        best_f = f;
      }
    }
    cur.add(best_node);
    tr.steps.push_back({best_node, best_f});
  }
  tr.final_set = cur;
  tr.final_f = obj.F(cur);
  tr.final_rank = rank(ctx, obj, cur);
  return tr;
}

inline ExtensionTrace greedy_extend(const Graph& g, const NodeSet& seed,
                                    int k) {
  Objective obj(g);
  return greedy_extend(obj, rank_context(obj), seed, k);
}

/// Plain greedy from the empty set.
inline ExtensionTrace greedy(const Objective& obj, const RankContext& ctx,
                             int k) {
  if (k < 1) throw InvalidArgumentError("budget must be at least 1");
  return greedy_extend(obj, ctx, NodeSet(obj.graph().node_count()), k);
}

inline ExtensionTrace greedy(const Graph& g, int k) {
  Objective obj(g);
  return greedy(obj, rank_context(obj), k);
}

/// Extends every seed to cardinality k and offers the best final set.
/// All seeds must share one cardinality m <= k. When seeds come from a
/// near-optimal class and k stays within the class cardinality cap, every
/// final set stays in the class, because extension never lowers rank.
/// When C(N, k) fits the brute-force budget the result is checked against
/// the exact optimum and `certified` reports whether it matched.
inline SearchResult seeded_search(const Objective& obj, const RankContext& ctx,
                                  const std::vector<NodeSet>& seeds, int k,
                                  const SearchOptions& options = {}) {
  if (seeds.empty())
    throw EmptySeedFamilyError("seeded search received no seeds");
  int m = seeds.front().size();
  for (const NodeSet& s : seeds)
    if (s.size() != m)
      throw InvalidArgumentError("seeds must share one cardinality");
  if (m > k)
    throw InvalidArgumentError("seed cardinality exceeds the budget");

  SearchResult res;
  res.traces.reserve(seeds.size());
  bool first = true;
  for (const NodeSet& s : seeds) {
    ExtensionTrace tr = greedy_extend(obj, ctx, s, k);
    double f = tr.final_f;
    bool better = first || f < res.best_f - detail::value_tie_eps(res.best_f);
    bool tied = !first && !better &&
                std::fabs(f - res.best_f) <= detail::value_tie_eps(res.best_f);
    if (better || (tied && lex_less(tr.final_set, res.best))) {
      res.best = tr.final_set;
      res.best_f = f;
      res.best_rank = tr.final_rank;
      first = false;
    }
    res.traces.push_back(std::move(tr));
  }

  if (options.certify &&
      detail::binomial_capped(obj.graph().node_count(), k) <=
          options.brute_budget) {
    BruteForceResult exact = brute_force_optimum(obj, k, options.brute_budget);
    res.certificate_attempted = true;
    res.optimum_f = exact.f;
    res.certified =
        std::fabs(res.best_f - exact.f) <= detail::value_tie_eps(exact.f);
  }
  return res;
}

inline SearchResult seeded_search(const Graph& g,
                                  const std::vector<NodeSet>& seeds, int k,
                                  const SearchOptions& options = {}) {
  Objective obj(g);
  return seeded_search(obj, rank_context(obj), seeds, k, options);
}

}  // namespace spreadopt
