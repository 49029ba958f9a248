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

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "spreadopt/cover.hpp"
#include "spreadopt/errors.hpp"
#include "spreadopt/graph.hpp"
#include "spreadopt/hitting.hpp"
#include "spreadopt/node_set.hpp"

namespace spreadopt {

/// Normalization frame for set quality. f_min comes from the reference
/// vertex cover (the best value the cover cardinality guarantees), f_max
/// from the worst singleton, which is the worst value of any nonempty set.
struct RankContext {
  NodeSet cover;
  int cardinality = 0;  // size of the reference cover
  double f_min = 0.0;
  double f_max = 0.0;
};

inline RankContext rank_context(const Objective& obj) {
  const Graph& g = obj.graph();
  RankContext ctx;
  MatchingCover mc = maximal_matching_cover(g);
  ctx.cover = mc.cover;
  ctx.cardinality = mc.cardinality();
  ctx.f_min = obj.F(ctx.cover);
  ctx.f_max = 0.0;
  int n = g.node_count();
  for (int v = 0; v < n; ++v)
    ctx.f_max = std::max(ctx.f_max, obj.F(NodeSet(n, {v})));
  if (std::fabs(ctx.f_max - ctx.f_min) <=
      1e-12 * std::max(1.0, std::fabs(ctx.f_max)))
    throw DegenerateRankError("rank normalization is degenerate: best and "
                              "worst reference values coincide");
  return ctx;
}

inline RankContext rank_context(const Graph& g) {
  Objective obj(g);
  return rank_context(obj);
}

/// Normalized quality of a set: 0 at the worst singleton, 1 at the reference
/// cover. The empty set ranks 0 by convention. Sets larger than the cover
/// are still ranked by the same formula and may score above 1.
inline double rank(const RankContext& ctx, const Objective& obj,
                   const NodeSet& a) {
  if (a.empty()) return 0.0;
  return (ctx.f_max - obj.F(a)) / (ctx.f_max - ctx.f_min);
}

inline double rank(const RankContext& ctx, const Graph& g, const NodeSet& a) {
  Objective obj(g);
  return rank(ctx, obj, a);
}

/// Rank gain from adding node j to a; never negative (up to rounding).
inline double marginal_gain(const RankContext& ctx, const Objective& obj,
                            const NodeSet& a, int j) {
  if (a.contains(j))
    throw InvalidArgumentError("node is already in the set");
  return rank(ctx, obj, a.with(j)) - rank(ctx, obj, a);
}

constexpr std::uint64_t kDefaultEnumerationBudget = 10000000;

/// All sets of cardinality <= cap whose rank clears the threshold nu.
/// Closed upward within the cardinality cap: padding a member never hurts.
struct NearOptimalClass {
  double nu = 0.0;
  int cap = 0;  // cardinality cap
  RankContext ctx;
  std::vector<NodeSet> members;  // sorted by (cardinality, lex)
  int min_cardinality = 0;       // 0 when the class is empty

  bool contains(const NodeSet& a) const {
    auto it =
        std::lower_bound(members.begin(), members.end(), a, size_lex_less);
    return it != members.end() && *it == a;
  }
};

/// Enumerates the class by exhausting all subsets of cardinality <= cap.
/// The subset count is checked against `budget` before any evaluation.
inline NearOptimalClass enumerate_class(
    const Objective& obj, double nu, int cap,
    std::uint64_t budget = kDefaultEnumerationBudget) {
  const Graph& g = obj.graph();
  int n = g.node_count();
  if (!(nu > 0.0) || nu > 1.0)
    throw InvalidArgumentError("threshold nu must lie in (0, 1]");
  if (cap < 1 || cap > n)
    throw InvalidArgumentError("cardinality cap must lie in [1, N]");
  std::uint64_t required = detail::subset_count_capped(n, cap);
  if (required > budget)
    throw BudgetExceededError(required, budget,
                              "class enumeration needs " +
                                  std::to_string(required) +
                                  " subsets, budget is " +
                                  std::to_string(budget));

  NearOptimalClass cls;
  cls.nu = nu;
  cls.cap = cap;
  cls.ctx = rank_context(obj);
  cls.min_cardinality = 0;
  for (int k = 1; k <= cap; ++k) {
    std::vector<int> combo(k);
    for (int i = 0; i < k; ++i) combo[i] = i;
    do {
      NodeSet a = NodeSet::from_indices(n, combo);
      if (rank(cls.ctx, obj, a) >= nu) {
        cls.members.push_back(a);
        if (cls.min_cardinality == 0) cls.min_cardinality = k;
      }
    } while (detail::next_combination(combo, n));
  }
  return cls;
}

inline NearOptimalClass enumerate_class(
    const Graph& g, double nu, int cap,
    std::uint64_t budget = kDefaultEnumerationBudget) {
  Objective obj(g);
  return enumerate_class(obj, nu, cap, budget);
}

}  // namespace spreadopt
