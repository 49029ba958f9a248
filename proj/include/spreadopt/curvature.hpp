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

#include <bit>
#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "spreadopt/errors.hpp"
#include "spreadopt/graph.hpp"
#include "spreadopt/hitting.hpp"
#include "spreadopt/node_set.hpp"
#include "spreadopt/ranking.hpp"

namespace spreadopt {

/// Domain over which the elemental curvature maximum runs. The membership
/// reading is the default; the all-subsets reading is kept behind this flag
/// and gated by the enumeration budget.
enum class KappaDomain {
  kClassMembers,
  kAllSubsets,
};

struct CurvatureOptions {
  KappaDomain domain = KappaDomain::kClassMembers;
  std::uint64_t budget = kDefaultEnumerationBudget;  // all-subsets gate
};

struct CurvatureReport {
  double kappa = 0.0;
  std::optional<double> gamma;  // set by gamma_max_marginal / curvature_report
  std::string domain_note;
  long long samples = 0;        // ratios evaluated
  long long skipped = 0;        // zero-denominator pairs excluded
  // True when evaluating the maximizing ratio touched a set larger than the
  // class cardinality cap, where the rank extension convention applies.
  bool max_used_extension = false;
};

/// Elemental curvature of the rank function:
///   kappa = max over S, i != j with i, j outside S of the ratio
///           [rank(S+{i,j}) - rank(S+{j})] / [rank(S+{i}) - rank(S)].
/// Pairs whose denominator is at most 1e-12 are skipped and counted.
/// The rank function is submodular wherever the objective is supermodular,
/// so on real inputs kappa stays at or below 1; values near 1 signal flat
/// marginals rather than an error.
inline CurvatureReport elemental_curvature(const Objective& obj,
                                           const NearOptimalClass& cls,
                                           const CurvatureOptions& options = {}) {
  const int n = obj.graph().node_count();
  CurvatureReport rep;
  bool have_max = false;
  NodeSet arg_union;  // S + {i, j} at the current maximum

  auto consider = [&](const NodeSet& s) {
    double rank_s = rank(cls.ctx, obj, s);
    for (int i = 0; i < n; ++i) {
      if (s.contains(i)) continue;
      double denom = rank(cls.ctx, obj, s.with(i)) - rank_s;
      if (denom <= 1e-12) {
        // One skip per (S, i, j) pair so the audit count matches the
        // number of excluded ratios.
        rep.skipped += (n - s.size() - 1);
        continue;
      }
      for (int j = 0; j < n; ++j) {
        if (j == i || s.contains(j)) continue;
        NodeSet sj = s.with(j);
        double numer = rank(cls.ctx, obj, sj.with(i)) - rank(cls.ctx, obj, sj);
        double ratio = numer / denom;
        ++rep.samples;
        if (!have_max || ratio > rep.kappa) {
          rep.kappa = ratio;
          arg_union = sj.with(i);
          have_max = true;
        }
      }
    }
  };

  if (options.domain == KappaDomain::kClassMembers) {
    rep.domain_note =
        "maximum over nonempty near-optimal class members; zero-denominator "
        "pairs skipped; rank extension applies beyond the cardinality cap";
    for (const NodeSet& s : cls.members) consider(s);
  } else {
    std::uint64_t required = detail::subset_count_capped(n, n);
    if (required > options.budget)
      throw BudgetExceededError(
          required, options.budget,
          "all-subsets curvature needs " + std::to_string(required) +
              " subsets, budget is " + std::to_string(options.budget));
    rep.domain_note =
        "maximum over all nonempty vertex subsets; zero-denominator pairs "
        "skipped; rank extension applies beyond the cardinality cap";
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask)
      consider(NodeSet::from_mask(n, mask));
  }

  if (rep.samples == 0)
    throw NoValidPairsError(
        "every curvature ratio had a zero denominator or no qualifying "
        "(set, i, j) triple exists");
  rep.max_used_extension = have_max && arg_union.size() > cls.cap;
  return rep;
}

inline CurvatureReport elemental_curvature(const Graph& g,
                                           const NearOptimalClass& cls,
                                           const CurvatureOptions& options = {}) {
  Objective obj(g);
  return elemental_curvature(obj, cls, options);
}

/// Largest single-element rank gain over nonempty proper subsets of a
/// rank-one reference set T:
///   gamma = max over S subset of T with |S| >= min_size, j in T\S of
///           rank(S+{j}) - rank(S).
/// Dominates the per-ordering marginals of any insertion order of T\S.
inline double gamma_max_marginal(const Objective& obj, const RankContext& ctx,
                                 const NodeSet& t, int min_size = 1) {
  if (min_size < 1)
    throw InvalidArgumentError("minimum subset size must be at least 1");
  if (std::fabs(rank(ctx, obj, t) - 1.0) > 1e-9)
    throw RankNotOneError("reference set does not have rank 1");
  std::vector<int> elems = t.elements();
  int tn = static_cast<int>(elems.size());
  std::uint64_t required = detail::subset_count_capped(tn, tn);
  if (required > kDefaultEnumerationBudget)
    throw BudgetExceededError(required, kDefaultEnumerationBudget,
                              "reference set has " + std::to_string(required) +
                                  " subsets, budget is " +
                                  std::to_string(kDefaultEnumerationBudget));
  bool found = false;
  double gamma = 0.0;
  int universe = t.universe();
  for (std::uint64_t mask = 1; mask + 1 < (std::uint64_t{1} << tn); ++mask) {
    if (static_cast<int>(std::popcount(mask)) < min_size) continue;
    NodeSet s(universe);
    for (int b = 0; b < tn; ++b)
      if (mask & (std::uint64_t{1} << b)) s.add(elems[b]);
    double rank_s = rank(ctx, obj, s);
    for (int b = 0; b < tn; ++b) {
      if (mask & (std::uint64_t{1} << b)) continue;
      double gain = rank(ctx, obj, s.with(elems[b])) - rank_s;
      if (!found || gain > gamma) {
        gamma = gain;
        found = true;
      }
    }
  }
  if (!found)
    throw NoValidPairsError(
        "reference set has no nonempty proper subset of the requested size");
  return gamma;
}

inline double gamma_max_marginal(const Graph& g, const NodeSet& t,
                                 int min_size = 1) {
  Objective obj(g);
  return gamma_max_marginal(obj, rank_context(obj), t, min_size);
}

/// Complete report: kappa over the selected domain plus gamma over the
/// rank-one cover carried by the class's rank context.
inline CurvatureReport curvature_report(const Objective& obj,
                                        const NearOptimalClass& cls,
                                        const CurvatureOptions& options = {}) {
  CurvatureReport rep = elemental_curvature(obj, cls, options);
  rep.gamma = gamma_max_marginal(obj, cls.ctx, cls.ctx.cover, 1);
  return rep;
}

/// Guaranteed rank after removing r elements one at a time from a rank-one
/// set: 1 - gamma * sum_{t=1..r} kappa^(t-1). The geometric partial sum
/// uses the closed form away from kappa = 1 and the r-term value at the
/// removable singularity.
inline double rank_lower_bound(double gamma, double kappa, int r) {
  if (gamma < 0.0 || kappa < 0.0 || r < 0)
    throw InvalidArgumentError("bound arguments must be nonnegative");
  double sum = std::fabs(kappa - 1.0) <= 1e-12
                   ? static_cast<double>(r)
                   : (1.0 - std::pow(kappa, r)) / (1.0 - kappa);
  return 1.0 - gamma * sum;
}

/// Quality/effort trade-off at quality target nu: r_of_nu is the largest
/// number of removals whose guaranteed rank stays at or above nu, and
/// m_of_nu = cap - r_of_nu is the seed cardinality that must be retained.
struct TradeoffResult {
  double gamma = 0.0;
  double kappa = 0.0;
  int cap = 0;
  int r_of_nu = 0;
  int m_of_nu = 0;
  double bound_value(int r) const { return rank_lower_bound(gamma, kappa, r); }
};

inline TradeoffResult tradeoff(double gamma, double kappa, int cap, double nu) {
  if (!(nu > 0.0) || nu > 1.0)
    throw InvalidArgumentError("quality target must lie in (0, 1]");
  if (cap < 0) throw InvalidArgumentError("cardinality cap must be nonnegative");
  TradeoffResult res;
  res.gamma = gamma;
  res.kappa = kappa;
  res.cap = cap;
  // The bound is non-increasing in r, so the first violation ends the scan.
  int r = 0;
  while (r < cap && rank_lower_bound(gamma, kappa, r + 1) >= nu - 1e-12) ++r;
  res.r_of_nu = r;
  res.m_of_nu = cap - r;
  return res;
}

}  // namespace spreadopt
