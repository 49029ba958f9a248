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

#include <cstdint>
#include <utility>
#include <vector>

#include "spreadopt/errors.hpp"
#include "spreadopt/graph.hpp"
#include "spreadopt/node_set.hpp"

namespace spreadopt {

/// A maximal matching together with the vertex cover formed by its
/// endpoints. The cover size is at most twice the minimum vertex cover, and
/// every node outside the cover has all of its neighbors inside, so the
/// spread objective of the cover is exactly N - |cover|.
struct MatchingCover {
  std::vector<std::pair<int, int>> matching;  // (i, j) with i < j
  NodeSet cover;

  int cardinality() const { return static_cast<int>(matching.size()) * 2; }
};

/// Greedy maximal matching over edges in lexicographic order; deterministic.
inline MatchingCover maximal_matching_cover(const Graph& g) {
  int n = g.node_count();
  MatchingCover mc;
  mc.cover = NodeSet(n);
  std::vector<char> used(n, 0);
  for (const auto& [i, j] : g.edges()) {
    if (used[i] || used[j]) continue;
    used[i] = used[j] = 1;
    mc.matching.emplace_back(i, j);
    mc.cover.add(i);
    mc.cover.add(j);
  }
  return mc;
}

inline bool is_vertex_cover(const Graph& g, const NodeSet& a) {
  if (a.universe() != g.node_count())
    throw InvalidArgumentError("node set universe does not match graph");
  for (const auto& [i, j] : g.edges())
    if (!a.contains(i) && !a.contains(j)) return false;
  return true;
}

namespace detail {

constexpr int kExactCoverLimit = 30;

/// True when the edges not yet covered by `removed` admit a cover of at most
/// `budget` nodes, all with index >= lo.
inline bool coverable(const Graph& g, std::uint64_t removed, int lo,
                      int budget) {
  int pick_u = -1, pick_v = -1;
  for (const auto& [u, v] : g.edges()) {
    if ((removed >> u & 1) || (removed >> v & 1)) continue;
    pick_u = u;
    pick_v = v;
    break;
  }
  if (pick_u < 0) return true;  // everything covered
  if (budget <= 0) return false;
  if (pick_u >= lo &&
      coverable(g, removed | (1ull << pick_u), lo, budget - 1))
    return true;
  if (pick_v >= lo &&
      coverable(g, removed | (1ull << pick_v), lo, budget - 1))
    return true;
  return false;
}

}  // namespace detail

/// Minimum vertex cover by branch and bound; among minimum covers returns
/// the one with the lexicographically smallest label sequence. Gated at
/// 30 nodes.
inline NodeSet exact_min_cover(const Graph& g) {
  int n = g.node_count();
  if (n > detail::kExactCoverLimit)
    throw TooLargeError("exact cover search is limited to " +
                        std::to_string(detail::kExactCoverLimit) + " nodes");
  int k = 0;
  while (!detail::coverable(g, 0, 0, k)) ++k;

  NodeSet chosen(n);
  std::uint64_t removed = 0;
  int budget = k;
  for (int v = 0; v < n && budget > 0; ++v) {
    if (detail::coverable(g, removed | (1ull << v), v + 1, budget - 1)) {
      chosen.add(v);
      removed |= 1ull << v;
      --budget;
    }
  }
  if (!is_vertex_cover(g, chosen))
    throw InternalError("exact cover extraction failed");
  return chosen;
}

}  // namespace spreadopt
