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

#include <catch2/catch_amalgamated.hpp>

#include "spreadopt/spreadopt.hpp"
#include "support/graphs.hpp"

using namespace spreadopt;

TEST_CASE("matching cover on canonical graphs") {
  Graph p3 = testsupport::p3();
  MatchingCover mc = maximal_matching_cover(p3);
  REQUIRE(mc.matching.size() == 1);
  REQUIRE(mc.cardinality() == 2);
  REQUIRE(p3.labels_of(mc.cover) == std::vector<std::string>{"1", "2"});

  Graph c4 = testsupport::c4();
  MatchingCover mc4 = maximal_matching_cover(c4);
  REQUIRE(mc4.cardinality() == 4);  // two disjoint edges cover the cycle

  Graph s3 = testsupport::s3();
  MatchingCover ms = maximal_matching_cover(s3);
  REQUIRE(ms.cardinality() == 2);
  REQUIRE(ms.cover.contains(s3.index_of("0")));
}

TEST_CASE("matching endpoints always form a maximal matching and a cover") {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    Graph g = testsupport::random_connected_graph(
        5 + static_cast<int>(seed % 14), 150, seed);
    MatchingCover mc = maximal_matching_cover(g);
    REQUIRE(is_vertex_cover(g, mc.cover));
    REQUIRE(mc.cover.size() == mc.cardinality());
    std::vector<char> used(g.node_count(), 0);
    for (auto [i, j] : mc.matching) {
      REQUIRE(i < j);
      REQUIRE(g.has_edge(i, j));
      REQUIRE(!used[i]);
      REQUIRE(!used[j]);
      used[i] = used[j] = 1;
    }
    // Maximality: no remaining edge has both endpoints unmatched.
    for (auto [i, j] : g.edges()) REQUIRE((used[i] || used[j]));
  }
}

TEST_CASE("exact minimum cover picks the lexicographically first optimum") {
  Graph c4 = testsupport::c4();
  NodeSet best = exact_min_cover(c4);
  REQUIRE(c4.labels_of(best) == std::vector<std::string>{"1", "3"});

  Graph k2 = testsupport::k2();
  NodeSet kbest = exact_min_cover(k2);
  REQUIRE(k2.labels_of(kbest) == std::vector<std::string>{"a"});

  Graph s3 = testsupport::s3();
  REQUIRE(s3.labels_of(exact_min_cover(s3)) ==
          std::vector<std::string>{"0"});
}

TEST_CASE("matching cover is within factor two of the exact minimum") {
  for (std::uint64_t seed = 50; seed < 80; ++seed) {
    Graph g = testsupport::random_connected_graph(
        4 + static_cast<int>(seed % 9), 220, seed);
    MatchingCover mc = maximal_matching_cover(g);
    NodeSet exact = exact_min_cover(g);
    REQUIRE(is_vertex_cover(g, exact));
    REQUIRE(mc.cardinality() <= 2 * exact.size());
    REQUIRE(exact.size() <= mc.cardinality());
  }
}

TEST_CASE("the objective of a vertex cover is exactly nodes minus cover") {
  // Every node outside a cover has all neighbors inside, so its hitting
  // time is exactly 1 and the linear system is the identity; the equality
  // holds bit for bit, not merely within tolerance.
  for (std::uint64_t seed = 100; seed < 130; ++seed) {
    int n = 4 + static_cast<int>(seed % 7);
    Graph g = testsupport::random_connected_graph(n, 260, seed);
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
      NodeSet a = NodeSet::from_mask(n, mask);
      if (!is_vertex_cover(g, a)) continue;
      REQUIRE(spread_objective(g, a) ==
              static_cast<double>(n - a.size()));
    }
  }
}

TEST_CASE("non-covers sit strictly above the cover line") {
  for (std::uint64_t seed = 150; seed < 170; ++seed) {
    int n = 4 + static_cast<int>(seed % 6);
    Graph g = testsupport::random_connected_graph(n, 200, seed);
    for (std::uint64_t mask = 1; mask + 1 < (std::uint64_t{1} << n); ++mask) {
      NodeSet a = NodeSet::from_mask(n, mask);
      if (is_vertex_cover(g, a)) continue;
      // Some uncovered edge leaves a node with escape probability, pushing
      // its hitting time above 1 by at least 1/degree >= 1/(n-1).
      REQUIRE(spread_objective(g, a) >=
              n - a.size() + 1.0 / (n - 1) - 1e-9);
    }
  }
}

TEST_CASE("exact cover search is gated on size") {
  Graph g = testsupport::path_graph(31);
  REQUIRE_THROWS_AS(exact_min_cover(g), TooLargeError);
  REQUIRE_NOTHROW(exact_min_cover(testsupport::path_graph(30)));
}

TEST_CASE("cover checks validate the universe") {
  Graph g = testsupport::p3();
  REQUIRE_THROWS_AS(is_vertex_cover(g, NodeSet(4)), InvalidArgumentError);
}
