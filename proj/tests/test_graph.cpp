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

TEST_CASE("edge-list parsing accepts comments, blanks, and weights") {
  Graph g = Graph::parse(
      "# header comment\n"
      "\n"
      "1 2   # trailing comment\n"
      "2 3 2.5\n"
      "\t\n");
  REQUIRE(g.node_count() == 3);
  REQUIRE(g.edge_count() == 2);
  REQUIRE(g.weighted());
  REQUIRE(g.label(0) == "1");
  REQUIRE(g.label(1) == "2");
  REQUIRE(g.label(2) == "3");
  REQUIRE(g.edge_weight(1, 2) == 2.5);
  REQUIRE(g.edge_weight(0, 1) == 1.0);
}

TEST_CASE("unit weights leave the graph unweighted") {
  Graph g = testsupport::p3();
  REQUIRE_FALSE(g.weighted());
  Graph h = Graph::parse("1 2 1.0\n2 3\n");
  REQUIRE_FALSE(h.weighted());
}

TEST_CASE("parse errors carry line numbers") {
  REQUIRE_THROWS_AS(Graph::parse(""), ParseError);
  REQUIRE_THROWS_AS(Graph::parse("# only comments\n"), ParseError);
  REQUIRE_THROWS_WITH(Graph::parse("1 2\noops\n"),
                      Catch::Matchers::ContainsSubstring("line 2"));
  REQUIRE_THROWS_WITH(Graph::parse("1 2\n3 4 x\n"),
                      Catch::Matchers::ContainsSubstring("line 2"));
  REQUIRE_THROWS_AS(Graph::parse("1 2 0.0\n"), ParseError);
  REQUIRE_THROWS_AS(Graph::parse("1 2 -1\n"), ParseError);
  REQUIRE_THROWS_AS(Graph::parse("1 2 inf\n"), ParseError);
  REQUIRE_THROWS_AS(Graph::parse("1 2 3 4\n"), ParseError);
}

TEST_CASE("structural input errors are typed") {
  REQUIRE_THROWS_AS(Graph::parse("1 1\n"), SelfLoopError);
  REQUIRE_THROWS_AS(Graph::parse("1 2\n2 1\n"), ParseError);  // duplicate
  REQUIRE_THROWS_AS(Graph::parse("1 2\n1 2 3.0\n"), ParseError);
  REQUIRE_THROWS_AS(Graph::parse("1 2\n3 4\n"), DisconnectedError);
}

TEST_CASE("labels are indexed in sorted order") {
  Graph g = Graph::parse("10 9\n9 2\n");
  // Lexicographic label order: "10" < "2" < "9".
  REQUIRE(g.label(0) == "10");
  REQUIRE(g.label(1) == "2");
  REQUIRE(g.label(2) == "9");
  REQUIRE(g.index_of("9") == 2);
  REQUIRE(g.has_node("10"));
  REQUIRE_FALSE(g.has_node("3"));
  REQUIRE_THROWS_AS(g.index_of("3"), UnknownNodeError);
}

TEST_CASE("adjacency accessors are sorted and consistent") {
  Graph g = testsupport::c4();
  REQUIRE(g.node_count() == 4);
  REQUIRE(g.degree(0) == 2);
  std::vector<int> nbrs = g.neighbors(0);
  REQUIRE(std::is_sorted(nbrs.begin(), nbrs.end()));
  REQUIRE(nbrs == std::vector<int>{1, 3});
  REQUIRE(g.has_edge(0, 1));
  REQUIRE_FALSE(g.has_edge(0, 2));
  REQUIRE(g.strength(0) == 2.0);

  // Edge list is (i < j) pairs in lexicographic order.
  auto edges = g.edges();
  REQUIRE(edges.size() == 4);
  REQUIRE(std::is_sorted(edges.begin(), edges.end()));
}

TEST_CASE("weighted strength sums incident weights") {
  Graph g = testsupport::weighted_p3();
  REQUIRE(g.weighted());
  REQUIRE(g.strength(0) == 2.0);
  REQUIRE(g.strength(1) == 3.0);
  REQUIRE(g.strength(2) == 1.0);
}

TEST_CASE("transition matrix rows are stochastic") {
  for (const Graph& g : {testsupport::p3(), testsupport::weighted_p3(),
                         testsupport::petersen()}) {
    TransitionMatrix p = transition_matrix(g);
    REQUIRE(p.rows == g.node_count());
    for (int i = 0; i < p.rows; ++i) {
      double sum = 0.0;
      for (const auto& [j, pij] : p.row[i]) {
        REQUIRE(pij > 0.0);
        REQUIRE(g.has_edge(i, j));
        sum += pij;
      }
      REQUIRE_THAT(sum, Catch::Matchers::WithinAbs(1.0, 1e-12));
    }
  }
  TransitionMatrix p = transition_matrix(testsupport::weighted_p3());
  REQUIRE_THAT(p.prob(1, 0), Catch::Matchers::WithinAbs(2.0 / 3.0, 1e-15));
  REQUIRE_THAT(p.prob(1, 2), Catch::Matchers::WithinAbs(1.0 / 3.0, 1e-15));
}

TEST_CASE("set_of and labels_of round-trip") {
  Graph g = testsupport::p4();
  NodeSet a = g.set_of({"2", "4"});
  REQUIRE(a.size() == 2);
  REQUIRE(a.contains(1));
  REQUIRE(a.contains(3));
  REQUIRE(g.labels_of(a) == std::vector<std::string>{"2", "4"});
  REQUIRE_THROWS_AS(g.set_of({"5"}), UnknownNodeError);
  REQUIRE_THROWS_AS(g.labels_of(NodeSet(7)), InvalidArgumentError);
}

TEST_CASE("bipartite detection") {
  REQUIRE(is_bipartite(testsupport::p3()));
  REQUIRE(is_bipartite(testsupport::c4()));
  REQUIRE(is_bipartite(testsupport::c6()));
  REQUIRE(is_bipartite(testsupport::s3()));
  REQUIRE_FALSE(is_bipartite(Graph::parse("1 2\n2 3\n3 1\n")));
  REQUIRE_FALSE(is_bipartite(testsupport::petersen()));
}
