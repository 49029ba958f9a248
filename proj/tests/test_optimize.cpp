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
using Catch::Matchers::WithinAbs;

TEST_CASE("brute force finds exact optima with lexicographic tie-break") {
  Graph p3 = testsupport::p3();
  BruteForceResult r1 = brute_force_optimum(p3, 1);
  REQUIRE(p3.labels_of(r1.best) == std::vector<std::string>{"2"});
  REQUIRE(r1.f == 2.0);
  BruteForceResult r2 = brute_force_optimum(p3, 2);
  REQUIRE(p3.labels_of(r2.best) == std::vector<std::string>{"1", "2"});
  REQUIRE(r2.f == 1.0);

  Graph s3 = testsupport::s3();
  REQUIRE(s3.labels_of(brute_force_optimum(s3, 1).best) ==
          std::vector<std::string>{"0"});
  REQUIRE(s3.labels_of(brute_force_optimum(s3, 2).best) ==
          std::vector<std::string>{"0", "1"});

  Graph c6 = testsupport::c6();
  BruteForceResult c2 = brute_force_optimum(c6, 2);
  REQUIRE(c6.labels_of(c2.best) == std::vector<std::string>{"1", "4"});
  REQUIRE_THAT(c2.f, WithinAbs(8.0, 1e-9));
  BruteForceResult c3 = brute_force_optimum(c6, 3);
  REQUIRE(c6.labels_of(c3.best) == std::vector<std::string>{"1", "3", "5"});
  REQUIRE(c3.f == 3.0);  // alternating triple covers the cycle
}

TEST_CASE("brute force validates cardinality and budget") {
  Graph g = testsupport::p3();
  REQUIRE_THROWS_AS(brute_force_optimum(g, 0), InvalidArgumentError);
  REQUIRE_THROWS_AS(brute_force_optimum(g, 4), InvalidArgumentError);

  Graph big = testsupport::random_connected_graph(40, 50, 1);
  REQUIRE_THROWS_AS(brute_force_optimum(big, 8), BudgetExceededError);
  REQUIRE_NOTHROW(brute_force_optimum(big, 1));
}

TEST_CASE("greedy recording and tie behavior") {
  Graph s3 = testsupport::s3();
  ExtensionTrace tr = greedy(s3, 2);
  REQUIRE(tr.seed.empty());
  REQUIRE(tr.steps.size() == 2);
  REQUIRE(tr.steps[0].node == s3.index_of("0"));
  REQUIRE(tr.steps[0].f_after == 3.0);
  REQUIRE(tr.steps[1].node == s3.index_of("1"));  // value tie, lowest label
  REQUIRE(tr.steps[1].f_after == 2.0);
  REQUIRE(s3.labels_of(tr.final_set) == std::vector<std::string>{"0", "1"});
  REQUIRE(tr.final_f == 2.0);
  REQUIRE(tr.final_rank == 1.0);
}

TEST_CASE("greedy can tie the optimum value on a different set") {
  Graph g = testsupport::p4();
  ExtensionTrace tr = greedy(g, 2);
  REQUIRE(g.labels_of(tr.final_set) == std::vector<std::string>{"2", "3"});
  REQUIRE(tr.final_f == 2.0);
  BruteForceResult exact = brute_force_optimum(g, 2);
  REQUIRE(g.labels_of(exact.best) == std::vector<std::string>{"1", "3"});
  REQUIRE(exact.f == tr.final_f);  // same value, different argmin
}

TEST_CASE("greedy extension validates its inputs") {
  Graph g = testsupport::p4();
  Objective obj(g);
  RankContext ctx = rank_context(obj);
  NodeSet pair = g.set_of({"1", "3"});
  REQUIRE_THROWS_AS(greedy_extend(obj, ctx, pair, 1), InvalidArgumentError);
  REQUIRE_THROWS_AS(greedy_extend(obj, ctx, pair, 5), InvalidArgumentError);
  REQUIRE_THROWS_AS(greedy_extend(obj, ctx, NodeSet(3), 2),
                    InvalidArgumentError);
  REQUIRE_THROWS_AS(greedy(obj, ctx, 0), InvalidArgumentError);
  // Seed already at the budget: zero steps, values still reported.
  ExtensionTrace tr = greedy_extend(obj, ctx, pair, 2);
  REQUIRE(tr.steps.empty());
  REQUIRE(tr.final_set == pair);
  REQUIRE(tr.final_f == 2.0);
}

TEST_CASE("extension steps record the running objective") {
  Graph g = testsupport::c6();
  Objective obj(g);
  RankContext ctx = rank_context(obj);
  ExtensionTrace tr = greedy_extend(obj, ctx, g.set_of({"1"}), 4);
  REQUIRE(tr.steps.size() == 3);
  NodeSet cur = tr.seed;
  for (const ExtensionStep& st : tr.steps) {
    cur = cur.with(st.node);
    REQUIRE(st.f_after == obj.F(cur));
  }
  REQUIRE(cur == tr.final_set);
  REQUIRE(tr.final_f == obj.F(cur));
}

TEST_CASE("seeded search certifies small instances") {
  Graph g = testsupport::p3();
  Objective obj(g);
  RankContext ctx = rank_context(obj);
  SearchResult res = seeded_search(obj, ctx, {g.set_of({"2"})}, 2);
  REQUIRE(g.labels_of(res.best) == std::vector<std::string>{"1", "2"});
  REQUIRE(res.best_f == 1.0);
  REQUIRE(res.best_rank == 1.0);
  REQUIRE(res.traces.size() == 1);
  REQUIRE(res.certificate_attempted);
  REQUIRE(res.certified);
  REQUIRE(res.optimum_f == 1.0);
}

TEST_CASE("seeded search breaks final-value ties lexicographically") {
  Graph g = testsupport::p4();
  Objective obj(g);
  RankContext ctx = rank_context(obj);
  // Three equal-value seeds at the budget cardinality: no extension steps,
  // the reported winner is the lexicographically smallest set.
  std::vector<NodeSet> seeds = {g.set_of({"2", "4"}), g.set_of({"2", "3"}),
                                g.set_of({"1", "3"})};
  SearchResult res = seeded_search(obj, ctx, seeds, 2);
  REQUIRE(g.labels_of(res.best) == std::vector<std::string>{"1", "3"});
  REQUIRE(res.best_f == 2.0);
  REQUIRE(res.traces.size() == 3);
  for (const ExtensionTrace& tr : res.traces) REQUIRE(tr.steps.empty());
  REQUIRE(res.certified);
}

TEST_CASE("extending class seeds preserves class membership") {
  Graph g = testsupport::p4();
  Objective obj(g);
  NearOptimalClass cls = enumerate_class(obj, 0.9, 4);
  std::vector<NodeSet> seeds;
  for (const NodeSet& m : cls.members)
    if (m.size() == cls.min_cardinality) seeds.push_back(m);
  REQUIRE(seeds.size() == 3);
  for (int k = cls.min_cardinality; k <= cls.cap; ++k) {
    SearchResult res = seeded_search(obj, cls.ctx, seeds, k);
    for (const ExtensionTrace& tr : res.traces) {
      REQUIRE(cls.contains(tr.final_set));
      REQUIRE(tr.final_rank >= cls.nu - 1e-9);
    }
    REQUIRE(res.best_rank >= cls.nu - 1e-9);
  }
}

TEST_CASE("seeded search validates the seed family") {
  Graph g = testsupport::p4();
  Objective obj(g);
  RankContext ctx = rank_context(obj);
  REQUIRE_THROWS_AS(seeded_search(obj, ctx, {}, 2), EmptySeedFamilyError);
  REQUIRE_THROWS_AS(
      seeded_search(obj, ctx, {g.set_of({"2"}), g.set_of({"1", "3"})}, 2),
      InvalidArgumentError);
  REQUIRE_THROWS_AS(seeded_search(obj, ctx, {g.set_of({"1", "3"})}, 1),
                    InvalidArgumentError);
}

TEST_CASE("the certificate is skipped when brute force exceeds its budget") {
  Graph g = testsupport::p4();
  Objective obj(g);
  RankContext ctx = rank_context(obj);
  SearchOptions opts;
  opts.brute_budget = 5;  // C(4, 2) = 6 > 5
  SearchResult res = seeded_search(obj, ctx, {g.set_of({"2"})}, 2, opts);
  REQUIRE(!res.certificate_attempted);
  REQUIRE(!res.certified);

  opts.brute_budget = 6;
  res = seeded_search(obj, ctx, {g.set_of({"2"})}, 2, opts);
  REQUIRE(res.certificate_attempted);

  opts = SearchOptions{};
  opts.certify = false;
  res = seeded_search(obj, ctx, {g.set_of({"2"})}, 2, opts);
  REQUIRE(!res.certificate_attempted);
}

TEST_CASE("greedy from singleton seeds matches brute force on small graphs") {
  for (std::uint64_t seed = 200; seed < 215; ++seed) {
    int n = 5 + static_cast<int>(seed % 4);
    Graph g = testsupport::random_connected_graph(n, 220, seed);
    Objective obj(g);
    RankContext ctx = rank_context(obj);
    for (int k = 1; k <= 3; ++k) {
      std::vector<NodeSet> seeds;
      for (int v = 0; v < n; ++v) seeds.push_back(NodeSet(n, {v}));
      // Cannot require optimality of greedy in general; certify() reports
      // honestly whether the optimum value was reached.
      SearchResult res = seeded_search(obj, ctx, seeds, k);
      REQUIRE(res.certificate_attempted);
      REQUIRE(res.best_f >= res.optimum_f - 1e-9);
      if (res.certified)
        REQUIRE_THAT(res.best_f, WithinAbs(res.optimum_f, 1e-9));
    }
  }
}
