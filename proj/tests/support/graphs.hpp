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

// Canonical test graphs and a deterministic random-graph generator. Labels
// are chosen so that their lexicographic order matches construction order,
// which keeps hand-derived index arithmetic readable.

#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "spreadopt/spreadopt.hpp"

namespace testsupport {

// Zero-pads to the width of `total` so label order equals numeric order.
inline std::string padded_label(int i, int total) {
  std::string digits = std::to_string(total);
  std::string s = std::to_string(i);
  while (s.size() < digits.size()) s.insert(s.begin(), '0');
  return s;
}

inline spreadopt::Graph from_pairs(
    const std::vector<std::pair<std::string, std::string>>& pairs) {
  std::vector<spreadopt::Edge> edges;
  for (const auto& [a, b] : pairs) edges.push_back({a, b, 1.0});
  return spreadopt::Graph::from_edges(edges);
}

inline spreadopt::Graph p3() { return from_pairs({{"1", "2"}, {"2", "3"}}); }

inline spreadopt::Graph s3() {
  return from_pairs({{"0", "1"}, {"0", "2"}, {"0", "3"}});
}

inline spreadopt::Graph c4() {
  return from_pairs({{"1", "2"}, {"2", "3"}, {"3", "4"}, {"4", "1"}});
}

inline spreadopt::Graph k2() { return from_pairs({{"a", "b"}}); }

inline spreadopt::Graph p4() {
  return from_pairs({{"1", "2"}, {"2", "3"}, {"3", "4"}});
}

inline spreadopt::Graph c6() {
  return from_pairs({{"1", "2"},
                     {"2", "3"},
                     {"3", "4"},
                     {"4", "5"},
                     {"5", "6"},
                     {"6", "1"}});
}

inline spreadopt::Graph weighted_p3() {
  return spreadopt::Graph::from_edges(
      {{"1", "2", 2.0}, {"2", "3", 1.0}});
}

inline spreadopt::Graph petersen() {
  std::vector<spreadopt::Edge> edges;
  for (int i = 0; i < 5; ++i) {
    edges.push_back({std::to_string(i), std::to_string((i + 1) % 5), 1.0});
    edges.push_back(
        {std::to_string(5 + i), std::to_string(5 + (i + 2) % 5), 1.0});
    edges.push_back({std::to_string(i), std::to_string(5 + i), 1.0});
  }
  return spreadopt::Graph::from_edges(edges);
}

inline spreadopt::Graph path_graph(int n) {
  std::vector<spreadopt::Edge> edges;
  for (int i = 1; i < n; ++i)
    edges.push_back({padded_label(i, n), padded_label(i + 1, n), 1.0});
  return spreadopt::Graph::from_edges(edges);
}

inline spreadopt::Graph cycle_graph(int n) {
  std::vector<spreadopt::Edge> edges;
  for (int i = 1; i < n; ++i)
    edges.push_back({padded_label(i, n), padded_label(i + 1, n), 1.0});
  edges.push_back({padded_label(n, n), padded_label(1, n), 1.0});
  return spreadopt::Graph::from_edges(edges);
}

// Star with `leaves` leaves; the center sorts first.
inline spreadopt::Graph star_graph(int leaves) {
  int n = leaves + 1;
  std::vector<spreadopt::Edge> edges;
  for (int i = 2; i <= n; ++i)
    edges.push_back({padded_label(1, n), padded_label(i, n), 1.0});
  return spreadopt::Graph::from_edges(edges);
}

// Uniform spanning-tree skeleton plus independent extra edges. Fully
// deterministic in (n, extra_permille, seed); connectivity by construction.
inline spreadopt::Graph random_connected_graph(int n, int extra_permille,
                                               std::uint64_t seed) {
  std::uint64_t state = seed * 0x9e3779b97f4a7c15ull + 0x2545f4914f6cdd1dull;
  std::set<std::pair<int, int>> present;
  std::vector<spreadopt::Edge> edges;
  auto add = [&](int a, int b) {
    if (a > b) std::swap(a, b);
    if (!present.insert({a, b}).second) return;
    edges.push_back({padded_label(a + 1, n), padded_label(b + 1, n), 1.0});
  };
  for (int i = 1; i < n; ++i)
    add(i, static_cast<int>(spreadopt::detail::bounded(
               spreadopt::detail::splitmix64(state), i)));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (spreadopt::detail::bounded(spreadopt::detail::splitmix64(state),
                                     1000) <
          static_cast<std::uint64_t>(extra_permille))
        add(i, j);
  return spreadopt::Graph::from_edges(edges);
}

}  // namespace testsupport
