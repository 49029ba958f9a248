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
#include <cctype>
#include <cmath>
#include <cstdlib>
#include <map>
#include <queue>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "spreadopt/errors.hpp"
#include "spreadopt/node_set.hpp"

namespace spreadopt {

/// One undirected edge given by labels; weight defaults to 1.
struct Edge {
  std::string a;
  std::string b;
  double weight = 1.0;
};

/// Immutable undirected graph.
///
/// Invariants established at construction: at least two nodes, connected, no
/// self loops, no duplicate edges, strictly positive weights. Node labels are
/// opaque strings; indices are assigned in sorted label order, so index
/// comparisons coincide with lexicographic label comparisons everywhere.
class Graph {
 public:
  /// Parses edge-list text: one edge per line as `<label> <label> [weight]`,
  /// `#` starts a comment, blank lines are ignored.
  static Graph parse(const std::string& text) {
    std::vector<Edge> edges;
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
      ++line_no;
      auto hash = line.find('#');
      if (hash != std::string::npos) line.resize(hash);
      std::istringstream ls(line);
      std::vector<std::string> tok;
      std::string t;
      while (ls >> t) tok.push_back(t);
      if (tok.empty()) continue;
      if (tok.size() < 2 || tok.size() > 3)
        throw ParseError("line " + std::to_string(line_no) +
                         ": expected `<label> <label> [weight]`");
      Edge e{tok[0], tok[1], 1.0};
      if (tok.size() == 3) {
        const char* s = tok[2].c_str();
        char* end = nullptr;
        e.weight = std::strtod(s, &end);
        if (end == s || *end != '\0' || !std::isfinite(e.weight) ||
            e.weight <= 0.0)
          throw ParseError("line " + std::to_string(line_no) +
                           ": weight must be a positive finite number");
      }
      edges.push_back(std::move(e));
    }
    return from_edges(edges);
  }

  static Graph from_edges(const std::vector<Edge>& edges) {
    if (edges.empty()) throw ParseError("graph has no edges");
    Graph g;
    for (const Edge& e : edges) {
      if (e.a == e.b) throw SelfLoopError("self loop at node `" + e.a + "`");
      g.labels_.push_back(e.a);
      g.labels_.push_back(e.b);
    }
    std::sort(g.labels_.begin(), g.labels_.end());
    g.labels_.erase(std::unique(g.labels_.begin(), g.labels_.end()),
                    g.labels_.end());
    int n = static_cast<int>(g.labels_.size());
    g.adj_.assign(n, {});
    g.adj_weight_.assign(n, {});
    g.strength_.assign(n, 0.0);

    std::map<std::pair<int, int>, double> unique_edges;
    for (const Edge& e : edges) {
      int i = g.index_of(e.a);
      int j = g.index_of(e.b);
      auto key = std::minmax(i, j);
      if (!unique_edges.emplace(key, e.weight).second)
        throw ParseError("duplicate edge `" + e.a + " " + e.b + "`");
    }
    for (const auto& [key, w] : unique_edges) {
      g.edges_.push_back(key);
      g.edge_weight_.push_back(w);
      if (w != 1.0) g.weighted_ = true;
      g.adj_[key.first].push_back(key.second);
      g.adj_weight_[key.first].push_back(w);
      g.adj_[key.second].push_back(key.first);
      g.adj_weight_[key.second].push_back(w);
      g.strength_[key.first] += w;
      g.strength_[key.second] += w;
    }
    for (int i = 0; i < n; ++i) {
      // Neighbor lists come out sorted because unique_edges is ordered, but
      // only per endpoint role; normalize.
      std::vector<std::pair<int, double>> nb(g.adj_[i].size());
      for (std::size_t k = 0; k < nb.size(); ++k)
        nb[k] = {g.adj_[i][k], g.adj_weight_[i][k]};
      std::sort(nb.begin(), nb.end());
      for (std::size_t k = 0; k < nb.size(); ++k) {
        g.adj_[i][k] = nb[k].first;
        g.adj_weight_[i][k] = nb[k].second;
      }
    }
    g.check_connected();
    return g;
  }

  int node_count() const { return static_cast<int>(labels_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  bool weighted() const { return weighted_; }

  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int i) const { return labels_.at(i); }

  bool has_node(const std::string& label) const {
    return std::binary_search(labels_.begin(), labels_.end(), label);
  }

  int index_of(const std::string& label) const {
    auto it = std::lower_bound(labels_.begin(), labels_.end(), label);
    if (it == labels_.end() || *it != label)
      throw UnknownNodeError("unknown node `" + label + "`");
    return static_cast<int>(it - labels_.begin());
  }

  const std::vector<int>& neighbors(int i) const { return adj_.at(i); }
  const std::vector<double>& neighbor_weights(int i) const {
    return adj_weight_.at(i);
  }

  /// Total weight incident to node i (the degree on unweighted graphs).
  double strength(int i) const { return strength_.at(i); }
  int degree(int i) const { return static_cast<int>(adj_.at(i).size()); }

  bool has_edge(int i, int j) const {
    const auto& nb = adj_.at(i);
    return std::binary_search(nb.begin(), nb.end(), j);
  }

  /// Edges as (i, j) index pairs with i < j, in lexicographic order.
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  double edge_weight_at(std::size_t e) const { return edge_weight_.at(e); }

  double edge_weight(int i, int j) const {
    const auto& nb = adj_.at(i);
    auto it = std::lower_bound(nb.begin(), nb.end(), j);
    if (it == nb.end() || *it != j)
      throw InvalidArgumentError("no edge between the given nodes");
    return adj_weight_.at(i)[it - nb.begin()];
  }

  NodeSet set_of(const std::vector<std::string>& labels) const {
    NodeSet s(node_count());
    for (const std::string& l : labels) s.add(index_of(l));
    return s;
  }

  std::vector<std::string> labels_of(const NodeSet& s) const {
    if (s.universe() != node_count())
      throw InvalidArgumentError("node set universe does not match graph");
    std::vector<std::string> out;
    s.for_each([&](int i) { out.push_back(labels_[i]); });
    return out;
  }

 private:
  void check_connected() const {
    int n = node_count();
    std::vector<char> seen(n, 0);
    std::queue<int> q;
    q.push(0);
    seen[0] = 1;
    int reached = 1;
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int v : adj_[u]) {
        if (!seen[v]) {
          seen[v] = 1;
          ++reached;
          q.push(v);
        }
      }
    }
    if (reached != n) throw DisconnectedError("graph is not connected");
  }

  std::vector<std::string> labels_;
  std::vector<std::vector<int>> adj_;
  std::vector<std::vector<double>> adj_weight_;
  std::vector<double> strength_;
  std::vector<std::pair<int, int>> edges_;
  std::vector<double> edge_weight_;
  bool weighted_ = false;
};

/// Row-stochastic single-step transition matrix of the random walk:
/// p(i,j) = w(i,j) / strength(i), stored sparsely per row.
struct TransitionMatrix {
  int rows = 0;
  std::vector<std::vector<std::pair<int, double>>> row;

  double prob(int i, int j) const {
    for (const auto& [col, p] : row.at(i))
      if (col == j) return p;
    return 0.0;
  }
};

inline TransitionMatrix transition_matrix(const Graph& g) {
  TransitionMatrix m;
  m.rows = g.node_count();
  m.row.resize(m.rows);
  for (int i = 0; i < m.rows; ++i) {
    const auto& nb = g.neighbors(i);
    const auto& wt = g.neighbor_weights(i);
    double s = g.strength(i);
    m.row[i].reserve(nb.size());
    for (std::size_t k = 0; k < nb.size(); ++k)
      m.row[i].emplace_back(nb[k], wt[k] / s);
  }
  return m;
}

/// True when the node set splits into two sides with all edges crossing.
/// The walk on such graphs is periodic; hitting times stay well defined.
inline bool is_bipartite(const Graph& g) {
  int n = g.node_count();
  std::vector<int> color(n, -1);
  std::queue<int> q;
  color[0] = 0;
  q.push(0);
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    for (int v : g.neighbors(u)) {
      if (color[v] == -1) {
        color[v] = color[u] ^ 1;
        q.push(v);
      } else if (color[v] == color[u]) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace spreadopt
