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
#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include "json.hpp"
#include "spreadopt/spreadopt.hpp"

namespace spreadopt::cli {

using nlohmann::json;

// Quantizes to 12 significant digits so that reports depend only on the
// input, not on printing internals: the JSON writer then emits the shortest
// representation of the quantized value.
inline double fixed_precision(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return std::strtod(buf, nullptr);
}

inline std::string format_number(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

inline json set_json(const Graph& g, const NodeSet& a) {
  json arr = json::array();
  a.for_each([&](int v) { arr.push_back(g.label(v)); });
  return arr;
}

inline json family_json(const Graph& g, const std::vector<NodeSet>& sets) {
  json arr = json::array();
  for (const NodeSet& a : sets) arr.push_back(set_json(g, a));
  return arr;
}

inline json report_base(const std::string& command, const Graph& g,
                        std::uint64_t seed) {
  json r;
  r["schema"] = "spreadopt/1";
  r["command"] = command;
  r["graph"] = {{"nodes", g.node_count()},
                {"edges", g.edge_count()},
                {"bipartite", is_bipartite(g)},
                {"weighted", g.weighted()}};
  r["seed"] = seed;
  return r;
}

inline void emit(const json& r) {
  std::string text = r.dump(2);
  text += '\n';
  std::fwrite(text.data(), 1, text.size(), stdout);
}

// Comma-separated labels; surrounding whitespace per label is dropped, and
// so are empty tokens, so "" denotes the empty set.
inline std::vector<std::string> split_labels(const std::string& text) {
  std::vector<std::string> out;
  std::string cur;
  auto flush = [&] {
    std::size_t b = cur.find_first_not_of(" \t");
    if (b != std::string::npos) {
      std::size_t e = cur.find_last_not_of(" \t");
      out.push_back(cur.substr(b, e - b + 1));
    }
    cur.clear();
  };
  for (char c : text) {
    if (c == ',')
      flush();
    else
      cur += c;
  }
  flush();
  return out;
}

}  // namespace spreadopt::cli
