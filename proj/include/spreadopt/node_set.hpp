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
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

#include "spreadopt/errors.hpp"

namespace spreadopt {

/// A set of node indices drawn from a fixed universe [0, universe()).
///
/// Backed by a bit mask, so copies are cheap at the graph sizes this library
/// targets and set algebra is word-parallel. Two sets are only comparable or
/// combinable when their universes match.
class NodeSet {
 public:
  NodeSet() = default;

  explicit NodeSet(int universe)
      : universe_(universe), bits_((universe + 63) / 64, 0) {
    if (universe < 0) throw InvalidArgumentError("negative universe");
  }

  NodeSet(int universe, std::initializer_list<int> elems) : NodeSet(universe) {
    for (int e : elems) add(e);
  }

  static NodeSet full(int universe) {
    NodeSet s(universe);
    for (std::size_t w = 0; w < s.bits_.size(); ++w) s.bits_[w] = ~0ull;
    s.trim();
    return s;
  }

  /// Builds a set from the low `universe` bits of `mask`. Universe <= 64.
  static NodeSet from_mask(int universe, std::uint64_t mask) {
    if (universe > 64) throw InvalidArgumentError("from_mask universe > 64");
    NodeSet s(universe);
    if (!s.bits_.empty()) s.bits_[0] = mask;
    s.trim();
    return s;
  }

  static NodeSet from_indices(int universe, const std::vector<int>& elems) {
    NodeSet s(universe);
    for (int e : elems) s.add(e);
    return s;
  }

  int universe() const { return universe_; }

  bool contains(int i) const {
    check_index(i);
    return (bits_[i >> 6] >> (i & 63)) & 1u;
  }

  void add(int i) {
    check_index(i);
    bits_[i >> 6] |= 1ull << (i & 63);
  }

  void remove(int i) {
    check_index(i);
    bits_[i >> 6] &= ~(1ull << (i & 63));
  }

  NodeSet with(int i) const {
    NodeSet s(*this);
    s.add(i);
    return s;
  }

  NodeSet without(int i) const {
    NodeSet s(*this);
    s.remove(i);
    return s;
  }

  int size() const {
    int n = 0;
    for (std::uint64_t w : bits_) n += std::popcount(w);
    return n;
  }

  bool empty() const {
    for (std::uint64_t w : bits_)
      if (w) return false;
    return true;
  }

  bool is_full() const { return size() == universe_; }

  NodeSet operator|(const NodeSet& o) const {
    check_universe(o);
    NodeSet s(*this);
    for (std::size_t w = 0; w < bits_.size(); ++w) s.bits_[w] |= o.bits_[w];
    return s;
  }

  NodeSet operator&(const NodeSet& o) const {
    check_universe(o);
    NodeSet s(*this);
    for (std::size_t w = 0; w < bits_.size(); ++w) s.bits_[w] &= o.bits_[w];
    return s;
  }

  /// Set difference: elements of *this not in `o`.
  NodeSet operator-(const NodeSet& o) const {
    check_universe(o);
    NodeSet s(*this);
    for (std::size_t w = 0; w < bits_.size(); ++w) s.bits_[w] &= ~o.bits_[w];
    return s;
  }

  NodeSet complement() const { return full(universe_) - *this; }

  bool is_subset_of(const NodeSet& o) const {
    check_universe(o);
    for (std::size_t w = 0; w < bits_.size(); ++w)
      if (bits_[w] & ~o.bits_[w]) return false;
    return true;
  }

  bool intersects(const NodeSet& o) const {
    check_universe(o);
    for (std::size_t w = 0; w < bits_.size(); ++w)
      if (bits_[w] & o.bits_[w]) return true;
    return false;
  }

  bool operator==(const NodeSet& o) const {
    return universe_ == o.universe_ && bits_ == o.bits_;
  }

  bool operator!=(const NodeSet& o) const { return !(*this == o); }

  /// Calls f(i) for every element in ascending index order.
  template <class F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < bits_.size(); ++w) {
      std::uint64_t word = bits_[w];
      while (word) {
        int bit = std::countr_zero(word);
        f(static_cast<int>(w * 64) + bit);
        word &= word - 1;
      }
    }
  }

  std::vector<int> elements() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size()));
    for_each([&](int i) { out.push_back(i); });
    return out;
  }

  const std::vector<std::uint64_t>& words() const { return bits_; }

  struct Hash {
    std::size_t operator()(const NodeSet& s) const noexcept {
      // FNV-1a over the words plus the universe.
      std::uint64_t h = 14695981039346656037ull;
      auto mix = [&h](std::uint64_t v) {
        h ^= v;
        h *= 1099511628211ull;
      };
      mix(static_cast<std::uint64_t>(s.universe_));
      for (std::uint64_t w : s.bits_) mix(w);
      return static_cast<std::size_t>(h);
    }
  };

 private:
  void check_index(int i) const {
    if (i < 0 || i >= universe_)
      throw InvalidArgumentError("node index out of range");
  }

  void check_universe(const NodeSet& o) const {
    if (universe_ != o.universe_)
      throw InvalidArgumentError("node sets have different universes");
  }

  void trim() {
    int rem = universe_ & 63;
    if (rem != 0 && !bits_.empty()) bits_.back() &= (1ull << rem) - 1;
  }

  int universe_ = 0;
  std::vector<std::uint64_t> bits_;
};

/// Orders sets by their ascending element sequences ("1" < "1,2" < "1,3" <
/// "2"). With label-sorted node indexing this is exactly the lexicographic
/// order on sorted label sequences, which is the tie-break order used
/// throughout the library.
inline bool lex_less(const NodeSet& a, const NodeSet& b) {
  const auto& aw = a.words();
  const auto& bw = b.words();
  std::size_t n = std::max(aw.size(), bw.size());
  for (std::size_t w = 0; w < n; ++w) {
    std::uint64_t x = w < aw.size() ? aw[w] : 0;
    std::uint64_t y = w < bw.size() ? bw[w] : 0;
    if (x == y) continue;
    std::uint64_t diff = x ^ y;
    std::uint64_t low = diff & ~(diff - 1);  // lowest differing bit
    // If a owns the lowest differing bit, its sequence has the smaller
    // element there; otherwise a is a strict prefix or has a larger element.
    if (x & low) {
      // a < b unless a has nothing beyond the shared prefix? It has `low`,
      // so its next element is smaller than b's next (or b ended, in which
      // case b is a prefix of a and b < a).
      std::uint64_t brest = y & ~(low - 1);
      for (std::size_t v = w + 1; brest == 0 && v < bw.size(); ++v) brest = bw[v];
      return brest != 0;
    }
    std::uint64_t arest = x & ~(low - 1);
    for (std::size_t v = w + 1; arest == 0 && v < aw.size(); ++v) arest = aw[v];
    return arest == 0;
  }
  return false;
}

/// Canonical display order: cardinality first, then lex_less.
inline bool size_lex_less(const NodeSet& a, const NodeSet& b) {
  int sa = a.size(), sb = b.size();
  if (sa != sb) return sa < sb;
  return lex_less(a, b);
}

namespace detail {

/// Number of nonempty subsets of an n-element universe with size <= kmax,
/// saturating instead of overflowing.
inline std::uint64_t subset_count_capped(int n, int kmax) {
  constexpr std::uint64_t kCap = ~0ull;
  long double total = 0.0L;
  long double binom = 1.0L;  // C(n, 0)
  for (int k = 1; k <= kmax && k <= n; ++k) {
    binom = binom * (n - k + 1) / k;
    total += binom;
    if (total > 1.0e18L) return kCap;
  }
  return static_cast<std::uint64_t>(total);
}

/// C(n, k), saturating.
inline std::uint64_t binomial_capped(int n, int k) {
  if (k < 0 || k > n) return 0;
  long double binom = 1.0L;
  for (int i = 1; i <= k; ++i) {
    binom = binom * (n - i + 1) / i;
    if (binom > 1.0e18L) return ~0ull;
  }
  return static_cast<std::uint64_t>(binom);
}

/// Advances a strictly increasing index vector to the next k-combination of
/// {0,...,n-1} in lexicographic order. Returns false after the last one.
inline bool next_combination(std::vector<int>& c, int n) {
  int k = static_cast<int>(c.size());
  for (int i = k - 1; i >= 0; --i) {
    if (c[i] < n - k + i) {
      ++c[i];
      for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
      return true;
    }
  }
  return false;
}

/// Relative tolerance used when two objective values are treated as tied and
/// the lexicographic rule decides.
inline double value_tie_eps(double reference) {
  double mag = reference < 0 ? -reference : reference;
  return 1e-9 * (1.0 + mag);
}

}  // namespace detail

}  // namespace spreadopt
