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

#include <cmath>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "spreadopt/errors.hpp"
#include "spreadopt/graph.hpp"
#include "spreadopt/node_set.hpp"

namespace spreadopt {

/// Expected steps for the walk started outside `target` to first enter it,
/// one value per node outside the target.
struct HittingProfile {
  NodeSet target;
  std::vector<int> outside;   // ascending node indices
  std::vector<double> times;  // parallel to `outside`

  /// Hitting time of node i; i must lie outside the target.
  double time(int i) const {
    for (std::size_t k = 0; k < outside.size(); ++k)
      if (outside[k] == i) return times[k];
    throw InvalidArgumentError("node is inside the target set");
  }

  bool empty() const { return outside.empty(); }
};

namespace detail {

constexpr int kDenseSolveLimit = 2048;
constexpr long long kMaxSweeps = 2000000;

inline double residual_tolerance(double xmax) { return 1e-10 * (1.0 + xmax); }

/// In-place LU factorization with partial pivoting, row-major.
struct DenseLu {
  int n = 0;
  std::vector<double> a;  // n*n, overwritten by L\U factors
  std::vector<int> piv;

  void factor() {
    piv.resize(n);
    for (int k = 0; k < n; ++k) {
      int p = k;
      double best = std::fabs(a[k * n + k]);
      for (int r = k + 1; r < n; ++r) {
        double v = std::fabs(a[r * n + k]);
        if (v > best) {
          best = v;
          p = r;
        }
      }
      if (best == 0.0)
        throw InternalError("singular restricted system; walk cannot be "
                            "absorbed from some state");
      piv[k] = p;
      if (p != k)
        for (int c = 0; c < n; ++c) std::swap(a[k * n + c], a[p * n + c]);
      double d = a[k * n + k];
      for (int r = k + 1; r < n; ++r) {
        double m = a[r * n + k] / d;
        a[r * n + k] = m;
        if (m != 0.0)
          for (int c = k + 1; c < n; ++c) a[r * n + c] -= m * a[k * n + c];
      }
    }
  }

  void solve(std::vector<double>& x) const {
    // The factorization swaps whole rows, multipliers included, so the
    // pivot sequence must be applied to the right-hand side in full before
    // substitution begins.
    for (int k = 0; k < n; ++k)
      if (piv[k] != k) std::swap(x[k], x[piv[k]]);
    for (int k = 0; k < n; ++k)
      for (int r = k + 1; r < n; ++r) x[r] -= a[r * n + k] * x[k];
    for (int k = n - 1; k >= 0; --k) {
      for (int c = k + 1; c < n; ++c) x[k] -= a[k * n + c] * x[c];
      x[k] /= a[k * n + k];
    }
  }
};

/// Shared solver: fills hitting times for all nodes outside `target`.
/// Dense LU with iterative refinement up to kDenseSolveLimit unknowns,
/// sweep iteration on the defining equations beyond that.
inline std::vector<double> solve_hitting_times(const Graph& g,
                                               const NodeSet& target,
                                               std::vector<int>& outside) {
  int n = g.node_count();
  outside.clear();
  for (int i = 0; i < n; ++i)
    if (!target.contains(i)) outside.push_back(i);
  int nr = static_cast<int>(outside.size());
  std::vector<double> x(nr, 0.0);
  if (nr == 0) return x;

  std::vector<int> pos(n, -1);  // node index -> row, or -1 inside target
  for (int r = 0; r < nr; ++r) pos[outside[r]] = r;

  // Residual of (I - P) x = 1 restricted to the rows in `outside`.
  auto residual = [&](const std::vector<double>& v, std::vector<double>& r) {
    for (int k = 0; k < nr; ++k) {
      int i = outside[k];
      const auto& nb = g.neighbors(i);
      const auto& wt = g.neighbor_weights(i);
      double s = g.strength(i);
      double acc = 1.0 - v[k];
      for (std::size_t e = 0; e < nb.size(); ++e) {
        int rj = pos[nb[e]];
        if (rj >= 0) acc += wt[e] / s * v[rj];
      }
      r[k] = acc;
    }
  };
  auto inf_norm = [](const std::vector<double>& v) {
    double m = 0.0;
    for (double t : v) m = std::max(m, std::fabs(t));
    return m;
  };

  if (nr <= kDenseSolveLimit) {
    DenseLu lu;
    lu.n = nr;
    lu.a.assign(static_cast<std::size_t>(nr) * nr, 0.0);
    for (int k = 0; k < nr; ++k) {
      int i = outside[k];
      lu.a[static_cast<std::size_t>(k) * nr + k] = 1.0;
      const auto& nb = g.neighbors(i);
      const auto& wt = g.neighbor_weights(i);
      double s = g.strength(i);
      for (std::size_t e = 0; e < nb.size(); ++e) {
        int rj = pos[nb[e]];
        if (rj >= 0) lu.a[static_cast<std::size_t>(k) * nr + rj] -= wt[e] / s;
      }
    }
    lu.factor();
    std::vector<double> b(nr, 1.0);
    x = b;
    lu.solve(x);
    std::vector<double> r(nr);
    for (int pass = 0; pass < 3; ++pass) {
      residual(x, r);
      if (inf_norm(r) <= residual_tolerance(inf_norm(x))) return x;
      lu.solve(r);
      for (int k = 0; k < nr; ++k) x[k] += r[k];
    }
    residual(x, r);
    if (inf_norm(r) > residual_tolerance(inf_norm(x)))
      throw InternalError("hitting-time solve did not reach tolerance");
    return x;
  }

  // Large instance: sweep the fixed-point equations h = 1 + P h in place.
  // The restricted transition matrix is strictly substochastic on every
  // walk-reachable boundary, so the sweeps converge.
  x.assign(nr, 1.0);
  std::vector<double> r(nr);
  for (long long sweep = 0; sweep < kMaxSweeps; ++sweep) {
    for (int k = 0; k < nr; ++k) {
      int i = outside[k];
      const auto& nb = g.neighbors(i);
      const auto& wt = g.neighbor_weights(i);
      double s = g.strength(i);
      double acc = 1.0;
      for (std::size_t e = 0; e < nb.size(); ++e) {
        int rj = pos[nb[e]];
        if (rj >= 0) acc += wt[e] / s * x[rj];
      }
      x[k] = acc;
    }
    residual(x, r);
    if (inf_norm(r) <= residual_tolerance(inf_norm(x))) return x;
  }
  throw InternalError("hitting-time sweeps did not converge");
}

inline void check_target(const Graph& g, const NodeSet& a) {
  if (a.universe() != g.node_count())
    throw InvalidArgumentError("target universe does not match graph");
  if (a.empty())
    throw EmptyTargetError("target set must not be empty");
}

}  // namespace detail

/// Expected first-entry times into `a` for every node outside `a`.
/// For a = V the profile is empty.
inline HittingProfile hitting_times(const Graph& g, const NodeSet& a) {
  detail::check_target(g, a);
  HittingProfile p;
  p.target = a;
  p.times = detail::solve_hitting_times(g, a, p.outside);
  return p;
}

inline HittingProfile hitting_times(const Graph& g,
                                    const std::vector<std::string>& labels) {
  return hitting_times(g, g.set_of(labels));
}

/// Total expected absorption time: the sum of hitting times into `a` over
/// all nodes outside `a`. Zero when a = V. Lower values mean `a` spreads
/// faster through the graph.
inline double spread_objective(const Graph& g, const NodeSet& a) {
  detail::check_target(g, a);
  std::vector<int> outside;
  std::vector<double> t = detail::solve_hitting_times(g, a, outside);
  double f = 0.0;
  for (double v : t) f += v;
  return f;
}

inline double spread_objective(const Graph& g,
                               const std::vector<std::string>& labels) {
  return spread_objective(g, g.set_of(labels));
}

/// Memoizing evaluator for the spread objective, keyed by node set.
/// Algorithms that score many candidate sets share one instance so repeated
/// sets are solved once. The referenced graph must outlive the evaluator.
class Objective {
 public:
  explicit Objective(const Graph& g) : g_(&g) {}

  const Graph& graph() const { return *g_; }

  double F(const NodeSet& a) const {
    auto it = cache_.find(a);
    if (it != cache_.end()) return it->second;
    double f = spread_objective(*g_, a);
    cache_.emplace(a, f);
    return f;
  }

  std::size_t cached_evaluations() const { return cache_.size(); }

 private:
  const Graph* g_;
  mutable std::unordered_map<NodeSet, double, NodeSet::Hash> cache_;
};

/// Monte Carlo estimate of one hitting time.
struct McEstimate {
  double mean = 0.0;
  double std_error = 0.0;
  long long walks = 0;
  std::uint64_t seed = 0;
};

/// A simulated walk ran past the per-walk step cap. Carries the estimate
/// over the walks that did finish; a trigger usually means a pathological
/// instance or an unrealistic cap.
class StepCapExceeded : public InputError {
 public:
  StepCapExceeded(const std::string& what_arg, McEstimate partial_estimate,
                  long long cap)
      : InputError(what_arg), partial(partial_estimate), step_cap(cap) {}

  McEstimate partial;
  long long step_cap;
};

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ull;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

// Unbiased-enough bounded draw; the multiply-shift keeps results identical
// across platforms, unlike the standard distributions.
inline std::uint64_t bounded(std::uint64_t raw, std::uint64_t n) {
  return static_cast<std::uint64_t>(
      (static_cast<unsigned __int128>(raw) * n) >> 64);
}

inline double unit_double(std::uint64_t raw) {
  return static_cast<double>(raw >> 11) * 0x1.0p-53;
}

}  // namespace detail

/// Simulates `walks` independent walks from `start` and averages the first
/// entry time into `a`. Each walk draws from its own stream derived from
/// (seed, walk index), so results do not depend on scheduling.
inline McEstimate mc_hitting(const Graph& g, const NodeSet& a, int start,
                             long long walks, std::uint64_t seed,
                             long long step_cap = 10000000) {
  detail::check_target(g, a);
  if (start < 0 || start >= g.node_count())
    throw InvalidArgumentError("start node out of range");
  if (a.contains(start))
    throw InvalidArgumentError("start node lies inside the target set");
  if (walks < 1) throw InvalidArgumentError("need at least one walk");
  if (step_cap < 1) throw InvalidArgumentError("step cap must be positive");

  // Cumulative neighbor weights for weighted sampling.
  int n = g.node_count();
  std::vector<std::vector<double>> cum;
  if (g.weighted()) {
    cum.resize(n);
    for (int i = 0; i < n; ++i) {
      double s = 0.0;
      for (double w : g.neighbor_weights(i)) {
        s += w;
        cum[i].push_back(s);
      }
    }
  }

  McEstimate est;
  est.seed = seed;
  double mean = 0.0, m2 = 0.0;
  for (long long w = 0; w < walks; ++w) {
    std::uint64_t stream = seed ^ (0x9e3779b97f4a7c15ull *
                                   static_cast<std::uint64_t>(w + 1));
    int pos = start;
    long long t = 0;
    while (true) {
      if (t >= step_cap) {
        est.mean = mean;
        est.std_error =
            w > 1 ? std::sqrt(m2 / (static_cast<double>(w - 1) * w)) : 0.0;
        est.walks = w;
        throw StepCapExceeded(
            "walk " + std::to_string(w) + " exceeded the step cap of " +
                std::to_string(step_cap) + " without reaching the target",
            est, step_cap);
      }
      std::uint64_t raw = detail::splitmix64(stream);
      const auto& nb = g.neighbors(pos);
      int next;
      if (!g.weighted()) {
        next = nb[detail::bounded(raw, nb.size())];
      } else {
        double r = detail::unit_double(raw) * g.strength(pos);
        const auto& c = cum[pos];
        std::size_t k = 0;
        while (k + 1 < c.size() && r >= c[k]) ++k;
        next = nb[k];
      }
      ++t;
      pos = next;
      if (a.contains(pos)) break;
    }
    double delta = static_cast<double>(t) - mean;
    mean += delta / static_cast<double>(w + 1);
    m2 += delta * (static_cast<double>(t) - mean);
  }
  est.mean = mean;
  est.std_error =
      walks > 1 ? std::sqrt(m2 / (static_cast<double>(walks - 1) * walks))
                : 0.0;
  est.walks = walks;
  return est;
}

inline McEstimate mc_hitting(const Graph& g,
                             const std::vector<std::string>& labels,
                             const std::string& start, long long walks,
                             std::uint64_t seed,
                             long long step_cap = 10000000) {
  return mc_hitting(g, g.set_of(labels), g.index_of(start), walks, seed,
                    step_cap);
}

}  // namespace spreadopt
