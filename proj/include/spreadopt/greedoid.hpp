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
#include <optional>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "spreadopt/errors.hpp"
#include "spreadopt/graph.hpp"
#include "spreadopt/node_set.hpp"
#include "spreadopt/ranking.hpp"

namespace spreadopt {

/// Result of checking the three feasible-family axioms:
///   G1: the empty set is feasible.
///   G2: every nonempty feasible set has a removable element that leaves a
///       feasible set.
///   G3: for feasible X, Y with |X| > |Y| some x in X\Y has Y+{x} feasible.
/// The first counterexample found per failed axiom is recorded.
struct AxiomReport {
  bool g1 = true;
  bool g2 = true;
  bool g3 = true;
  std::optional<NodeSet> g2_counterexample;
  std::optional<std::pair<NodeSet, NodeSet>> g3_counterexample;  // (X, Y)
  bool ok() const { return g1 && g2 && g3; }
};

/// Raised when the family construction cannot produce an axiom-satisfying
/// result; carries the axiom report describing the obstruction.
class ConstructionFailed : public Error {
 public:
  ConstructionFailed(const std::string& what_arg, AxiomReport report)
      : Error(what_arg), report_(std::move(report)) {}
  const AxiomReport& report() const { return report_; }

 private:
  AxiomReport report_;
};

/// How a feasible set entered the family.
enum class SetOrigin {
  kEmpty,       // the always-included empty set
  kAugmentable, // lower set that survived augmentation culling
  kMember,      // near-optimal class member
};

struct GreedoidFamily {
  int universe = 0;
  std::vector<NodeSet> feasible;    // size-then-lex sorted, starts with the empty set
  std::vector<SetOrigin> origin;    // parallel to `feasible`
  AxiomReport report;

  bool contains(const NodeSet& a) const {
    auto it = std::lower_bound(feasible.begin(), feasible.end(), a,
                               size_lex_less);
    return it != feasible.end() && *it == a;
  }
};

/// Direct enumeration check of G1-G3 over an explicit family. Axiom
/// failures are data (reported), not errors. Checks run sequentially in
/// canonical order so the reported counterexample is deterministic.
inline AxiomReport check_axioms(const std::vector<NodeSet>& family,
                                int ground) {
  for (const NodeSet& a : family)
    if (a.universe() != ground)
      throw InvalidArgumentError("family member universe does not match ground");
  AxiomReport rep;

  std::unordered_set<NodeSet, NodeSet::Hash> in;
  in.reserve(family.size() * 2);
  for (const NodeSet& a : family) in.insert(a);

  rep.g1 = in.count(NodeSet(ground)) > 0;

  for (const NodeSet& a : family) {
    if (a.empty()) continue;
    bool removable = false;
    a.for_each([&](int x) {
      if (!removable && in.count(a.without(x))) removable = true;
    });
    if (!removable) {
      rep.g2 = false;
      rep.g2_counterexample = a;
      break;
    }
  }

  for (const NodeSet& x : family) {
    for (const NodeSet& y : family) {
      if (x.size() <= y.size()) continue;
      bool augmentable = false;
      x.for_each([&](int v) {
        if (!augmentable && !y.contains(v) && in.count(y.with(v)))
          augmentable = true;
      });
      if (!augmentable) {
        rep.g3 = false;
        rep.g3_counterexample = std::make_pair(x, y);
        break;
      }
    }
    if (!rep.g3) break;
  }
  return rep;
}

struct ClassG3Report {
  bool holds = true;
  std::optional<std::pair<NodeSet, NodeSet>> counterexample;  // (X, Y)
};

/// Verifies the augmentation axiom directly among the members of an exactly
/// enumerated near-optimal class. This holds for every such class (the
/// objective is supermodular on intersecting sets), so a counterexample
/// signals an implementation bug; it is reported, never suppressed.
/// Pairs automatically respect the cardinality cap: |Y| < |X| <= cap.
inline ClassG3Report check_class_g3(const NearOptimalClass& cls) {
  ClassG3Report rep;
  for (const NodeSet& x : cls.members) {
    for (const NodeSet& y : cls.members) {
      if (x.size() <= y.size()) continue;
      bool augmentable = false;
      x.for_each([&](int v) {
        if (!augmentable && !y.contains(v) && cls.contains(y.with(v)))
          augmentable = true;
      });
      if (!augmentable) {
        rep.holds = false;
        rep.counterexample = std::make_pair(x, y);
        return rep;
      }
    }
  }
  return rep;
}

/// Builds the feasible-set family spanned by a near-optimal class:
///   (1) members of the minimum cardinality m are kept verbatim;
///   (2) smaller sets are added by downward induction — a candidate of size
///       s is any one-element deletion of a retained size-(s+1) set, kept
///       iff every retained set of size s+1..m can augment it back into the
///       retained size-(s+1) layer (candidates scanned in lexicographic
///       order; same-size sets never interact, so order only fixes the
///       reported family, not its contents);
///   (3) larger members are kept iff a one-element deletion is retained,
///       which inductively guarantees a removal chain down to size m;
///   (4) the empty set is always included and the axioms are re-verified on
///       the final family.
/// Throws ConstructionFailed instead of returning a family that fails the
/// axiom check, so downstream consumers never see a partial result.
inline GreedoidFamily build_greedoid(const NearOptimalClass& cls) {
  if (cls.members.empty())
    throw ConstructionFailed("near-optimal class has no members", AxiomReport{});
  int ground = cls.members.front().universe();
  int m = cls.min_cardinality;
  int top = cls.members.back().size();

  // levels[s] holds the retained sets of cardinality s in lexicographic
  // order; class members arrive size-then-lex sorted, so each bucket is
  // already ordered.
  std::vector<std::vector<NodeSet>> levels(top + 1);
  for (const NodeSet& a : cls.members)
    if (a.size() == m) levels[m].push_back(a);

  std::unordered_set<NodeSet, NodeSet::Hash> next_layer;  // retained, size s+1
  for (const NodeSet& a : levels[m]) next_layer.insert(a);
  for (int s = m - 1; s >= 1; --s) {
    std::vector<NodeSet> candidates;
    std::unordered_set<NodeSet, NodeSet::Hash> seen;
    for (const NodeSet& z : levels[s + 1]) {
      z.for_each([&](int v) {
        NodeSet x = z.without(v);
        if (seen.insert(x).second) candidates.push_back(x);
      });
    }
    std::sort(candidates.begin(), candidates.end(), lex_less);
    for (const NodeSet& x : candidates) {
      bool keep = true;
      for (int above = s + 1; above <= m && keep; ++above) {
        for (const NodeSet& z : levels[above]) {
          bool augmentable = false;
          z.for_each([&](int v) {
            if (!augmentable && !x.contains(v) && next_layer.count(x.with(v)))
              augmentable = true;
          });
          if (!augmentable) {
            keep = false;
            break;
          }
        }
      }
      if (keep) levels[s].push_back(x);
    }
    next_layer.clear();
    for (const NodeSet& a : levels[s]) next_layer.insert(a);
  }

  for (int s = m + 1; s <= top; ++s) {
    std::unordered_set<NodeSet, NodeSet::Hash> below(levels[s - 1].begin(),
                                                     levels[s - 1].end());
    for (const NodeSet& a : cls.members) {
      if (a.size() != s) continue;
      bool chained = false;
      a.for_each([&](int v) {
        if (!chained && below.count(a.without(v))) chained = true;
      });
      if (chained) levels[s].push_back(a);
    }
  }

  GreedoidFamily fam;
  fam.universe = ground;
  fam.feasible.push_back(NodeSet(ground));
  fam.origin.push_back(SetOrigin::kEmpty);
  for (int s = 1; s <= top; ++s) {
    for (const NodeSet& a : levels[s]) {
      fam.feasible.push_back(a);
      fam.origin.push_back(s < m ? SetOrigin::kAugmentable : SetOrigin::kMember);
    }
  }

  fam.report = check_axioms(fam.feasible, ground);
  if (!fam.report.ok())
    throw ConstructionFailed("constructed family violates the feasibility axioms",
                             fam.report);
  return fam;
}

/// All feasible sets of cardinality exactly m, the seed family for the
/// seeded search.
inline std::vector<NodeSet> feasible_seeds(const GreedoidFamily& fam, int m) {
  std::vector<NodeSet> out;
  for (const NodeSet& a : fam.feasible)
    if (a.size() == m) out.push_back(a);
  if (out.empty())
    throw EmptySeedFamilyError("family has no feasible set of cardinality " +
                               std::to_string(m));
  return out;
}

/// Canonical text form: one feasible set per line in size-then-lex order,
/// labels comma-separated (the empty set prints as an empty line).
inline std::string serialize_family(const GreedoidFamily& fam, const Graph& g) {
  if (fam.universe != g.node_count())
    throw InvalidArgumentError("family universe does not match graph");
  std::string out;
  for (const NodeSet& a : fam.feasible) {
    bool leading = true;
    a.for_each([&](int v) {
      if (!leading) out += ',';
      out += g.label(v);
      leading = false;
    });
    out += '\n';
  }
  return out;
}

}  // namespace spreadopt
