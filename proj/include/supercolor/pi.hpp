// Copyright 2026 The supercolor Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SUPERCOLOR_PI_HPP_
#define SUPERCOLOR_PI_HPP_

// Auxiliary functions pi1, pi2 : U -> N with
//   (i)   pi1(u) + pi2(u) - 1 <= f(u) = max{d[g1](u), d[g2](u)},
//   (ii)  pi_i dominates g_i,
//   (iii) pi_i(u) <= d[g_i](u),
// built by recursion on |U| through common partial transversals, plus the
// constant-bound pair obtained from a single supermodular Delta-coloring.

#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "supercolor/bunch.hpp"
#include "supercolor/core.hpp"
#include "supercolor/error.hpp"
#include "supercolor/matching.hpp"
#include "supercolor/oracle.hpp"

namespace supercolor {

struct PiPair {
  std::vector<int> pi1;
  std::vector<int> pi2;
};

struct TraceLevel {
  std::vector<std::string> k;  // element names removed at this level
  TransversalCase case_tag;
};

struct PiResult {
  PiPair pair;
  std::vector<TraceLevel> trace;  // outermost level first
};

struct ConditionReport {
  bool i_ok = true;
  bool ii_ok = true;
  bool iii_ok = true;
  std::vector<Violation> witnesses;

  bool ok() const { return i_ok && ii_ok && iii_ok; }
};

// Checks (i) against an explicit bound f, and (ii), (iii) as stated.
inline ConditionReport verify_conditions_with_bound(const SetFn& g1, const SetFn& g2,
                                                    const PiPair& pair,
                                                    const std::vector<Value>& f) {
  const int n = g1.ground().size();
  if (static_cast<int>(pair.pi1.size()) != n || static_cast<int>(pair.pi2.size()) != n ||
      static_cast<int>(f.size()) != n) {
    throw InputError("verify_conditions: pair is not defined on the whole ground set");
  }
  const DegreeMap d1 = d_function(g1), d2 = d_function(g2);
  ConditionReport r;
  for (int u = 0; u < n; ++u) {
    const auto ui = static_cast<size_t>(u);
    const Value sum = Value{pair.pi1[ui]} + pair.pi2[ui] - 1;
    if (sum > f[ui]) {
      r.i_ok = false;
      r.witnesses.push_back({"i", {bit(u)}, {sum, f[ui]}, ""});
    }
    for (int side = 1; side <= 2; ++side) {
      const int p = side == 1 ? pair.pi1[ui] : pair.pi2[ui];
      const Value d = side == 1 ? d1[u] : d2[u];
      if (p < 1 || p > d) {
        r.iii_ok = false;
        r.witnesses.push_back({"iii." + std::to_string(side), {bit(u)}, {p, d}, ""});
      }
    }
  }
  for (int side = 1; side <= 2; ++side) {
    const Report dom = dominates(side == 1 ? pair.pi1 : pair.pi2, side == 1 ? g1 : g2);
    for (Violation v : dom.violations) {
      r.ii_ok = false;
      v.kind = "ii." + std::to_string(side);
      r.witnesses.push_back(std::move(v));
    }
  }
  return r;
}

inline ConditionReport verify_conditions(const SetFn& g1, const SetFn& g2, const PiPair& pair) {
  return verify_conditions_with_bound(g1, g2, pair, lemma_bound(g1, g2));
}

struct PiOptions {
#ifdef NDEBUG
  bool verify = false;
#else
  bool verify = true;
#endif
};

namespace detail {

// Extends (pi'_first, pi'_second) from U \ K to U, where K satisfies: every u
// whose P[first]-part meets K also has its P[second]-part meeting K.
inline std::pair<std::vector<int>, std::vector<int>> extend_pi(
    int n, Bits k, const Partition& first_partition, const DegreeMap& second_degree,
    const std::vector<int>& original_index, const std::vector<int>& sub_first,
    const std::vector<int>& sub_second) {
  std::vector<int> first(static_cast<size_t>(n), 0), second(static_cast<size_t>(n), 0);
  for_each_bit(k, [&](int u) {
    first[static_cast<size_t>(u)] = 1;
    second[static_cast<size_t>(u)] = static_cast<int>(second_degree[u]);
  });
  for (size_t r = 0; r < original_index.size(); ++r) {
    const int u = original_index[r];
    const bool bumped = meets(first_partition.part_containing(u), k);
    first[static_cast<size_t>(u)] = sub_first[r] + (bumped ? 1 : 0);
    second[static_cast<size_t>(u)] = sub_second[r];
  }
  return {std::move(first), std::move(second)};
}

inline PiPair construct_level(const SetFn& g1, const SetFn& g2, std::vector<TraceLevel>& trace) {
  const int n = g1.ground().size();
  if (n == 0) return {};
  if (n == 1) return {{1}, {1}};

  const TransversalResult t = common_transversal(g1, g2);
  trace.push_back({g1.ground().names_of(t.k), t.case_tag});
  const ReductionResult r1 = reduce(g1, t.k);
  const ReductionResult r2 = reduce(g2, t.k);
  const PiPair sub = construct_level(r1.reduced, r2.reduced, trace);

  PiPair out;
  if (t.case_tag == TransversalCase::kA) {
    std::tie(out.pi1, out.pi2) =
        extend_pi(n, t.k, t.p1, d_function(g2), r1.original_index, sub.pi1, sub.pi2);
  } else {
    std::tie(out.pi2, out.pi1) =
        extend_pi(n, t.k, t.p2, d_function(g1), r1.original_index, sub.pi2, sub.pi1);
  }
  return out;
}

}  // namespace detail

inline PiResult construct_pi(const SetFn& g1, const SetFn& g2, const PiOptions& options = {}) {
  if (!same_ground(g1.ground_ref(), g2.ground_ref())) {
    throw InputError("construct_pi: functions on different ground sets");
  }
  require_valid(g1, "construct_pi(g1)");
  require_valid(g2, "construct_pi(g2)");
  require_capacity(g1, "construct_pi(g1)");
  require_capacity(g2, "construct_pi(g2)");
  PiResult result;
  result.pair = detail::construct_level(g1, g2, result.trace);
  if (options.verify) {
    const ConditionReport check = verify_conditions(g1, g2, result.pair);
    if (!check.ok()) {
      throw InternalError("construct_pi: output violates condition " +
                          check.witnesses.front().kind);
    }
  }
  return result;
}

// pi1 = pi, pi2 = k + 1 - pi for the first supermodular k-coloring pi with
// k = Delta(g1, g2). Satisfies (i) with f = Delta and (ii).
inline PiPair schrijver_pi(const SetFn& g1, const SetFn& g2,
                           const SearchCaps& caps = SearchCaps::from_env()) {
  require_valid(g1, "schrijver_pi(g1)");
  require_valid(g2, "schrijver_pi(g2)");
  require_capacity(g1, "schrijver_pi(g1)");
  require_capacity(g2, "schrijver_pi(g2)");
  const int k = static_cast<int>(delta(g1, g2));
  const auto pi = find_k_coloring(g1, g2, k, caps);
  if (!pi) throw InternalError("schrijver_pi: no supermodular Delta-coloring found");
  PiPair out{*pi, *pi};
  for (int& c : out.pi2) c = k + 1 - c;
  return out;
}

}  // namespace supercolor

#endif  // SUPERCOLOR_PI_HPP_
