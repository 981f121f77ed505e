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

#ifndef SUPERCOLOR_MATCHING_HPP_
#define SUPERCOLOR_MATCHING_HPP_

// Closed matchings in bipartite graphs and the common partial transversal
// of two bunch partitions built from them.

#include <string>
#include <vector>

#include "supercolor/bits.hpp"
#include "supercolor/bunch.hpp"
#include "supercolor/core.hpp"
#include "supercolor/error.hpp"

namespace supercolor {

struct BipartiteEdge {
  int s;
  int t;
  int tag;  // originating element when built from two partitions
};

// Vertices are 0..s_count-1 and 0..t_count-1; parallel edges are allowed.
struct BipartiteGraph {
  int s_count = 0;
  int t_count = 0;
  std::vector<BipartiteEdge> edges;
};

struct Matching {
  std::vector<int> edges;  // indices into BipartiteGraph::edges
};

struct ClosedMatching {
  Matching matching;
  Bits tight = 0;         // V: minimal nonempty S-set with |N(V)| <= |V|
  Bits neighborhood = 0;  // N(V), equal to the matched T-vertices
};

namespace detail {

inline std::vector<Bits> s_adjacency(const BipartiteGraph& g) {
  std::vector<Bits> adj(static_cast<size_t>(g.s_count), 0);
  for (const auto& e : g.edges) adj[static_cast<size_t>(e.s)] |= bit(e.t);
  return adj;
}

inline void validate_graph(const BipartiteGraph& g) {
  if (g.s_count < 0 || g.t_count < 0 || g.s_count > kMaxElements ||
      g.t_count > kMaxElements) {
    throw InputError("bipartite graph sides must have 0..64 vertices");
  }
  for (const auto& e : g.edges) {
    if (e.s < 0 || e.s >= g.s_count || e.t < 0 || e.t >= g.t_count) {
      throw InputError("edge references a missing vertex");
    }
  }
}

}  // namespace detail

inline Bits neighbors(const BipartiteGraph& g, Bits v) {
  Bits out = 0;
  for (const auto& e : g.edges) {
    if ((v >> e.s) & 1) out |= bit(e.t);
  }
  return out;
}

inline bool is_matching(const BipartiteGraph& g, const Matching& m) {
  Bits used_s = 0, used_t = 0;
  for (int i : m.edges) {
    if (i < 0 || i >= static_cast<int>(g.edges.size())) return false;
    const auto& e = g.edges[static_cast<size_t>(i)];
    if (((used_s >> e.s) & 1) || ((used_t >> e.t) & 1)) return false;
    used_s |= bit(e.s);
    used_t |= bit(e.t);
  }
  return true;
}

// Every edge at a matched S-vertex ends at a matched T-vertex.
inline bool is_closed(const BipartiteGraph& g, const Matching& m) {
  Bits ms = 0, mt = 0;
  for (int i : m.edges) {
    ms |= bit(g.edges[static_cast<size_t>(i)].s);
    mt |= bit(g.edges[static_cast<size_t>(i)].t);
  }
  for (const auto& e : g.edges) {
    if (((ms >> e.s) & 1) && !((mt >> e.t) & 1)) return false;
  }
  return true;
}

// Requires |S| >= |T| >= 0, |S| >= 1 and no isolated S-vertex. Scans S-subsets
// by (size, integer) for the first V with |N(V)| <= |V|, then matches V
// perfectly onto N(V) with augmenting paths.
inline ClosedMatching closed_matching(const BipartiteGraph& g) {
  detail::validate_graph(g);
  if (g.s_count < 1) throw InputError("closed_matching: S is empty");
  if (g.s_count < g.t_count) throw InputError("closed_matching: |S| < |T|");
  const std::vector<Bits> adj = detail::s_adjacency(g);
  for (int s = 0; s < g.s_count; ++s) {
    if (adj[static_cast<size_t>(s)] == 0) {
      throw InputError("closed_matching: S-vertex " + std::to_string(s) + " is isolated");
    }
  }

  auto gamma = [&](Bits v) {
    Bits out = 0;
    for_each_bit(v, [&](int s) { out |= adj[static_cast<size_t>(s)]; });
    return out;
  };

  ClosedMatching result;
  bool found = false;
  for (int k = 1; k <= g.s_count && !found; ++k) {
    found = for_each_subset_of_size(g.s_count, k, [&](Bits v) {
      if (popcount(gamma(v)) > popcount(v)) return false;
      result.tight = v;
      return true;
    });
  }
  if (!found) throw InternalError("closed_matching: no tight set although |N(S)| <= |S|");
  result.neighborhood = gamma(result.tight);

  // Kuhn's augmenting paths restricted to edges leaving V.
  std::vector<std::vector<int>> out(static_cast<size_t>(g.s_count));
  for (size_t i = 0; i < g.edges.size(); ++i) {
    const auto& e = g.edges[i];
    if ((result.tight >> e.s) & 1) out[static_cast<size_t>(e.s)].push_back(static_cast<int>(i));
  }
  std::vector<int> match_t(static_cast<size_t>(g.t_count), -1);  // t -> edge index
  std::vector<char> seen;
  auto augment = [&](auto&& self, int s) -> bool {
    for (int ei : out[static_cast<size_t>(s)]) {
      const int t = g.edges[static_cast<size_t>(ei)].t;
      if (seen[static_cast<size_t>(t)]) continue;
      seen[static_cast<size_t>(t)] = 1;
      const int prev = match_t[static_cast<size_t>(t)];
      if (prev < 0 || self(self, g.edges[static_cast<size_t>(prev)].s)) {
        match_t[static_cast<size_t>(t)] = ei;
        return true;
      }
    }
    return false;
  };
  bool complete = true;
  for_each_bit(result.tight, [&](int s) {
    seen.assign(static_cast<size_t>(g.t_count), 0);
    if (!augment(augment, s)) complete = false;
  });
  if (!complete) throw InternalError("closed_matching: tight set violates Hall's condition");

  for (int t = 0; t < g.t_count; ++t) {
    if (match_t[static_cast<size_t>(t)] >= 0) result.matching.edges.push_back(match_t[static_cast<size_t>(t)]);
  }
  std::sort(result.matching.edges.begin(), result.matching.edges.end());
  if (!is_closed(g, result.matching)) {
    throw InternalError("closed_matching: closure property fails");
  }
  return result;
}

enum class TransversalCase { kA, kB };

inline char case_letter(TransversalCase c) { return c == TransversalCase::kA ? 'a' : 'b'; }

struct TransversalResult {
  Bits k = 0;
  TransversalCase case_tag = TransversalCase::kA;
  Partition p1;  // P[g1]
  Partition p2;  // P[g2]
};

// Every u whose `from`-part meets K also has its `to`-part meeting K.
inline bool transversal_implication(const Partition& from, const Partition& to, Bits k) {
  for (size_t u = 0; u < from.part_of.size(); ++u) {
    const int ui = static_cast<int>(u);
    if (meets(from.part_containing(ui), k) && !meets(to.part_containing(ui), k)) {
      return false;
    }
  }
  return true;
}

// Parts of P[g1] and P[g2] become the two sides, each element u one edge.
// Case a runs the closed matching with S = P[g1], case b with S = P[g2].
inline TransversalResult common_transversal(const SetFn& g1, const SetFn& g2) {
  if (!same_ground(g1.ground_ref(), g2.ground_ref())) {
    throw InputError("common_transversal: functions on different ground sets");
  }
  if (g1.ground().empty()) throw PreconditionError("common_transversal: empty ground set");
  TransversalResult r;
  r.p1 = bunch_partition(g1);
  r.p2 = bunch_partition(g2);
  r.case_tag = r.p1.size() >= r.p2.size() ? TransversalCase::kA : TransversalCase::kB;
  const Partition& s_side = r.case_tag == TransversalCase::kA ? r.p1 : r.p2;
  const Partition& t_side = r.case_tag == TransversalCase::kA ? r.p2 : r.p1;

  BipartiteGraph graph{s_side.size(), t_side.size(), {}};
  for (int u = 0; u < g1.ground().size(); ++u) {
    graph.edges.push_back({s_side.part_of[static_cast<size_t>(u)],
                           t_side.part_of[static_cast<size_t>(u)], u});
  }
  const ClosedMatching cm = closed_matching(graph);
  for (int i : cm.matching.edges) r.k |= bit(graph.edges[static_cast<size_t>(i)].tag);

  if (r.k == 0 || !is_partial_transversal(r.p1, r.k) ||
      !is_partial_transversal(r.p2, r.k) ||
      !transversal_implication(s_side, t_side, r.k)) {
    throw InternalError("common_transversal: result violates its postcondition");
  }
  return r;
}

}  // namespace supercolor

#endif  // SUPERCOLOR_MATCHING_HPP_
