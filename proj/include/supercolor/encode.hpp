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

#ifndef SUPERCOLOR_ENCODE_HPP_
#define SUPERCOLOR_ENCODE_HPP_

// Bipartite multigraphs as pairs of set functions on the edge set: g1 puts
// |delta(s)| on each S-star and g2 puts |delta(t)| on each T-star, so proper
// edge colorings are exactly the colorings dominating both.

#include <map>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "supercolor/bunch.hpp"
#include "supercolor/core.hpp"
#include "supercolor/error.hpp"

namespace supercolor {

struct GraphEdge {
  int s;
  int t;
  std::string id;
};

struct Multigraph {
  std::vector<std::string> s;
  std::vector<std::string> t;
  std::vector<GraphEdge> edges;

  int degree_s(int v) const {
    int d = 0;
    for (const auto& e : edges) d += e.s == v;
    return d;
  }
  int degree_t(int v) const {
    int d = 0;
    for (const auto& e : edges) d += e.t == v;
    return d;
  }
};

// Edge ids are "s~t~i" for the i-th (0-based) parallel copy of edge st.
inline Multigraph make_multigraph(std::vector<std::string> s, std::vector<std::string> t,
                                  const std::vector<std::pair<std::string, std::string>>& edges) {
  auto index = [](const std::vector<std::string>& side, const char* label) {
    std::map<std::string, int> idx;
    for (size_t i = 0; i < side.size(); ++i) {
      if (side[i].empty()) throw InputError(std::string("empty ") + label + " vertex name");
      if (!idx.emplace(side[i], static_cast<int>(i)).second) {
        throw InputError(std::string("duplicate ") + label + " vertex '" + side[i] + "'");
      }
    }
    return idx;
  };
  const auto s_idx = index(s, "S");
  const auto t_idx = index(t, "T");
  Multigraph g{std::move(s), std::move(t), {}};
  std::map<std::pair<int, int>, int> copies;
  for (const auto& [a, b] : edges) {
    auto si = s_idx.find(a);
    auto ti = t_idx.find(b);
    if (si == s_idx.end()) throw InputError("edge endpoint '" + a + "' is not in S");
    if (ti == t_idx.end()) throw InputError("edge endpoint '" + b + "' is not in T");
    const int copy = copies[{si->second, ti->second}]++;
    g.edges.push_back({si->second, ti->second, a + "~" + b + "~" + std::to_string(copy)});
  }
  return g;
}

inline Instance encode_bipartite(const Multigraph& g) {
  if (g.edges.empty()) throw InputError("encode_bipartite: graph has no edges");
  if (g.edges.size() > static_cast<size_t>(kMaxElements)) {
    throw InputError("encode_bipartite: more than 64 edges");
  }
  std::vector<std::string> ids;
  for (const auto& e : g.edges) ids.push_back(e.id);
  GroundRef ground = make_ground(std::move(ids));

  std::vector<Bits> s_star(g.s.size(), 0), t_star(g.t.size(), 0);
  for (size_t i = 0; i < g.edges.size(); ++i) {
    s_star[static_cast<size_t>(g.edges[i].s)] |= bit(static_cast<int>(i));
    t_star[static_cast<size_t>(g.edges[i].t)] |= bit(static_cast<int>(i));
  }
  auto stars = [](const std::vector<Bits>& star) {
    std::vector<Entry> entries;
    for (Bits x : star) {
      if (x != 0) entries.push_back({x, popcount(x)});  // isolated vertices dropped
    }
    return entries;
  };
  return Instance{SetFn(ground, stars(s_star)), SetFn(ground, stars(t_star))};
}

inline Report check_degree_identity(const Multigraph& g) {
  const Instance inst = encode_bipartite(g);
  const DegreeMap d1 = d_function(inst.g1), d2 = d_function(inst.g2);
  Report report;
  for (size_t i = 0; i < g.edges.size(); ++i) {
    const int e = static_cast<int>(i);
    const Value encoded = std::max(d1[e], d2[e]);
    const Value graph = std::max(g.degree_s(g.edges[i].s), g.degree_t(g.edges[i].t));
    if (encoded != graph) report.add({"degree_identity", {bit(e)}, {encoded, graph}, ""});
  }
  return report;
}

// True iff edges sharing an endpoint get distinct colors.
inline bool coloring_is_proper(const Multigraph& g, const std::vector<int>& phi) {
  if (phi.size() != g.edges.size()) {
    throw InputError("coloring_is_proper: coloring is not total on the edges");
  }
  for (size_t i = 0; i < g.edges.size(); ++i) {
    for (size_t j = i + 1; j < g.edges.size(); ++j) {
      const bool adjacent = g.edges[i].s == g.edges[j].s || g.edges[i].t == g.edges[j].t;
      if (adjacent && phi[i] == phi[j]) return false;
    }
  }
  return true;
}

}  // namespace supercolor

#endif  // SUPERCOLOR_ENCODE_HPP_
