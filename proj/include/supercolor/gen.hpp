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

#ifndef SUPERCOLOR_GEN_HPP_
#define SUPERCOLOR_GEN_HPP_

// Seeded generators of intersecting-supermodular, capacity-bounded instances.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "supercolor/bits.hpp"
#include "supercolor/bunch.hpp"
#include "supercolor/core.hpp"
#include "supercolor/encode.hpp"
#include "supercolor/error.hpp"
#include "supercolor/rng.hpp"

namespace supercolor {

enum class Strategy { kLaminar, kClosure, kRankComplement, kBipartite };

inline std::string strategy_name(Strategy s) {
  switch (s) {
    case Strategy::kLaminar: return "laminar";
    case Strategy::kClosure: return "closure";
    case Strategy::kRankComplement: return "rank_complement";
    case Strategy::kBipartite: return "bipartite";
  }
  return "?";
}

inline Strategy parse_strategy(const std::string& name) {
  for (Strategy s : {Strategy::kLaminar, Strategy::kClosure, Strategy::kRankComplement,
                     Strategy::kBipartite}) {
    if (strategy_name(s) == name) return s;
  }
  throw InputError("unknown strategy '" + name + "'");
}

struct GenConfig {
  std::uint64_t seed = 0;
  int n_elements = 6;  // edges for the bipartite strategy
  Strategy strategy = Strategy::kClosure;
  double density = 0.5;   // membership probability for random sets
  int base_sets = 3;      // closure/rank_complement: random sets before closing
  int max_family = 64;    // closure larger than this is resampled
  int max_resamples = 50;
  int repair_passes = 200;
};

// "a".."z", then "u26", "u27", ...
inline std::vector<std::string> default_names(int n) {
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) {
    names.push_back(i < 26 ? std::string(1, static_cast<char>('a' + i)) : "u" + std::to_string(i));
  }
  return names;
}

// Closes a family under union and intersection of intersecting pairs.
// Returns nullopt once the family grows past max_size.
inline std::optional<std::vector<Bits>> close_family(const std::vector<Bits>& base,
                                                     int max_size = 1 << 20) {
  std::set<Bits> family(base.begin(), base.end());
  bool changed = true;
  while (changed) {
    changed = false;
    const std::vector<Bits> snapshot(family.begin(), family.end());
    for (size_t i = 0; i < snapshot.size(); ++i) {
      for (size_t j = i + 1; j < snapshot.size(); ++j) {
        const Bits x = snapshot[i], y = snapshot[j];
        if (!is_intersecting(x, y)) continue;
        changed |= family.insert(x | y).second;
        changed |= family.insert(x & y).second;
      }
    }
    if (static_cast<int>(family.size()) > max_size) return std::nullopt;
  }
  return std::vector<Bits>(family.begin(), family.end());
}

namespace detail {

inline Bits random_nonempty_subset(int n, double density, Rng& rng) {
  Bits x = 0;
  while (x == 0) {
    for (int i = 0; i < n; ++i) {
      if (rng.chance(density)) x |= bit(i);
    }
  }
  return x;
}

inline std::optional<std::vector<Bits>> random_closed_family(const GenConfig& cfg, int n, Rng& rng) {
  const int m = static_cast<int>(rng.uniform(1, std::max(1, cfg.base_sets)));
  std::vector<Bits> base;
  for (int i = 0; i < m; ++i) base.push_back(random_nonempty_subset(n, cfg.density, rng));
  return close_family(base, cfg.max_family);
}

inline void laminar_split(Bits s, double density, Rng& rng, std::vector<Entry>& out) {
  const int size = popcount(s);
  if (rng.chance(density)) out.push_back({s, rng.uniform(1, size)});
  if (size < 2) return;
  const int chunks = static_cast<int>(rng.uniform(2, std::min(3, size)));
  std::vector<Bits> part(static_cast<size_t>(chunks), 0);
  for_each_bit(s, [&](int u) { part[static_cast<size_t>(rng.uniform(0, chunks - 1))] |= bit(u); });
  for (Bits p : part) {
    if (p != 0 && p != s) laminar_split(p, density, rng, out);
  }
}

inline SetFn laminar_fn(const GroundRef& ground, const GenConfig& cfg, Rng& rng) {
  std::vector<Entry> entries;
  if (!ground->empty()) laminar_split(ground->full(), cfg.density, rng, entries);
  return SetFn(ground, std::move(entries));
}

inline SetFn closure_fn(const GroundRef& ground, const GenConfig& cfg, Rng& rng) {
  const int n = ground->size();
  if (n == 0) return SetFn(ground);
  for (int attempt = 0; attempt < cfg.max_resamples; ++attempt) {
    const auto family = random_closed_family(cfg, n, rng);
    if (!family) continue;
    std::vector<Entry> e;
    for (Bits x : *family) e.push_back({x, rng.uniform(1, popcount(x))});

    auto index = [&](Bits x) {
      return static_cast<size_t>(std::lower_bound(family->begin(), family->end(), x) -
                                 family->begin());
    };
    bool settled = false;
    for (int pass = 0; pass < cfg.repair_passes && !settled; ++pass) {
      settled = true;
      for (size_t i = 0; i < e.size(); ++i) {
        for (size_t j = i + 1; j < e.size(); ++j) {
          if (!is_intersecting(e[i].set, e[j].set)) continue;
          Entry& uni = e[index(e[i].set | e[j].set)];
          Entry& cap = e[index(e[i].set & e[j].set)];
          Value deficit = e[i].value + e[j].value - uni.value - cap.value;
          if (deficit <= 0) continue;
          settled = false;
          // Raise the union first, as far as capacity allows.
          const Value raise = std::min<Value>(deficit, popcount(uni.set) - uni.value);
          uni.value += std::max<Value>(raise, 0);
          deficit -= std::max<Value>(raise, 0);
          if (deficit > 0) {
            Entry& low = e[i].value <= e[j].value ? e[i] : e[j];
            low.value -= deficit;
          }
        }
      }
    }
    if (!settled) continue;
    SetFn g(ground, std::move(e));
    if (is_valid(g) && check_capacity(g).ok()) return g;
  }
  throw GenerationError("gen_closure: resampling budget exhausted");
}

inline SetFn rank_complement_fn(const GroundRef& ground, const GenConfig& cfg, Rng& rng) {
  const int n = ground->size();
  if (n == 0) return SetFn(ground);
  const int blocks = static_cast<int>(rng.uniform(1, n));
  std::vector<Bits> q(static_cast<size_t>(blocks), 0);
  for (int u = 0; u < n; ++u) q[static_cast<size_t>(rng.uniform(0, blocks - 1))] |= bit(u);
  std::vector<int> c;
  for (Bits b : q) c.push_back(static_cast<int>(rng.uniform(0, popcount(b))));

  std::optional<std::vector<Bits>> family;
  for (int attempt = 0; attempt < cfg.max_resamples && !family; ++attempt) {
    family = random_closed_family(cfg, n, rng);
  }
  if (!family) throw GenerationError("gen_rank_complement: resampling budget exhausted");
  std::vector<Entry> e;
  for (Bits x : *family) {
    Value rank = 0;
    for (size_t j = 0; j < q.size(); ++j) rank += std::min(popcount(x & q[j]), c[j]);
    e.push_back({x, popcount(x) - rank});
  }
  return SetFn(ground, std::move(e));
}

inline Multigraph random_multigraph(int edges, Rng& rng, int max_side = 3) {
  const int s = static_cast<int>(rng.uniform(1, max_side));
  const int t = static_cast<int>(rng.uniform(1, max_side));
  std::vector<std::string> sn, tn;
  for (int i = 1; i <= s; ++i) sn.push_back("s" + std::to_string(i));
  for (int i = 1; i <= t; ++i) tn.push_back("t" + std::to_string(i));
  std::vector<std::pair<std::string, std::string>> list;
  for (int i = 0; i < edges; ++i) {
    list.emplace_back(sn[static_cast<size_t>(rng.uniform(0, s - 1))],
                      tn[static_cast<size_t>(rng.uniform(0, t - 1))]);
  }
  return make_multigraph(std::move(sn), std::move(tn), list);
}

}  // namespace detail

// Random laminar family with g(X) uniform in [1, |X|].
inline SetFn gen_laminar(const GenConfig& cfg) {
  Rng rng(cfg.seed);
  return detail::laminar_fn(make_ground(default_names(cfg.n_elements)), cfg, rng);
}

// Random sets closed under intersecting unions/intersections, values repaired
// until supermodular.
inline SetFn gen_closure(const GenConfig& cfg) {
  Rng rng(cfg.seed);
  return detail::closure_fn(make_ground(default_names(cfg.n_elements)), cfg, rng);
}

// g(X) = |X| - r(X) for the rank r of a random partition matroid.
inline SetFn gen_rank_complement(const GenConfig& cfg) {
  Rng rng(cfg.seed);
  return detail::rank_complement_fn(make_ground(default_names(cfg.n_elements)), cfg, rng);
}

// A full instance (g1, g2). For the bipartite strategy the ground set is the
// edge set of a random multigraph with n_elements edges.
inline Instance generate(const GenConfig& cfg) {
  if (cfg.n_elements < 1 || cfg.n_elements > kMaxElements) {
    throw InputError("generate: n must be in 1..64");
  }
  Rng rng(cfg.seed);
  if (cfg.strategy == Strategy::kBipartite) {
    return encode_bipartite(detail::random_multigraph(cfg.n_elements, rng));
  }
  GroundRef ground = make_ground(default_names(cfg.n_elements));
  auto one = [&]() {
    switch (cfg.strategy) {
      case Strategy::kLaminar: return detail::laminar_fn(ground, cfg, rng);
      case Strategy::kClosure: return detail::closure_fn(ground, cfg, rng);
      default: return detail::rank_complement_fn(ground, cfg, rng);
    }
  };
  SetFn g1 = one();
  SetFn g2 = one();
  return Instance{std::move(g1), std::move(g2)};
}

// Config for the index-th instance of a mixed batch: 40% closure,
// 30% rank_complement, 20% laminar, 10% bipartite; n uniform in [1, max_n].
inline GenConfig mixed_config(std::uint64_t seed, std::uint64_t index, int max_n) {
  Rng rng(mix_seed(seed, index));
  GenConfig cfg;
  const auto roll = rng.uniform(0, 99);
  cfg.strategy = roll < 40   ? Strategy::kClosure
                 : roll < 70 ? Strategy::kRankComplement
                 : roll < 90 ? Strategy::kLaminar
                             : Strategy::kBipartite;
  cfg.n_elements = static_cast<int>(rng.uniform(1, max_n));
  cfg.density = 0.3 + 0.4 * rng.unit();
  cfg.seed = rng.next();
  return cfg;
}

// Picks one uniformly random element from each part with probability p.
inline Bits random_partial_transversal(const Partition& p, Rng& rng, double prob = 0.5) {
  Bits k = 0;
  for (Bits part : p.parts) {
    if (!rng.chance(prob)) continue;
    const int pick = static_cast<int>(rng.uniform(0, popcount(part) - 1));
    int seen = 0;
    for_each_bit(part, [&](int u) {
      if (seen++ == pick) k |= bit(u);
    });
  }
  return k;
}

}  // namespace supercolor

#endif  // SUPERCOLOR_GEN_HPP_
