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

#ifndef SUPERCOLOR_ORACLE_HPP_
#define SUPERCOLOR_ORACLE_HPP_

// Exhaustive ground truth: supermodular k-colorings, list supermodular
// colorings, the minimum number of colors, and a randomized check of the
// list-length bound max{d[g1](u), d[g2](u)}.

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "supercolor/bits.hpp"
#include "supercolor/bunch.hpp"
#include "supercolor/core.hpp"
#include "supercolor/error.hpp"
#include "supercolor/rng.hpp"

namespace supercolor {

using Coloring = std::vector<int>;  // element index -> color id

struct ListAssignment {
  std::vector<std::vector<int>> lists;  // element index -> color ids
};

struct SearchCaps {
  int k_search = 10;
  long long list_budget = 10'000'000;

  // Parses "k_search=10,list_budget=10000000"; absent keys keep defaults.
  static SearchCaps parse(const std::string& spec) {
    SearchCaps caps;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) {
      if (item.empty()) continue;
      const auto eq = item.find('=');
      if (eq == std::string::npos) throw InputError("bad caps item '" + item + "'");
      const std::string key = item.substr(0, eq);
      long long value = 0;
      try {
        value = std::stoll(item.substr(eq + 1));
      } catch (const std::exception&) {
        throw InputError("bad caps value in '" + item + "'");
      }
      if (value < 1) throw InputError("caps must be positive: '" + item + "'");
      if (key == "k_search") {
        caps.k_search = static_cast<int>(std::min<long long>(value, kMaxElements));
      } else if (key == "list_budget") {
        caps.list_budget = value;
      } else {
        throw InputError("unknown caps key '" + key + "'");
      }
    }
    return caps;
  }

  static SearchCaps from_env() {
    const char* env = std::getenv("SUPERCOLOR_CAPS");
    return env ? parse(env) : SearchCaps{};
  }
};

// True iff |{pi(u) : u in X}| >= g(X) for every X in F.
inline Report dominates(const std::vector<int>& pi, const SetFn& g) {
  if (static_cast<int>(pi.size()) != g.ground().size()) {
    throw InputError("dominates: coloring is not total on the ground set");
  }
  Report report;
  for (const Entry& e : g.entries()) {
    std::vector<int> seen;
    for_each_bit(e.set, [&](int u) { seen.push_back(pi[static_cast<size_t>(u)]); });
    std::sort(seen.begin(), seen.end());
    const auto distinct = std::unique(seen.begin(), seen.end()) - seen.begin();
    if (distinct < e.value) {
      report.add({"domination", {e.set}, {static_cast<Value>(distinct), e.value}, ""});
    }
  }
  return report;
}

namespace detail {

// Depth-first search over colorings in canonical order (elements by index,
// colors ascending). Colors are dense indices 0..63 here; callers translate.
class DominationSearch {
 public:
  DominationSearch(const SetFn& g1, const SetFn& g2, std::vector<Bits> list_masks,
                   bool interchangeable)
      : n_(g1.ground().size()),
        list_masks_(std::move(list_masks)),
        interchangeable_(interchangeable),
        color_(static_cast<size_t>(n_), -1),
        by_element_(static_cast<size_t>(n_)) {
    for (const auto* g : {&g1, &g2}) {
      for (const Entry& e : g->entries()) {
        if (e.value <= 0) continue;
        const int id = static_cast<int>(constraints_.size());
        constraints_.push_back(e);
        for_each_bit(e.set, [&](int u) { by_element_[static_cast<size_t>(u)].push_back(id); });
      }
    }
  }

  std::optional<std::vector<int>> run() {
    for (const Entry& c : constraints_) {
      Bits avail = 0;
      for_each_bit(c.set, [&](int u) { avail |= list_masks_[static_cast<size_t>(u)]; });
      if (std::min(popcount(c.set), popcount(avail)) < c.value) return std::nullopt;
    }
    if (!extend(0, -1)) return std::nullopt;
    return color_;
  }

 private:
  bool feasible(int u) const {
    const Bits assigned = low_bits(u + 1);
    for (int id : by_element_[static_cast<size_t>(u)]) {
      const Entry& c = constraints_[static_cast<size_t>(id)];
      Bits used = 0;
      for_each_bit(c.set & assigned, [&](int v) { used |= bit(color_[static_cast<size_t>(v)]); });
      const Bits rest = c.set & ~assigned;
      Bits avail = 0;
      for_each_bit(rest, [&](int v) { avail |= list_masks_[static_cast<size_t>(v)]; });
      avail &= ~used;
      const int bound = popcount(used) + std::min(popcount(rest), popcount(avail));
      if (bound < c.value) return false;
    }
    return true;
  }

  bool extend(int u, int max_used) {
    if (u == n_) return true;
    Bits options = list_masks_[static_cast<size_t>(u)];
    if (interchangeable_) options &= low_bits(max_used + 2);
    bool done = false;
    for_each_bit(options, [&](int c) {
      if (done) return;
      color_[static_cast<size_t>(u)] = c;
      if (feasible(u) && extend(u + 1, std::max(max_used, c))) done = true;
    });
    if (!done) color_[static_cast<size_t>(u)] = -1;
    return done;
  }

  int n_;
  std::vector<Bits> list_masks_;
  bool interchangeable_;
  std::vector<int> color_;
  std::vector<Entry> constraints_;
  std::vector<std::vector<int>> by_element_;
};

inline void require_same_ground(const SetFn& g1, const SetFn& g2, const char* what) {
  if (!same_ground(g1.ground_ref(), g2.ground_ref())) {
    throw InputError(std::string(what) + ": functions on different ground sets");
  }
}

}  // namespace detail

// First coloring U -> [k] (canonical order) dominating g1 and g2, if any.
// Colors are interchangeable, so the search only tries colors up to one more
// than the largest used so far; the lexicographically first solution always
// has that shape.
inline std::optional<Coloring> find_k_coloring(const SetFn& g1, const SetFn& g2, int k,
                                               const SearchCaps& caps = SearchCaps::from_env()) {
  detail::require_same_ground(g1, g2, "find_k_coloring");
  if (k < 1) throw InputError("find_k_coloring: k must be at least 1");
  const int n = g1.ground().size();
  if (n > caps.k_search) {
    throw ResourceError("find_k_coloring: " + std::to_string(n) +
                        " elements exceed the search cap of " + std::to_string(caps.k_search));
  }
  const int colors = std::min({k, std::max(n, 1), kMaxElements});
  detail::DominationSearch search(g1, g2, std::vector<Bits>(static_cast<size_t>(n), low_bits(colors)),
                                  /*interchangeable=*/true);
  auto found = search.run();
  if (!found) return std::nullopt;
  for (int& c : *found) ++c;
  return found;
}

inline int min_k(const SetFn& g1, const SetFn& g2,
                 const SearchCaps& caps = SearchCaps::from_env()) {
  detail::require_same_ground(g1, g2, "min_k");
  require_capacity(g1, "min_k");
  require_capacity(g2, "min_k");
  const int n = g1.ground().size();
  for (int k = 1; k <= std::max(n, 1); ++k) {
    if (find_k_coloring(g1, g2, k, caps)) return k;
  }
  throw InternalError("min_k: no coloring with |U| colors under the capacity condition");
}

inline std::optional<Coloring> find_list_coloring(const SetFn& g1, const SetFn& g2,
                                                  const ListAssignment& lists,
                                                  const SearchCaps& caps = SearchCaps::from_env()) {
  detail::require_same_ground(g1, g2, "find_list_coloring");
  const int n = g1.ground().size();
  if (static_cast<int>(lists.lists.size()) != n) {
    throw InputError("find_list_coloring: need one list per element");
  }
  std::vector<int> palette;
  long long product = 1;
  for (const auto& l : lists.lists) {
    if (l.empty()) throw InputError("find_list_coloring: empty color list");
    palette.insert(palette.end(), l.begin(), l.end());
    product = product > caps.list_budget / static_cast<long long>(l.size())
                  ? caps.list_budget + 1
                  : product * static_cast<long long>(l.size());
  }
  if (product > caps.list_budget) {
    throw ResourceError("find_list_coloring: search space exceeds the list budget of " +
                        std::to_string(caps.list_budget));
  }
  std::sort(palette.begin(), palette.end());
  palette.erase(std::unique(palette.begin(), palette.end()), palette.end());
  if (palette.size() > static_cast<size_t>(kMaxElements)) {
    throw ResourceError("find_list_coloring: more than 64 distinct colors");
  }
  std::vector<Bits> masks;
  for (const auto& l : lists.lists) {
    Bits m = 0;
    for (int c : l) {
      m |= bit(static_cast<int>(std::lower_bound(palette.begin(), palette.end(), c) - palette.begin()));
    }
    masks.push_back(m);
  }
  detail::DominationSearch search(g1, g2, std::move(masks), /*interchangeable=*/false);
  auto found = search.run();
  if (!found) return std::nullopt;
  for (int& c : *found) c = palette[static_cast<size_t>(c)];
  return found;
}

// Lists of exactly f(u) colors drawn without replacement from [sigma].
inline ListAssignment random_lists(const std::vector<Value>& f, int sigma, Rng& rng) {
  ListAssignment l;
  for (Value len : f) {
    auto pick = rng.sample(sigma, static_cast<int>(len));
    for (int& c : pick) ++c;
    std::sort(pick.begin(), pick.end());
    l.lists.push_back(std::move(pick));
  }
  return l;
}

inline std::string format_lists(const GroundSet& ground, const ListAssignment& l) {
  std::string out = "{";
  for (int u = 0; u < ground.size(); ++u) {
    if (u > 0) out += ",";
    out += "\"" + ground.name(u) + "\":[";
    const auto& list = l.lists[static_cast<size_t>(u)];
    for (size_t i = 0; i < list.size(); ++i) {
      if (i > 0) out += ",";
      out += std::to_string(list[i]);
    }
    out += "]";
  }
  return out + "}";
}

// Runs `trials` random list assignments with |L(u)| = max{d[g1](u), d[g2](u)}
// and reports every assignment that admits no list supermodular coloring.
// sigma_size <= 0 selects the default pool of Delta + 2 colors.
inline Report verify_main_theorem(const SetFn& g1, const SetFn& g2, int trials, int sigma_size,
                                  std::uint64_t seed,
                                  const SearchCaps& caps = SearchCaps::from_env()) {
  detail::require_same_ground(g1, g2, "verify_main_theorem");
  require_valid(g1, "verify_main_theorem");
  require_valid(g2, "verify_main_theorem");
  require_capacity(g1, "verify_main_theorem");
  require_capacity(g2, "verify_main_theorem");
  const std::vector<Value> f = lemma_bound(g1, g2);
  const int sigma = sigma_size > 0 ? sigma_size : static_cast<int>(delta(g1, g2)) + 2;
  const Value longest = f.empty() ? 1 : *std::max_element(f.begin(), f.end());
  if (sigma < longest) {
    throw InputError("verify_main_theorem: color pool of " + std::to_string(sigma) +
                     " is smaller than the longest list (" + std::to_string(longest) + ")");
  }
  Rng rng(seed);
  Report report;
  for (int t = 0; t < trials; ++t) {
    const ListAssignment lists = random_lists(f, sigma, rng);
    if (!find_list_coloring(g1, g2, lists, caps)) {
      report.add({"no_list_coloring", {}, {t}, format_lists(g1.ground(), lists)});
    }
  }
  return report;
}

}  // namespace supercolor

#endif  // SUPERCOLOR_ORACLE_HPP_
