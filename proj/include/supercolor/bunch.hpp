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

#ifndef SUPERCOLOR_BUNCH_HPP_
#define SUPERCOLOR_BUNCH_HPP_

// Effective set families E[g], bunch partitions P[g], the degree bound d[g],
// partial transversals, and reduction of g by a set K.

#include <map>
#include <string>
#include <vector>

#include "supercolor/bits.hpp"
#include "supercolor/core.hpp"
#include "supercolor/error.hpp"

namespace supercolor {

using SetFamily = std::vector<Bits>;

struct Partition {
  std::vector<Bits> parts;    // sorted by set-as-integer
  std::vector<int> part_of;   // element index -> index into parts

  Bits part_containing(int u) const {
    return parts[static_cast<size_t>(part_of[static_cast<size_t>(u)])];
  }
  int size() const { return static_cast<int>(parts.size()); }
};

struct DegreeMap {
  std::vector<Value> values;  // every value >= 1

  Value operator[](int u) const { return values[static_cast<size_t>(u)]; }
};

namespace detail {

// E[g] without re-validating g.
inline SetFamily effective_family_unchecked(const SetFn& g) {
  SetFamily out;
  const auto& e = g.entries();
  for (const Entry& x : e) {
    if (x.value < 2) continue;
    bool dominated = false;
    for (const Entry& y : e) {
      if (is_proper_subset(y.set, x.set) && y.value >= x.value) {
        dominated = true;
        break;
      }
    }
    if (!dominated) out.push_back(x.set);
  }
  return out;
}

inline Partition partition_from_effective(const GroundSet& ground,
                                          const SetFamily& effective) {
  Partition p;
  Bits covered = 0;
  for (Bits x : effective) {
    bool maximal = true;
    for (Bits y : effective) {
      if (is_proper_subset(x, y)) {
        maximal = false;
        break;
      }
    }
    if (!maximal || x == 0) continue;
    if (meets(covered, x)) {
      throw InternalError("maximal effective sets overlap on " +
                          ground.format(covered & x));
    }
    covered |= x;
    p.parts.push_back(x);
  }
  for_each_bit(ground.full() & ~covered, [&](int u) { p.parts.push_back(bit(u)); });
  std::sort(p.parts.begin(), p.parts.end());
  p.part_of.assign(static_cast<size_t>(ground.size()), -1);
  for (size_t j = 0; j < p.parts.size(); ++j) {
    for_each_bit(p.parts[j], [&](int u) { p.part_of[static_cast<size_t>(u)] = static_cast<int>(j); });
  }
  return p;
}

inline DegreeMap degrees_from_effective(const SetFn& g, const SetFamily& effective) {
  DegreeMap d;
  d.values.assign(static_cast<size_t>(g.ground().size()), 1);
  for (Bits x : effective) {
    const Value v = g.value(x);
    for_each_bit(x, [&](int u) {
      d.values[static_cast<size_t>(u)] = std::max(d.values[static_cast<size_t>(u)], v);
    });
  }
  return d;
}

}  // namespace detail

inline SetFamily effective_family(const SetFn& g) {
  require_valid(g, "effective_family");
  return detail::effective_family_unchecked(g);
}

inline Partition bunch_partition(const SetFn& g) {
  require_valid(g, "bunch_partition");
  return detail::partition_from_effective(g.ground(),
                                          detail::effective_family_unchecked(g));
}

inline DegreeMap d_function(const SetFn& g) {
  require_valid(g, "d_function");
  return detail::degrees_from_effective(g, detail::effective_family_unchecked(g));
}

// E[g], P[g] and d[g] computed together.
struct BunchAnalysis {
  SetFamily effective;
  Partition partition;
  DegreeMap degree;
};

inline BunchAnalysis analyze(const SetFn& g) {
  require_valid(g, "analyze");
  BunchAnalysis a;
  a.effective = detail::effective_family_unchecked(g);
  a.partition = detail::partition_from_effective(g.ground(), a.effective);
  a.degree = detail::degrees_from_effective(g, a.effective);
  return a;
}

inline bool is_partial_transversal(const Partition& p, Bits k) {
  for (Bits part : p.parts) {
    if (popcount(part & k) > 1) return false;
  }
  return true;
}

// g^_K(Z): g(Z) - 1 if Z meets K, else g(Z).
inline Value hat_value(const SetFn& g, Bits k, Bits z) {
  return g.value(z) - (meets(z, k) ? 1 : 0);
}

struct Attainer {
  Bits reduced_set;  // member of the reduced family, in reduced coordinates
  Bits source;       // Z in the original family with Z \ K = reduced_set
};

struct ReductionResult {
  SetFn reduced;                   // g_K on the ground set U \ K
  std::vector<Attainer> attainers; // one per reduced set, canonical order
  std::vector<int> original_index; // reduced element index -> index in U
  Bits removed = 0;                // K

  // Maps a reduced-coordinate set back to coordinates of U.
  Bits lift(Bits x) const {
    Bits out = 0;
    for_each_bit(x, [&](int i) { out |= bit(original_index[static_cast<size_t>(i)]); });
    return out;
  }
};

// g_K(X) = max{ g^_K(Z) : Z in F, Z \ K = X }. K need not be a transversal.
inline ReductionResult reduce(const SetFn& g, Bits k) {
  const GroundSet& ground = g.ground();
  if (!is_subset(k, ground.full())) {
    throw InputError("reduce: K has elements outside the ground set");
  }
  require_valid(g, "reduce");
  const Bits keep = ground.full() & ~k;

  // Entries are visited in increasing Z, so a strict comparison keeps the
  // smallest attainer on ties.
  std::map<Bits, std::pair<Value, Bits>> best;
  for (const Entry& z : g.entries()) {
    const Bits x = z.set & keep;
    const Value v = z.value - (meets(z.set, k) ? 1 : 0);
    auto [it, inserted] = best.try_emplace(x, v, z.set);
    if (!inserted && v > it->second.first) it->second = {v, z.set};
  }

  ReductionResult r{SetFn(std::make_shared<const GroundSet>(ground.restrict(keep))),
                    {}, {}, k};
  for_each_bit(keep, [&](int i) { r.original_index.push_back(i); });
  std::vector<Entry> entries;
  for (const auto& [x, vz] : best) {
    const Bits cx = compress(x, keep);
    entries.push_back({cx, vz.first});
    r.attainers.push_back({cx, vz.second});
  }
  std::sort(r.attainers.begin(), r.attainers.end(),
            [](const Attainer& a, const Attainer& b) { return a.reduced_set < b.reduced_set; });
  r.reduced = SetFn(r.reduced.ground_ref(), std::move(entries));

  if (!is_valid(r.reduced)) {
    throw InternalError("reduction by " + ground.format(k) +
                        " is not intersecting-supermodular");
  }
  return r;
}

// f(u) = max{d[g1](u), d[g2](u)}: the per-element list length that suffices.
inline std::vector<Value> lemma_bound(const SetFn& g1, const SetFn& g2) {
  const DegreeMap d1 = d_function(g1), d2 = d_function(g2);
  std::vector<Value> f(d1.values.size());
  for (size_t u = 0; u < f.size(); ++u) f[u] = std::max(d1.values[u], d2.values[u]);
  return f;
}

// max{1, max{g_i(X) : u in X in F_i}}: the weaker bound that ignores E[g].
inline std::vector<Value> corollary_bound(const SetFn& g1, const SetFn& g2) {
  std::vector<Value> f(static_cast<size_t>(g1.ground().size()), 1);
  for (const auto* g : {&g1, &g2}) {
    for (const Entry& e : g->entries()) {
      for_each_bit(e.set, [&](int u) {
        f[static_cast<size_t>(u)] = std::max(f[static_cast<size_t>(u)], e.value);
      });
    }
  }
  return f;
}

struct CoverWitness {
  Bits witness;  // X' in E[g], X' subset of X, g(X') >= g(X)
  Bits part;     // P in P[g] and E[g] with X' subset of P
};

inline CoverWitness cover_witness(const SetFn& g, Bits x) {
  const auto gx = g.find(x);
  if (!gx) throw PreconditionError("cover_witness: set is not in the family");
  if (*gx < 2) throw PreconditionError("cover_witness: g(X) < 2");
  const BunchAnalysis a = analyze(g);

  Bits witness = x;
  if (std::find(a.effective.begin(), a.effective.end(), x) == a.effective.end()) {
    // Smallest-integer maximizer inside X; it is inclusion-minimal because
    // a proper subset always has a smaller integer encoding.
    Value top = *gx;
    for (const Entry& e : g.entries()) {
      if (is_subset(e.set, x)) top = std::max(top, e.value);
    }
    for (const Entry& e : g.entries()) {
      if (is_subset(e.set, x) && e.value == top) {
        witness = e.set;
        break;
      }
    }
  }
  if (std::find(a.effective.begin(), a.effective.end(), witness) == a.effective.end()) {
    throw InternalError("cover_witness: minimal maximizer is not effective");
  }
  if (witness == 0) {
    throw PreconditionError("cover_witness: the empty set carries g >= 2");
  }
  const int u = std::countr_zero(witness);
  const Bits part = a.partition.part_containing(u);
  if (!is_subset(witness, part)) {
    throw InternalError("cover_witness: witness is not inside its part");
  }
  return {witness, part};
}

}  // namespace supercolor

#endif  // SUPERCOLOR_BUNCH_HPP_
