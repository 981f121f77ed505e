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

#ifndef SUPERCOLOR_CORE_HPP_
#define SUPERCOLOR_CORE_HPP_

// Ground sets, subsets, explicit set functions g: F -> Z and the structural
// checks (intersecting-family closure, supermodular inequality, capacity).

#include <algorithm>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "supercolor/bits.hpp"
#include "supercolor/error.hpp"

namespace supercolor {

using Value = long long;

// An ordered universe of named elements. Element i is bit i of a Bits word.
// The empty universe only arises as the result of reducing by every element.
class GroundSet {
 public:
  GroundSet() = default;

  explicit GroundSet(std::vector<std::string> names) : names_(std::move(names)) {
    if (names_.size() > static_cast<size_t>(kMaxElements)) {
      throw InputError("ground set has " + std::to_string(names_.size()) +
                       " elements; at most 64 are supported");
    }
    for (size_t i = 0; i < names_.size(); ++i) {
      if (names_[i].empty()) throw InputError("element names must be nonempty");
      if (!index_.emplace(names_[i], static_cast<int>(i)).second) {
        throw InputError("duplicate element name '" + names_[i] + "'");
      }
    }
  }

  int size() const { return static_cast<int>(names_.size()); }
  bool empty() const { return names_.empty(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(int i) const { return names_.at(static_cast<size_t>(i)); }
  Bits full() const { return low_bits(size()); }

  std::optional<int> index_of(std::string_view name) const {
    auto it = index_.find(std::string(name));
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  Bits bits_of(const std::vector<std::string>& names) const {
    Bits out = 0;
    for (const auto& n : names) {
      auto i = index_of(n);
      if (!i) throw InputError("unknown element '" + n + "'");
      out |= bit(*i);
    }
    return out;
  }

  std::vector<std::string> names_of(Bits x) const {
    std::vector<std::string> out;
    for_each_bit(x, [&](int i) { out.push_back(name(i)); });
    return out;
  }

  std::string format(Bits x) const {
    std::string out = "{";
    bool first = true;
    for_each_bit(x, [&](int i) {
      if (!first) out += ",";
      out += name(i);
      first = false;
    });
    return out + "}";
  }

  // The sub-universe of the members of keep, in their original order.
  GroundSet restrict(Bits keep) const {
    return GroundSet(names_of(keep & full()));
  }

  friend bool operator==(const GroundSet& a, const GroundSet& b) {
    return a.names_ == b.names_;
  }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, int> index_;
};

using GroundRef = std::shared_ptr<const GroundSet>;

inline GroundRef make_ground(std::vector<std::string> names) {
  return std::make_shared<const GroundSet>(std::move(names));
}

inline bool same_ground(const GroundRef& a, const GroundRef& b) {
  return a == b || (a && b && *a == *b);
}

// A subset of a particular ground set.
class ElemSet {
 public:
  ElemSet(GroundRef ground, Bits bits) : ground_(std::move(ground)), bits_(bits) {
    if (!is_subset(bits_, ground_->full())) {
      throw InputError("subset has members outside its ground set");
    }
  }

  static ElemSet of(GroundRef ground, const std::vector<std::string>& names) {
    const Bits b = ground->bits_of(names);
    return ElemSet(std::move(ground), b);
  }

  const GroundRef& ground() const { return ground_; }
  Bits bits() const { return bits_; }
  int size() const { return popcount(bits_); }
  bool empty() const { return bits_ == 0; }
  bool contains(int i) const { return (bits_ >> i) & 1; }
  std::vector<std::string> names() const { return ground_->names_of(bits_); }

  friend bool operator==(const ElemSet& a, const ElemSet& b) {
    return same_ground(a.ground_, b.ground_) && a.bits_ == b.bits_;
  }

 private:
  GroundRef ground_;
  Bits bits_;
};

constexpr bool is_intersecting(Bits x, Bits y) {
  return meets(x, y) && !is_subset(x, y) && !is_subset(y, x);
}

inline bool is_intersecting(const ElemSet& x, const ElemSet& y) {
  if (!same_ground(x.ground(), y.ground())) {
    throw InputError("is_intersecting: sets belong to different ground sets");
  }
  return is_intersecting(x.bits(), y.bits());
}

struct Entry {
  Bits set = 0;
  Value value = 0;

  friend bool operator==(const Entry&, const Entry&) = default;
};

// An explicit set function on a family F of distinct subsets. Entries are
// kept sorted by set-as-integer; that order is the canonical iteration order
// everywhere downstream.
class SetFn {
 public:
  explicit SetFn(GroundRef ground, std::vector<Entry> entries = {})
      : ground_(std::move(ground)), entries_(std::move(entries)) {
    std::sort(entries_.begin(), entries_.end(),
              [](const Entry& a, const Entry& b) { return a.set < b.set; });
    for (size_t i = 0; i < entries_.size(); ++i) {
      if (!is_subset(entries_[i].set, ground_->full())) {
        throw InputError("family member has elements outside the ground set");
      }
      if (i > 0 && entries_[i - 1].set == entries_[i].set) {
        throw InputError("duplicate set " + ground_->format(entries_[i].set) +
                         " in one function");
      }
    }
  }

  static SetFn from_names(
      GroundRef ground,
      const std::vector<std::pair<std::vector<std::string>, Value>>& named) {
    std::vector<Entry> entries;
    entries.reserve(named.size());
    for (const auto& [names, value] : named) {
      entries.push_back({ground->bits_of(names), value});
    }
    return SetFn(std::move(ground), std::move(entries));
  }

  const GroundRef& ground_ref() const { return ground_; }
  const GroundSet& ground() const { return *ground_; }
  const std::vector<Entry>& entries() const { return entries_; }
  int size() const { return static_cast<int>(entries_.size()); }
  bool empty() const { return entries_.empty(); }

  std::optional<Value> find(Bits x) const {
    auto it = std::lower_bound(
        entries_.begin(), entries_.end(), x,
        [](const Entry& e, Bits key) { return e.set < key; });
    if (it == entries_.end() || it->set != x) return std::nullopt;
    return it->value;
  }

  bool contains(Bits x) const { return find(x).has_value(); }

  Value value(Bits x) const {
    auto v = find(x);
    if (!v) throw InputError("set " + ground_->format(x) + " is not in the family");
    return *v;
  }

  ElemSet elem(Bits x) const { return ElemSet(ground_, x); }

  friend bool operator==(const SetFn& a, const SetFn& b) {
    return same_ground(a.ground_, b.ground_) && a.entries_ == b.entries_;
  }

 private:
  GroundRef ground_;
  std::vector<Entry> entries_;
};

// A pair of functions on a common ground set: the unit every coloring
// question is asked about.
struct Instance {
  SetFn g1;
  SetFn g2;

  const GroundSet& ground() const { return g1.ground(); }
  const GroundRef& ground_ref() const { return g1.ground_ref(); }
};

inline Instance make_instance(SetFn g1, SetFn g2) {
  if (!same_ground(g1.ground_ref(), g2.ground_ref())) {
    throw InputError("g1 and g2 are defined on different ground sets");
  }
  return Instance{std::move(g1), std::move(g2)};
}

struct Violation {
  std::string kind;
  std::vector<Bits> sets;
  std::vector<Value> values;
  std::string detail;
};

struct Report {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }

  void add(Violation v) { violations.push_back(std::move(v)); }
  void merge(const Report& other) {
    violations.insert(violations.end(), other.violations.begin(),
                      other.violations.end());
  }
};

inline Report check_intersecting_family(const SetFn& g) {
  Report report;
  const auto& e = g.entries();
  for (size_t i = 0; i < e.size(); ++i) {
    for (size_t j = i + 1; j < e.size(); ++j) {
      const Bits x = e[i].set, y = e[j].set;
      if (!is_intersecting(x, y)) continue;
      if (!g.contains(x | y)) {
        report.add({"missing_union", {x, y, x | y}, {}, ""});
      }
      if (!g.contains(x & y)) {
        report.add({"missing_intersection", {x, y, x & y}, {}, ""});
      }
    }
  }
  return report;
}

inline Report check_supermodular(const SetFn& g) {
  const Report closure = check_intersecting_family(g);
  if (!closure.ok()) {
    const Violation& v = closure.violations.front();
    throw PreconditionError(
        "family is not intersecting-closed: " + g.ground().format(v.sets[2]) +
        " is missing for the pair " + g.ground().format(v.sets[0]) + ", " +
        g.ground().format(v.sets[1]));
  }
  Report report;
  const auto& e = g.entries();
  for (size_t i = 0; i < e.size(); ++i) {
    for (size_t j = i + 1; j < e.size(); ++j) {
      const Bits x = e[i].set, y = e[j].set;
      if (!is_intersecting(x, y)) continue;
      const Value lhs = e[i].value + e[j].value;
      const Value rhs = g.value(x | y) + g.value(x & y);
      if (lhs > rhs) report.add({"supermodular", {x, y}, {lhs, rhs}, ""});
    }
  }
  return report;
}

inline Report check_capacity(const SetFn& g) {
  Report report;
  for (const Entry& e : g.entries()) {
    if (popcount(e.set) < e.value) {
      report.add({"capacity", {e.set}, {popcount(e.set), e.value}, ""});
    }
  }
  return report;
}

// True iff g is intersecting-supermodular (closure plus inequality).
inline bool is_valid(const SetFn& g) {
  return check_intersecting_family(g).ok() && check_supermodular(g).ok();
}

inline void require_valid(const SetFn& g, std::string_view what) {
  const Report closure = check_intersecting_family(g);
  if (!closure.ok()) {
    throw PreconditionError(std::string(what) +
                            ": family is not intersecting-closed");
  }
  if (!check_supermodular(g).ok()) {
    throw PreconditionError(std::string(what) +
                            ": supermodular inequality fails");
  }
}

inline void require_capacity(const SetFn& g, std::string_view what) {
  const Report r = check_capacity(g);
  if (!r.ok()) {
    throw PreconditionError(std::string(what) + ": capacity fails on " +
                            g.ground().format(r.violations.front().sets[0]));
  }
}

// max{1, max g_i(X)}: the number of colors Schrijver's theorem needs.
inline Value delta(const SetFn& g1, const SetFn& g2) {
  if (!same_ground(g1.ground_ref(), g2.ground_ref())) {
    throw InputError("delta: functions are defined on different ground sets");
  }
  Value best = 1;
  for (const auto* g : {&g1, &g2}) {
    for (const Entry& e : g->entries()) best = std::max(best, e.value);
  }
  return best;
}

}  // namespace supercolor

#endif  // SUPERCOLOR_CORE_HPP_
