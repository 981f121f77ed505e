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

#ifndef SUPERCOLOR_BITS_HPP_
#define SUPERCOLOR_BITS_HPP_

// Word-level set algebra over ground sets of at most 64 elements.

#include <bit>
#include <cstdint>

namespace supercolor {

using Bits = std::uint64_t;

inline constexpr int kMaxElements = 64;

constexpr Bits bit(int i) { return Bits{1} << i; }

constexpr Bits low_bits(int n) {
  return n >= kMaxElements ? ~Bits{0} : bit(n) - 1;
}

constexpr int popcount(Bits x) { return std::popcount(x); }

constexpr bool is_subset(Bits x, Bits y) { return (x & ~y) == 0; }

constexpr bool is_proper_subset(Bits x, Bits y) {
  return x != y && is_subset(x, y);
}

constexpr bool meets(Bits x, Bits y) { return (x & y) != 0; }

// Calls fn(i) for every member i in increasing order.
template <typename Fn>
constexpr void for_each_bit(Bits x, Fn&& fn) {
  while (x != 0) {
    const int i = std::countr_zero(x);
    fn(i);
    x &= x - 1;
  }
}

// Enumerates k-element subsets of {0, ..., n-1} in increasing integer order
// (Gosper's hack). Stops early and returns true as soon as fn returns true.
template <typename Fn>
bool for_each_subset_of_size(int n, int k, Fn&& fn) {
  if (k < 0 || k > n) return false;
  if (k == 0) return fn(Bits{0});
  const Bits limit = low_bits(n);
  Bits x = low_bits(k);
  while (true) {
    if (fn(x)) return true;
    const Bits c = x & (~x + 1);
    const Bits r = x + c;
    if (r == 0) return false;  // wrapped past bit 63
    x = (((r ^ x) >> 2) / c) | r;
    if ((x & ~limit) != 0) return false;
  }
}

// Packs the members of x that lie in keep into consecutive low positions,
// preserving order (a portable pext).
constexpr Bits compress(Bits x, Bits keep) {
  Bits out = 0;
  int pos = 0;
  for_each_bit(keep, [&](int i) {
    if ((x >> i) & 1) out |= bit(pos);
    ++pos;
  });
  return out;
}

}  // namespace supercolor

#endif  // SUPERCOLOR_BITS_HPP_
