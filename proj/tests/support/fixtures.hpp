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

#ifndef SUPERCOLOR_TESTS_SUPPORT_FIXTURES_HPP_
#define SUPERCOLOR_TESTS_SUPPORT_FIXTURES_HPP_

#include <string>
#include <vector>

#include "supercolor/core.hpp"

namespace supercolor::testing {

inline GroundRef letters(int n) {
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.emplace_back(1, static_cast<char>('a' + i));
  return make_ground(names);
}

// U = {a..j}; F1 = abcd, F2 = cdef, their union and intersection, F3 = ghij,
// F4 = gh, with g = 3, 3, 4, 2, 3, 2.
inline SetFn example1(GroundRef ground = letters(10)) {
  return SetFn::from_names(ground, {{{"a", "b", "c", "d"}, 3},
                                    {{"c", "d", "e", "f"}, 3},
                                    {{"a", "b", "c", "d", "e", "f"}, 4},
                                    {{"c", "d"}, 2},
                                    {{"g", "h", "i", "j"}, 3},
                                    {{"g", "h"}, 2}});
}

inline Bits names(const SetFn& g, const std::vector<std::string>& n) {
  return g.ground().bits_of(n);
}

}  // namespace supercolor::testing

#endif  // SUPERCOLOR_TESTS_SUPPORT_FIXTURES_HPP_
