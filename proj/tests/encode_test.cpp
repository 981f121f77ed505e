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

#include <gtest/gtest.h>

#include "supercolor/encode.hpp"
#include "supercolor/error.hpp"
#include "supercolor/gen.hpp"
#include "supercolor/oracle.hpp"
#include "support/properties.hpp"

namespace supercolor {
namespace {

TEST(MultigraphTest, EdgeIdsCountParallelCopies) {
  Multigraph g = make_multigraph({"s1", "s2"}, {"t1"}, {{"s1", "t1"}, {"s1", "t1"}, {"s2", "t1"}});
  ASSERT_EQ(g.edges.size(), 3u);
  EXPECT_EQ(g.edges[0].id, "s1~t1~0");
  EXPECT_EQ(g.edges[1].id, "s1~t1~1");
  EXPECT_EQ(g.edges[2].id, "s2~t1~0");
  EXPECT_EQ(g.degree_s(0), 2);
  EXPECT_EQ(g.degree_t(0), 3);
}

TEST(MultigraphTest, BadInput) {
  EXPECT_THROW(make_multigraph({"s", "s"}, {"t"}, {}), InputError);
  EXPECT_THROW(make_multigraph({"s"}, {"t"}, {{"s", "u"}}), InputError);
  EXPECT_THROW(make_multigraph({"s"}, {"t"}, {{"t", "s"}}), InputError);
  EXPECT_THROW(encode_bipartite(make_multigraph({"s"}, {"t"}, {})), InputError);
}

TEST(EncodeTest, StarsBecomeFamilies) {
  Multigraph g = make_multigraph({"s1", "s2", "s3"}, {"t1", "t2"},
                                 {{"s1", "t1"}, {"s1", "t2"}, {"s2", "t1"}});
  Instance inst = encode_bipartite(g);
  // s3 is isolated and contributes nothing.
  EXPECT_EQ(inst.g1.entries(), (std::vector<Entry>{{0b011, 2}, {0b100, 1}}));
  EXPECT_EQ(inst.g2.entries(), (std::vector<Entry>{{0b010, 1}, {0b101, 2}}));
  EXPECT_TRUE(is_valid(inst.g1));
  EXPECT_TRUE(check_capacity(inst.g2).ok());
  EXPECT_TRUE(check_degree_identity(g).ok());
}

TEST(EncodeTest, ProperColoringsAreExactlyDominatingOnes) {
  Multigraph g = make_multigraph({"s1", "s2"}, {"t1", "t2"},
                                 {{"s1", "t1"}, {"s1", "t2"}, {"s2", "t1"}, {"s2", "t2"}});
  Instance inst = encode_bipartite(g);
  for (int a = 1; a <= 3; ++a) {
    for (int b = 1; b <= 3; ++b) {
      for (int c = 1; c <= 3; ++c) {
        for (int d = 1; d <= 3; ++d) {
          std::vector<int> phi{a, b, c, d};
          const bool dom = dominates(phi, inst.g1).ok() && dominates(phi, inst.g2).ok();
          EXPECT_EQ(dom, coloring_is_proper(g, phi));
        }
      }
    }
  }
  EXPECT_THROW(coloring_is_proper(g, {1}), InputError);
}

TEST(EncodeTest, RandomMultigraphs) {
  Rng rng(55);
  for (int i = 0; i < 200; ++i) {
    Multigraph g = detail::random_multigraph(static_cast<int>(rng.uniform(1, 9)), rng);
    auto f = testing::prop_bipartite_encoding(g, rng, 10, 1);
    EXPECT_FALSE(f.has_value()) << "graph " << i << ": " << *f;
  }
}

}  // namespace
}  // namespace supercolor
