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

#include <map>

#include "supercolor/bunch.hpp"
#include "supercolor/error.hpp"
#include "supercolor/gen.hpp"
#include "supercolor/io.hpp"
#include "supercolor/rng.hpp"

namespace supercolor {
namespace {

TEST(RngTest, UniformStaysInRange) {
  Rng rng(3);
  std::map<long long, int> seen;
  for (int i = 0; i < 2000; ++i) {
    const long long x = rng.uniform(-2, 2);
    ASSERT_GE(x, -2);
    ASSERT_LE(x, 2);
    ++seen[x];
  }
  EXPECT_EQ(seen.size(), 5u);
}

TEST(RngTest, SampleIsDistinct) {
  Rng rng(4);
  auto s = rng.sample(10, 10);
  std::sort(s.begin(), s.end());
  for (int i = 0; i < 10; ++i) EXPECT_EQ(s[static_cast<size_t>(i)], i);
}

TEST(RngTest, FixedSeedFixedStream) {
  // mt19937_64 with the default seed gives this 10000th value by definition.
  std::mt19937_64 ref;
  ref.discard(9999);
  EXPECT_EQ(ref(), 9981545732273789042ULL);
  Rng a(5489), b(5489);
  for (int i = 0; i < 100; ++i) EXPECT_EQ(a.next(), b.next());
  EXPECT_NE(mix_seed(1, 0), mix_seed(1, 1));
}

TEST(StrategyTest, NamesRoundTrip) {
  for (Strategy s : {Strategy::kLaminar, Strategy::kClosure, Strategy::kRankComplement,
                     Strategy::kBipartite}) {
    EXPECT_EQ(parse_strategy(strategy_name(s)), s);
  }
  EXPECT_THROW(parse_strategy("matroid"), InputError);
}

TEST(CloseFamilyTest, AddsUnionAndIntersection) {
  auto f = close_family({0b0011, 0b0110});
  ASSERT_TRUE(f.has_value());
  EXPECT_EQ(*f, (std::vector<Bits>{0b0010, 0b0011, 0b0110, 0b0111}));
  EXPECT_FALSE(close_family({0b0011, 0b0110}, 3).has_value());
  EXPECT_EQ(*close_family({0b01, 0b10}), (std::vector<Bits>{0b01, 0b10}));
}

TEST(DefaultNamesTest, LettersThenNumbered) {
  auto n = default_names(28);
  EXPECT_EQ(n[0], "a");
  EXPECT_EQ(n[25], "z");
  EXPECT_EQ(n[26], "u26");
}

class StrategyValidityTest : public ::testing::TestWithParam<Strategy> {};

TEST_P(StrategyValidityTest, OutputIsValidAndCapacityRespecting) {
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    GenConfig cfg;
    cfg.seed = seed;
    cfg.strategy = GetParam();
    cfg.n_elements = 1 + static_cast<int>(seed % 8);
    Instance inst = generate(cfg);
    for (const SetFn* g : {&inst.g1, &inst.g2}) {
      EXPECT_TRUE(check_intersecting_family(*g).ok()) << seed;
      EXPECT_TRUE(check_supermodular(*g).ok()) << seed;
      EXPECT_TRUE(check_capacity(*g).ok()) << seed;
    }
  }
}

TEST_P(StrategyValidityTest, SameSeedSameInstance) {
  GenConfig cfg;
  cfg.seed = 77;
  cfg.strategy = GetParam();
  EXPECT_EQ(digest(generate(cfg)), digest(generate(cfg)));
}

INSTANTIATE_TEST_SUITE_P(All, StrategyValidityTest,
                         ::testing::Values(Strategy::kLaminar, Strategy::kClosure,
                                           Strategy::kRankComplement, Strategy::kBipartite),
                         [](const auto& info) { return strategy_name(info.param); });

TEST(GenerateTest, LaminarFamilyHasNoCrossingPair) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    SetFn g = gen_laminar(GenConfig{seed, 7, Strategy::kLaminar});
    for (const Entry& x : g.entries()) {
      for (const Entry& y : g.entries()) EXPECT_FALSE(is_intersecting(x.set, y.set));
    }
  }
}

TEST(GenerateTest, ProducesNontrivialFunctions) {
  int with_effective = 0;
  for (std::uint64_t i = 0; i < 200; ++i) {
    Instance inst = generate(mixed_config(1, i, 8));
    with_effective += !effective_family(inst.g1).empty();
  }
  EXPECT_GT(with_effective, 50);
}

TEST(GenerateTest, RejectsBadSize) {
  GenConfig cfg;
  cfg.n_elements = 0;
  EXPECT_THROW(generate(cfg), InputError);
  cfg.n_elements = 65;
  EXPECT_THROW(generate(cfg), InputError);
}

TEST(MixedConfigTest, CoversAllStrategiesAndSizes) {
  std::map<Strategy, int> count;
  std::map<int, int> sizes;
  for (std::uint64_t i = 0; i < 2000; ++i) {
    GenConfig c = mixed_config(9, i, 6);
    ++count[c.strategy];
    ++sizes[c.n_elements];
  }
  EXPECT_EQ(count.size(), 4u);
  EXPECT_GT(count[Strategy::kClosure], count[Strategy::kBipartite]);
  EXPECT_EQ(sizes.size(), 6u);
  EXPECT_EQ(sizes.begin()->first, 1);
}

TEST(PartialTransversalTest, MeetsEachPartAtMostOnce) {
  Rng rng(8);
  for (std::uint64_t i = 0; i < 200; ++i) {
    Instance inst = generate(mixed_config(2, i, 8));
    Partition p = bunch_partition(inst.g1);
    EXPECT_TRUE(is_partial_transversal(p, random_partial_transversal(p, rng)));
  }
  Partition p = bunch_partition(SetFn(make_ground({"a", "b"})));
  EXPECT_EQ(random_partial_transversal(p, rng, 1.0), 0b11u);
  EXPECT_EQ(random_partial_transversal(p, rng, 0.0), 0u);
}

}  // namespace
}  // namespace supercolor
