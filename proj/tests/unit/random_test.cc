// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "submod/random.h"

#include <algorithm>
#include <set>

#include "gtest/gtest.h"
#include "submod/errors.h"

namespace submod {
namespace {

TEST(RngTest, SameSeedAndStreamReproduce) {
  Rng a(42, 3);
  Rng b(42, 3);
  for (int i = 0; i < 100; ++i) EXPECT_EQ(a.Next(), b.Next());
}

TEST(RngTest, StreamsAndSeedsDiffer) {
  Rng base(42, 0);
  Rng other_stream(42, 1);
  Rng other_seed(43, 0);
  const auto first = base.Next();
  EXPECT_NE(first, other_stream.Next());
  EXPECT_NE(first, other_seed.Next());
}

TEST(RngTest, BelowStaysInRangeAndRejectsZero) {
  Rng rng(1);
  for (std::uint64_t bound : {1ULL, 2ULL, 3ULL, 7ULL, 1000ULL, (1ULL << 63) + 5}) {
    for (int i = 0; i < 200; ++i) EXPECT_LT(rng.Below(bound), bound);
  }
  EXPECT_THROW(rng.Below(0), DomainError);
}

TEST(RngTest, BelowIsRoughlyUniform) {
  Rng rng(9);
  constexpr int kBins = 6;
  constexpr int kDraws = 60000;
  int counts[kBins] = {};
  for (int i = 0; i < kDraws; ++i) ++counts[rng.Below(kBins)];
  double chi2 = 0.0;
  const double expected = static_cast<double>(kDraws) / kBins;
  for (int c : counts) chi2 += (c - expected) * (c - expected) / expected;
  // 5 degrees of freedom; 20.5 is the 0.999 quantile.
  EXPECT_LT(chi2, 20.5);
}

TEST(SampleTest, DistinctMembersOfPool) {
  Rng rng(5);
  const std::vector<std::size_t> pool = {3, 8, 10, 11, 20, 21};
  for (int i = 0; i < 100; ++i) {
    const auto sample = SampleWithoutReplacement(pool, 4, rng);
    ASSERT_EQ(sample.size(), 4u);
    std::set<std::size_t> unique(sample.begin(), sample.end());
    EXPECT_EQ(unique.size(), 4u);
    for (std::size_t v : sample) {
      EXPECT_NE(std::find(pool.begin(), pool.end(), v), pool.end());
    }
  }
}

TEST(SampleTest, OversizedRequestTakesWholePool) {
  Rng rng(5);
  const std::vector<std::size_t> pool = {1, 2, 3};
  auto sample = SampleWithoutReplacement(pool, 10, rng);
  std::sort(sample.begin(), sample.end());
  EXPECT_EQ(sample, pool);
  EXPECT_TRUE(SampleWithoutReplacement({}, 3, rng).empty());
}

TEST(SampleTest, InclusionFrequenciesUniform) {
  Rng rng(12);
  const std::vector<std::size_t> pool = {0, 1, 2, 3, 4};
  int counts[5] = {};
  constexpr int kDraws = 50000;
  for (int i = 0; i < kDraws; ++i) {
    for (std::size_t v : SampleWithoutReplacement(pool, 2, rng)) ++counts[v];
  }
  // Each element is included with probability 2/5.
  for (int c : counts) EXPECT_NEAR(c / static_cast<double>(kDraws), 0.4, 0.01);
}

}  // namespace
}  // namespace submod
