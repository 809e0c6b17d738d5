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

#include "submod/subset.h"

#include <random>

#include "gtest/gtest.h"
#include "submod/errors.h"

namespace submod {
namespace {

TEST(SubsetTest, MembersAscendingAndDeduplicated) {
  const Subset s = Subset::FromIndices(10, {7, 2, 7, 0});
  EXPECT_EQ(s.Members(), (std::vector<std::size_t>{0, 2, 7}));
  EXPECT_EQ(s.size(), 3u);
  EXPECT_EQ(s.ToString(), "{0, 2, 7}");
}

TEST(SubsetTest, OutOfRangeIndexNamesTheIndex) {
  try {
    Subset::FromIndices(3, {1, 5});
    FAIL() << "expected DomainError";
  } catch (const DomainError& e) {
    EXPECT_NE(std::string(e.what()).find("5"), std::string::npos);
  }
  Subset s(3);
  EXPECT_THROW(s.Contains(3), DomainError);
}

TEST(SubsetTest, SpansSeveralWords) {
  Subset s(200);
  s.Insert(0);
  s.Insert(63);
  s.Insert(64);
  s.Insert(199);
  EXPECT_EQ(s.Members(), (std::vector<std::size_t>{0, 63, 64, 199}));
  EXPECT_EQ(Subset::Full(130).size(), 130u);
  EXPECT_TRUE(s.IsSubsetOf(Subset::Full(200)));
}

TEST(SubsetTest, MaskRoundTrip) {
  const Subset s = Subset::FromMask(5, 0b10110);
  EXPECT_EQ(s.Members(), (std::vector<std::size_t>{1, 2, 4}));
  EXPECT_EQ(s.LowMask(), 0b10110u);
  EXPECT_THROW(Subset::FromMask(3, 0b1000), DomainError);
}

TEST(SubsetTest, MixedUniversesRejected) {
  EXPECT_THROW(Subset(3).Union(Subset(4)), DomainError);
}

// Set algebra agrees with the bitwise algebra of masks.
TEST(SubsetTest, AlgebraMatchesMaskAlgebra) {
  std::mt19937_64 gen(7);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t n = 1 + gen() % 64;
    const std::uint64_t universe = n == 64 ? ~0ULL : (1ULL << n) - 1;
    const std::uint64_t a = gen() & universe;
    const std::uint64_t b = gen() & universe;
    const Subset sa = Subset::FromMask(n, a);
    const Subset sb = Subset::FromMask(n, b);
    EXPECT_EQ(sa.Union(sb).LowMask(), a | b);
    EXPECT_EQ(sa.Intersection(sb).LowMask(), a & b);
    EXPECT_EQ(sa.IsSubsetOf(sb), (a & ~b) == 0);
    EXPECT_EQ(sa.size(), static_cast<std::size_t>(std::popcount(a)));
  }
}

}  // namespace
}  // namespace submod
