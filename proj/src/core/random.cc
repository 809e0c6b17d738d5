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

#include <utility>

#include "submod/errors.h"

namespace submod {
namespace {

std::seed_seq MakeSeedSeq(std::uint64_t seed, std::uint64_t stream) {
  return std::seed_seq{
      static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
      static_cast<std::uint32_t>(stream),
      static_cast<std::uint32_t>(stream >> 32)};
}

}  // namespace

Rng::Rng(std::uint64_t seed, std::uint64_t stream) {
  auto seq = MakeSeedSeq(seed, stream);
  engine_.seed(seq);
}

std::uint64_t Rng::Below(std::uint64_t bound) {
  if (bound == 0) throw DomainError("Rng::Below needs a positive bound");
  unsigned __int128 product =
      static_cast<unsigned __int128>(Next()) * bound;
  auto low = static_cast<std::uint64_t>(product);
  if (low < bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    while (low < threshold) {
      product = static_cast<unsigned __int128>(Next()) * bound;
      low = static_cast<std::uint64_t>(product);
    }
  }
  return static_cast<std::uint64_t>(product >> 64);
}

std::vector<std::size_t> SampleWithoutReplacement(
    std::span<const std::size_t> pool, std::size_t count, Rng& rng) {
  std::vector<std::size_t> items(pool.begin(), pool.end());
  const std::size_t take = std::min(count, items.size());
  for (std::size_t i = 0; i < take; ++i) {
    const std::size_t j = i + rng.Below(items.size() - i);
    std::swap(items[i], items[j]);
  }
  items.resize(take);
  return items;
}

}  // namespace submod
