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

#ifndef SUBMOD_RANDOM_H_
#define SUBMOD_RANDOM_H_

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

namespace submod {

// Seedable generator with a fixed cross-platform output sequence.
//
// The engine is std::mt19937_64, whose output is pinned by the standard,
// seeded through std::seed_seq over the 32-bit halves of (seed, stream).
// Distinct streams of one seed are independent draws for separate trials.
// Bounded integers use Lemire's multiply-and-reject method rather than
// std::uniform_int_distribution, whose output is implementation-defined.
class Rng {
 public:
  explicit Rng(std::uint64_t seed, std::uint64_t stream = 0);

  std::uint64_t Next() { return engine_(); }

  // Uniform in [0, bound). bound must be positive.
  std::uint64_t Below(std::uint64_t bound);

  // Fair coin.
  bool Bit() { return (Next() >> 63) != 0; }

 private:
  std::mt19937_64 engine_;
};

// Uniformly samples min(count, pool.size()) distinct entries of `pool`
// without replacement (partial Fisher-Yates over a copy).
std::vector<std::size_t> SampleWithoutReplacement(
    std::span<const std::size_t> pool, std::size_t count, Rng& rng);

}  // namespace submod

#endif  // SUBMOD_RANDOM_H_
