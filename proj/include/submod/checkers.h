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

#ifndef SUBMOD_CHECKERS_H_
#define SUBMOD_CHECKERS_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>

#include "submod/set_function.h"
#include "submod/subset.h"

namespace submod {

enum class CheckMode { kExhaustive, kSampled };

enum class Property { kMonotone, kSubmodularDerivative, kSubmodularIntersection };

std::string PropertyName(Property property);

// Largest ground set each exhaustive check accepts.
inline constexpr std::size_t kMaxExhaustiveMonotone = 20;
inline constexpr std::size_t kMaxExhaustiveDerivative = 14;
inline constexpr std::size_t kMaxExhaustiveIntersection = 12;

// Relative violation tolerance: a comparison fails only when it is off by
// more than kViolationTolerance * max(1, |values compared|).
inline constexpr double kViolationTolerance = 1e-9;

// A counterexample. Which fields are populated depends on the property:
//   monotone:      a (base set), element v; lhs = f(A), rhs = f(A u {v})
//                  (violation: rhs < lhs).
//   derivative:    a subset of b, element v outside b;
//                  lhs = Delta(v|A), rhs = Delta(v|B) (violation: lhs < rhs).
//   intersection:  a, b; lhs = f(A n B) + f(A u B), rhs = f(A) + f(B)
//                  (violation: lhs > rhs).
struct Witness {
  Subset a;
  std::optional<Subset> b;
  std::optional<std::size_t> element;
  double lhs = 0.0;
  double rhs = 0.0;
  // Size of the violation in value units (lhs/rhs gap for the property).
  double magnitude = 0.0;
};

struct PropertyReport {
  Property property = Property::kMonotone;
  bool holds = true;
  std::optional<Witness> witness;
  std::uint64_t pairs_checked = 0;
};

struct CheckOptions {
  CheckMode mode = CheckMode::kExhaustive;
  // Number of random instances drawn in sampled mode.
  std::uint64_t budget = 100000;
  std::uint64_t seed = 0;
};

// Delta(v|A) >= 0 for every A and v outside A.
PropertyReport CheckMonotone(const SetFunction& f, const CheckOptions& options);

// Delta(v|A) >= Delta(v|B) for every A subset of B and v outside B.
// Exhaustive mode walks the 3^n ternary assignments
// (in A / in B only / in neither).
PropertyReport CheckSubmodularDerivative(const SetFunction& f,
                                         const CheckOptions& options);

// f(A n B) + f(A u B) <= f(A) + f(B). Exhaustive mode visits each unordered
// pair once.
PropertyReport CheckSubmodularIntersection(const SetFunction& f,
                                           const CheckOptions& options);

PropertyReport CheckProperty(const SetFunction& f, Property property,
                             const CheckOptions& options);

// Re-evaluates a witness and returns true if it still violates `property`.
bool WitnessReproduces(const SetFunction& f, Property property,
                       const Witness& witness);

struct TelescopingResult {
  // |f(A u H) - f(A) - sum_j Delta(h_j | A u {h_1..h_{j-1}})|.
  double residual = 0.0;
  // max(1, largest |f| value touched); residuals scale with it.
  double scale = 1.0;
  // Members of H already in A, which were dropped before summing.
  std::vector<std::size_t> dropped;
};

// Throws DomainError on duplicates in `sequence` or out-of-range indices.
TelescopingResult CheckTelescoping(const SetFunction& f, const Subset& base,
                                   std::span<const std::size_t> sequence);

struct OracleResult {
  Subset best_set;
  double best_value = 0.0;
  std::uint64_t sets_evaluated = 0;
};

inline constexpr std::uint64_t kDefaultOracleCap = 10'000'000;

// C(n, k), saturating at UINT64_MAX.
std::uint64_t Binomial(std::uint64_t n, std::uint64_t k);

// Exhaustive maximization over all k-subsets, enumerated in lexicographic
// order of ascending index tuples. Ties go to the first tuple seen.
// Throws DomainError unless 1 <= k <= n and CapabilityError when C(n,k)
// exceeds `cap`.
OracleResult BruteForceOpt(const SetFunction& f, std::size_t k,
                           std::uint64_t cap = kDefaultOracleCap);

}  // namespace submod

#endif  // SUBMOD_CHECKERS_H_
