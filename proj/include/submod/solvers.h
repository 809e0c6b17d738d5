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

#ifndef SUBMOD_SOLVERS_H_
#define SUBMOD_SOLVERS_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "submod/checkers.h"
#include "submod/set_function.h"
#include "submod/subset.h"

namespace submod {

enum class Algorithm { kGreedy, kLazyGreedy, kStochasticGreedy };

// "greedy", "lazy", "stochastic".
std::string AlgorithmName(Algorithm algorithm);

struct StepRecord {
  // 1-based step index l.
  std::size_t step = 0;
  std::size_t element = 0;
  // Delta(v_l | S_{l-1}).
  double gain = 0.0;
  // f(S_l).
  double objective = 0.0;
};

struct SolveResult {
  Algorithm algorithm = Algorithm::kGreedy;
  std::size_t k = 0;
  Subset selected;
  std::vector<StepRecord> trace;
  // Calls to the underlying set function (empty-set evaluations are free).
  std::uint64_t evaluations = 0;
  std::optional<std::uint64_t> seed;
  std::optional<std::uint64_t> stream;
  std::optional<std::size_t> sample_size;

  // f(S_k); 0 for an empty trace.
  double objective() const;
  // Elements in pick order.
  std::vector<std::size_t> picks() const;
};

// A lazy-greedy priority queue entry. `cached_gain` is rho(v); `stamp` is
// the step at which it was last recomputed. For submodular f a stale entry
// (stamp < current step) upper-bounds the element's current gain.
struct LazyQueueEntry {
  std::size_t element = 0;
  double cached_gain = 0.0;
  // f(S_{stamp-1} u {element}), kept so an accepted entry costs nothing more.
  double cached_value = 0.0;
  std::size_t stamp = 0;
};

// True when `a` ranks ahead of `b`: larger gain, then smaller index.
// Exact floating-point comparison; every solver selects with this order.
inline bool RanksAhead(double gain_a, std::size_t element_a, double gain_b,
                       std::size_t element_b) {
  return gain_a > gain_b || (gain_a == gain_b && element_a < element_b);
}

// Stochastic greedy configuration: exactly one of epsilon / sample size.
class StochasticConfig {
 public:
  // Throws DomainError unless 0 < epsilon < 1.
  static StochasticConfig FromEpsilon(double epsilon, std::uint64_t seed,
                                      std::uint64_t stream = 0);
  // Throws DomainError if sample_size == 0.
  static StochasticConfig FromSampleSize(std::size_t sample_size,
                                         std::uint64_t seed,
                                         std::uint64_t stream = 0);

  std::optional<double> epsilon() const { return epsilon_; }
  std::optional<std::size_t> explicit_sample_size() const {
    return sample_size_;
  }
  std::uint64_t seed() const { return seed_; }
  std::uint64_t stream() const { return stream_; }

  // The per-step sample size for a problem with ground set n and budget k.
  std::size_t ResolveSampleSize(std::size_t n, std::size_t k) const;

 private:
  StochasticConfig() = default;

  std::optional<double> epsilon_;
  std::optional<std::size_t> sample_size_;
  std::uint64_t seed_ = 0;
  std::uint64_t stream_ = 0;
};

// s = max(1, ceil((n / k) * ln(1 / epsilon))).
// Throws DomainError unless 1 <= k <= n and 0 < epsilon < 1.
std::size_t SampleSize(std::size_t n, std::size_t k, double epsilon);

// Standard greedy: each step scans every remaining element and takes the
// largest marginal gain. Uses exactly nk - k(k-1)/2 evaluations.
// Throws DomainError unless 1 <= k <= n.
SolveResult Greedy(const SetFunction& f, std::size_t k);

// Lazy greedy. Stale gains are upper bounds for submodular f, so an element
// is re-evaluated only when it reaches the head of the queue. Selects the
// same sequence as Greedy() for submodular f; correctness for other f is
// not checked.
SolveResult LazyGreedy(const SetFunction& f, std::size_t k);

// Stochastic greedy: each step draws min(s, |V \ S|) candidates uniformly
// without replacement and takes the best of them. Deterministic given
// (seed, stream, f, k, s).
SolveResult StochasticGreedy(const SetFunction& f, std::size_t k,
                             const StochasticConfig& config);

// Optimality-gap trace delta_l = OPT - f(S_l) for l = 0..k.
struct GapDiagnostic {
  std::vector<double> deltas;
  // deltas[l+1] / deltas[l]; empty where deltas[l] == 0.
  std::vector<std::optional<double>> ratios;
  // delta_{l+1} <= (1 - 1/k) delta_l + tolerance at every step.
  bool contraction_holds = true;
  // First step l (0-based) where the contraction fails.
  std::optional<std::size_t> first_violation;
};

// Throws DomainError if the oracle was computed for a different k.
GapDiagnostic ComputeGapDiagnostic(const SolveResult& result,
                                   const OracleResult& oracle);

}  // namespace submod

#endif  // SUBMOD_SOLVERS_H_
