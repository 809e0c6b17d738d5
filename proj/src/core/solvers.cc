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

#include "submod/solvers.h"

#include <algorithm>
#include <cmath>
#include <queue>
#include <vector>

#include "submod/errors.h"
#include "submod/random.h"

namespace submod {
namespace {

void CheckBudget(const SetFunction& f, std::size_t k) {
  if (k < 1) throw DomainError("k must be at least 1");
  if (k > f.size()) {
    throw DomainError("k exceeds ground set size (k = " + std::to_string(k) +
                      ", n = " + std::to_string(f.size()) + ")");
  }
}

// Accumulates the common parts of a solve: the current set, its cached
// value, and the step trace.
class Selection {
 public:
  Selection(Algorithm algorithm, std::size_t n, std::size_t k)
      : current_(n) {
    result_.algorithm = algorithm;
    result_.k = k;
    result_.trace.reserve(k);
  }

  const Subset& current() const { return current_; }
  double value() const { return value_; }

  void Accept(std::size_t element, double new_value) {
    const double gain = new_value - value_;
    current_.Insert(element);
    value_ = new_value;
    result_.trace.push_back(StepRecord{.step = result_.trace.size() + 1,
                                       .element = element,
                                       .gain = gain,
                                       .objective = new_value});
  }

  SolveResult Finish(std::uint64_t evaluations) {
    result_.selected = current_;
    result_.evaluations = evaluations;
    return std::move(result_);
  }

 private:
  Subset current_;
  double value_ = 0.0;
  SolveResult result_;
};

// Orders the lazy queue so that top() is the entry that ranks ahead.
struct QueueOrder {
  bool operator()(const LazyQueueEntry& x, const LazyQueueEntry& y) const {
    return RanksAhead(y.cached_gain, y.element, x.cached_gain, x.element);
  }
};

}  // namespace

std::string AlgorithmName(Algorithm algorithm) {
  switch (algorithm) {
    case Algorithm::kGreedy:
      return "greedy";
    case Algorithm::kLazyGreedy:
      return "lazy";
    case Algorithm::kStochasticGreedy:
      return "stochastic";
  }
  return "unknown";
}

double SolveResult::objective() const {
  return trace.empty() ? 0.0 : trace.back().objective;
}

std::vector<std::size_t> SolveResult::picks() const {
  std::vector<std::size_t> out;
  out.reserve(trace.size());
  for (const auto& step : trace) out.push_back(step.element);
  return out;
}

StochasticConfig StochasticConfig::FromEpsilon(double epsilon,
                                               std::uint64_t seed,
                                               std::uint64_t stream) {
  if (!(epsilon > 0.0 && epsilon < 1.0)) {
    throw DomainError("epsilon must lie in (0, 1), got " +
                      std::to_string(epsilon));
  }
  StochasticConfig config;
  config.epsilon_ = epsilon;
  config.seed_ = seed;
  config.stream_ = stream;
  return config;
}

StochasticConfig StochasticConfig::FromSampleSize(std::size_t sample_size,
                                                  std::uint64_t seed,
                                                  std::uint64_t stream) {
  if (sample_size == 0) throw DomainError("sample size must be at least 1");
  StochasticConfig config;
  config.sample_size_ = sample_size;
  config.seed_ = seed;
  config.stream_ = stream;
  return config;
}

std::size_t StochasticConfig::ResolveSampleSize(std::size_t n,
                                                std::size_t k) const {
  if (sample_size_) return *sample_size_;
  return SampleSize(n, k, *epsilon_);
}

std::size_t SampleSize(std::size_t n, std::size_t k, double epsilon) {
  if (k < 1 || k > n) {
    throw DomainError("k = " + std::to_string(k) +
                      " must lie in [1, n] for n = " + std::to_string(n));
  }
  if (!(epsilon > 0.0 && epsilon < 1.0)) {
    throw DomainError("epsilon must lie in (0, 1), got " +
                      std::to_string(epsilon));
  }
  const double raw = std::ceil(static_cast<double>(n) /
                               static_cast<double>(k) * std::log(1.0 / epsilon));
  return std::max<std::size_t>(1, static_cast<std::size_t>(raw));
}

SolveResult Greedy(const SetFunction& f, std::size_t k) {
  CheckBudget(f, k);
  const std::size_t n = f.size();
  CountingFunction counted(f);
  Selection selection(Algorithm::kGreedy, n, k);

  for (std::size_t step = 1; step <= k; ++step) {
    std::size_t best = n;
    double best_gain = 0.0;
    double best_value = 0.0;
    for (std::size_t v = 0; v < n; ++v) {
      if (selection.current().Contains(v)) continue;
      const double value = counted.Evaluate(selection.current().With(v));
      const double gain = value - selection.value();
      if (best == n || RanksAhead(gain, v, best_gain, best)) {
        best = v;
        best_gain = gain;
        best_value = value;
      }
    }
    selection.Accept(best, best_value);
  }
  return selection.Finish(counted.count());
}

SolveResult LazyGreedy(const SetFunction& f, std::size_t k) {
  CheckBudget(f, k);
  const std::size_t n = f.size();
  CountingFunction counted(f);
  Selection selection(Algorithm::kLazyGreedy, n, k);

  // Step 1 is plain greedy: every singleton is evaluated against S_0.
  std::vector<LazyQueueEntry> initial;
  initial.reserve(n);
  for (std::size_t v = 0; v < n; ++v) {
    const double value = counted.Evaluate(Subset::FromIndices(n, {v}));
    initial.push_back({.element = v,
                       .cached_gain = value,
                       .cached_value = value,
                       .stamp = 1});
  }
  std::priority_queue<LazyQueueEntry, std::vector<LazyQueueEntry>, QueueOrder>
      queue(QueueOrder{}, std::move(initial));

  for (std::size_t step = 1; step <= k; ++step) {
    while (true) {
      LazyQueueEntry top = queue.top();
      queue.pop();
      if (top.stamp == step) {
        // Fresh for this step and ahead of every other bound.
        selection.Accept(top.element, top.cached_value);
        break;
      }
      const double value =
          counted.Evaluate(selection.current().With(top.element));
      top.cached_gain = value - selection.value();
      top.cached_value = value;
      top.stamp = step;
      if (queue.empty() ||
          RanksAhead(top.cached_gain, top.element, queue.top().cached_gain,
                     queue.top().element)) {
        selection.Accept(top.element, top.cached_value);
        break;
      }
      queue.push(top);
    }
  }
  return selection.Finish(counted.count());
}

SolveResult StochasticGreedy(const SetFunction& f, std::size_t k,
                             const StochasticConfig& config) {
  CheckBudget(f, k);
  const std::size_t n = f.size();
  const std::size_t sample_size = config.ResolveSampleSize(n, k);
  CountingFunction counted(f);
  Rng rng(config.seed(), config.stream());
  Selection selection(Algorithm::kStochasticGreedy, n, k);

  std::vector<std::size_t> pool(n);
  for (std::size_t v = 0; v < n; ++v) pool[v] = v;

  for (std::size_t step = 1; step <= k; ++step) {
    const std::vector<std::size_t> sample =
        SampleWithoutReplacement(pool, sample_size, rng);
    std::size_t best = n;
    double best_gain = 0.0;
    double best_value = 0.0;
    for (std::size_t v : sample) {
      const double value = counted.Evaluate(selection.current().With(v));
      const double gain = value - selection.value();
      if (best == n || RanksAhead(gain, v, best_gain, best)) {
        best = v;
        best_gain = gain;
        best_value = value;
      }
    }
    selection.Accept(best, best_value);
    pool.erase(std::find(pool.begin(), pool.end(), best));
  }
  SolveResult result = selection.Finish(counted.count());
  result.seed = config.seed();
  result.stream = config.stream();
  result.sample_size = sample_size;
  return result;
}

GapDiagnostic ComputeGapDiagnostic(const SolveResult& result,
                                   const OracleResult& oracle) {
  if (oracle.best_set.size() != result.k) {
    throw DomainError("oracle was computed for k = " +
                      std::to_string(oracle.best_set.size()) +
                      " but the solve used k = " + std::to_string(result.k));
  }
  const double opt = oracle.best_value;
  const double contraction = 1.0 - 1.0 / static_cast<double>(result.k);
  const double tolerance = kViolationTolerance * std::max(1.0, std::abs(opt));

  GapDiagnostic gap;
  gap.deltas.push_back(opt);
  for (const auto& step : result.trace) gap.deltas.push_back(opt - step.objective);

  for (std::size_t l = 0; l + 1 < gap.deltas.size(); ++l) {
    const double now = gap.deltas[l];
    const double next = gap.deltas[l + 1];
    gap.ratios.push_back(now != 0.0 ? std::optional<double>(next / now)
                                    : std::nullopt);
    if (next > contraction * now + tolerance) {
      gap.contraction_holds = false;
      if (!gap.first_violation) gap.first_violation = l;
    }
  }
  return gap;
}

}  // namespace submod
