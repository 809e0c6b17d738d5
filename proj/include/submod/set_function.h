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

#ifndef SUBMOD_SET_FUNCTION_H_
#define SUBMOD_SET_FUNCTION_H_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "submod/subset.h"

namespace submod {

// The finite ground set V = {0, ..., n-1}. Labels are presentation-only.
class GroundSet {
 public:
  // Throws DomainError if size == 0.
  explicit GroundSet(std::size_t size);
  // Throws DomainError unless labels has `size` distinct entries.
  GroundSet(std::size_t size, std::vector<std::string> labels);

  std::size_t size() const { return size_; }
  bool has_labels() const { return !labels_.empty(); }
  // Decimal index when no labels were given.
  std::string Label(std::size_t element) const;
  const std::vector<std::string>& labels() const { return labels_; }

 private:
  std::size_t size_;
  std::vector<std::string> labels_;
};

// A set function f over a ground set with f(empty) = 0.
//
// Evaluate() enforces the normalization at the boundary: the empty set
// returns 0 without consulting the implementation, and subsets built for a
// different universe are rejected. Implementations must be pure.
class SetFunction {
 public:
  explicit SetFunction(GroundSet ground_set);
  virtual ~SetFunction() = default;

  SetFunction(const SetFunction&) = default;
  SetFunction& operator=(const SetFunction&) = default;

  const GroundSet& ground_set() const { return ground_set_; }
  std::size_t size() const { return ground_set_.size(); }

  double Evaluate(const Subset& subset) const;

  Subset EmptySet() const { return Subset(size()); }

 protected:
  virtual double EvaluateNonEmpty(const Subset& subset) const = 0;

 private:
  GroundSet ground_set_;
};

// Delta f(v | A) = f(A u {v}) - f(A). Returns exactly 0 without evaluating
// when v is already in A.
double MarginalGain(const SetFunction& f, const Subset& base,
                    std::size_t element);

// Tallies evaluations of the wrapped function. Evaluating the empty set is
// free. Not safe to share across threads; give each worker its own wrapper.
class CountingFunction : public SetFunction {
 public:
  // `inner` must outlive the wrapper.
  explicit CountingFunction(const SetFunction& inner);

  std::uint64_t count() const { return count_; }
  void Reset() { count_ = 0; }

 protected:
  double EvaluateNonEmpty(const Subset& subset) const override;

 private:
  const SetFunction* inner_;
  mutable std::uint64_t count_ = 0;
};

// Adapts a callable to the SetFunction contract. Mostly used for crafted
// fixtures in tests and property checks.
class CallbackFunction : public SetFunction {
 public:
  using Callback = std::function<double(const Subset&)>;

  CallbackFunction(GroundSet ground_set, Callback callback);

 protected:
  double EvaluateNonEmpty(const Subset& subset) const override;

 private:
  Callback callback_;
};

}  // namespace submod

#endif  // SUBMOD_SET_FUNCTION_H_
