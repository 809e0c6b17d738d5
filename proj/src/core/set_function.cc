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

#include "submod/set_function.h"

#include <cmath>
#include <unordered_set>
#include <utility>

#include "submod/errors.h"

namespace submod {

GroundSet::GroundSet(std::size_t size) : size_(size) {
  if (size == 0) throw DomainError("ground set must have at least one element");
}

GroundSet::GroundSet(std::size_t size, std::vector<std::string> labels)
    : GroundSet(size) {
  if (labels.empty()) return;
  if (labels.size() != size) {
    throw DomainError("expected " + std::to_string(size) + " labels, got " +
                      std::to_string(labels.size()));
  }
  std::unordered_set<std::string> seen;
  for (const auto& label : labels) {
    if (!seen.insert(label).second) {
      throw DomainError("duplicate element label '" + label + "'");
    }
  }
  labels_ = std::move(labels);
}

std::string GroundSet::Label(std::size_t element) const {
  if (element >= size_) {
    throw DomainError("element index " + std::to_string(element) +
                      " out of range for ground set of size " +
                      std::to_string(size_));
  }
  return labels_.empty() ? std::to_string(element) : labels_[element];
}

SetFunction::SetFunction(GroundSet ground_set)
    : ground_set_(std::move(ground_set)) {}

double SetFunction::Evaluate(const Subset& subset) const {
  if (subset.universe_size() != size()) {
    throw DomainError("subset over a ground set of size " +
                      std::to_string(subset.universe_size()) +
                      " passed to a function over size " +
                      std::to_string(size()));
  }
  if (subset.empty()) return 0.0;
  const double value = EvaluateNonEmpty(subset);
  if (!std::isfinite(value)) {
    throw DomainError("set function returned a non-finite value at " +
                      subset.ToString());
  }
  return value;
}

double MarginalGain(const SetFunction& f, const Subset& base,
                    std::size_t element) {
  if (base.Contains(element)) return 0.0;
  return f.Evaluate(base.With(element)) - f.Evaluate(base);
}

CountingFunction::CountingFunction(const SetFunction& inner)
    : SetFunction(inner.ground_set()), inner_(&inner) {}

double CountingFunction::EvaluateNonEmpty(const Subset& subset) const {
  ++count_;
  return inner_->Evaluate(subset);
}

CallbackFunction::CallbackFunction(GroundSet ground_set, Callback callback)
    : SetFunction(std::move(ground_set)), callback_(std::move(callback)) {}

double CallbackFunction::EvaluateNonEmpty(const Subset& subset) const {
  return callback_(subset);
}

}  // namespace submod
