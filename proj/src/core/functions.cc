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

#include "submod/functions.h"

#include <algorithm>
#include <cmath>
#include <utility>

#include "submod/errors.h"

namespace submod {
namespace {

void CheckWeights(const std::vector<double>& weights, bool require_non_negative) {
  if (weights.empty()) throw DomainError("weight vector must not be empty");
  for (std::size_t j = 0; j < weights.size(); ++j) {
    if (!std::isfinite(weights[j])) {
      throw DomainError("weight " + std::to_string(j) + " is not finite");
    }
    if (require_non_negative && weights[j] < 0.0) {
      throw DomainError("weight " + std::to_string(j) + " is negative");
    }
  }
}

}  // namespace

FacilityMatrix::FacilityMatrix(std::size_t rows, std::size_t cols,
                               std::vector<double> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (rows_ == 0 || cols_ == 0) {
    throw DomainError("facility matrix needs at least one row and one column");
  }
  if (entries_.size() != rows_ * cols_) {
    throw DomainError("facility matrix expects " +
                      std::to_string(rows_ * cols_) + " entries, got " +
                      std::to_string(entries_.size()));
  }
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      const double v = entries_[i * cols_ + j];
      if (!std::isfinite(v) || v < 0.0) {
        throw DomainError("facility matrix entry at row " +
                          std::to_string(i + 1) + ", column " +
                          std::to_string(j + 1) +
                          " must be finite and non-negative");
      }
    }
  }
}

FacilityFunction::FacilityFunction(FacilityMatrix matrix)
    : SetFunction(GroundSet(matrix.cols())), matrix_(std::move(matrix)) {}

FacilityFunction::FacilityFunction(FacilityMatrix matrix,
                                   std::vector<std::string> labels)
    : SetFunction(GroundSet(matrix.cols(), std::move(labels))),
      matrix_(std::move(matrix)) {}

double FacilityFunction::EvaluateNonEmpty(const Subset& subset) const {
  const std::vector<std::size_t> open = subset.Members();
  double total = 0.0;
  for (std::size_t i = 0; i < matrix_.rows(); ++i) {
    const auto row = matrix_.row(i);
    double best = row[open.front()];
    for (std::size_t j : open) best = std::max(best, row[j]);
    total += best;
  }
  return total;
}

ModularFunction::ModularFunction(std::vector<double> weights)
    : SetFunction(GroundSet(weights.size() == 0 ? 1 : weights.size())),
      weights_(std::move(weights)) {
  CheckWeights(weights_, /*require_non_negative=*/true);
}

double ModularFunction::EvaluateNonEmpty(const Subset& subset) const {
  double total = 0.0;
  subset.ForEach([&](std::size_t j) { total += weights_[j]; });
  return total;
}

SquaredModularFunction::SquaredModularFunction(std::vector<double> weights)
    : SetFunction(GroundSet(weights.size() == 0 ? 1 : weights.size())),
      weights_(std::move(weights)) {
  CheckWeights(weights_, /*require_non_negative=*/true);
}

double SquaredModularFunction::EvaluateNonEmpty(const Subset& subset) const {
  double total = 0.0;
  subset.ForEach([&](std::size_t j) { total += weights_[j]; });
  return total * total;
}

}  // namespace submod
