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

#ifndef SUBMOD_FUNCTIONS_H_
#define SUBMOD_FUNCTIONS_H_

#include <cstddef>
#include <span>
#include <vector>

#include "submod/set_function.h"

namespace submod {

// Dense row-major m x n matrix of non-negative values. Row i is a customer,
// column j a candidate facility location.
class FacilityMatrix {
 public:
  // Throws DomainError on empty dimensions, a size mismatch, or a negative
  // or non-finite entry (the message carries the 1-based row and column).
  FacilityMatrix(std::size_t rows, std::size_t cols,
                 std::vector<double> entries);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  double operator()(std::size_t row, std::size_t col) const {
    return entries_[row * cols_ + col];
  }
  std::span<const double> row(std::size_t i) const {
    return {entries_.data() + i * cols_, cols_};
  }
  const std::vector<double>& entries() const { return entries_; }

  friend bool operator==(const FacilityMatrix&,
                         const FacilityMatrix&) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<double> entries_;
};

// f(A) = sum_i max_{j in A} M_ij, and f(empty) = 0.
//
// Row maxima are recomputed on every call, so each call is one honest
// evaluation for counting purposes.
class FacilityFunction : public SetFunction {
 public:
  explicit FacilityFunction(FacilityMatrix matrix);
  FacilityFunction(FacilityMatrix matrix, std::vector<std::string> labels);

  const FacilityMatrix& matrix() const { return matrix_; }

 protected:
  double EvaluateNonEmpty(const Subset& subset) const override;

 private:
  FacilityMatrix matrix_;
};

// f(A) = sum_{j in A} w_j. Monotone for non-negative weights, and
// submodular with equality.
class ModularFunction : public SetFunction {
 public:
  // Throws DomainError on an empty or non-finite weight vector.
  explicit ModularFunction(std::vector<double> weights);

  const std::vector<double>& weights() const { return weights_; }

 protected:
  double EvaluateNonEmpty(const Subset& subset) const override;

 private:
  std::vector<double> weights_;
};

// f(A) = (sum_{j in A} w_j)^2. Supermodular; exists so that refutation
// paths can be driven from instance files.
class SquaredModularFunction : public SetFunction {
 public:
  explicit SquaredModularFunction(std::vector<double> weights);

  const std::vector<double>& weights() const { return weights_; }

 protected:
  double EvaluateNonEmpty(const Subset& subset) const override;

 private:
  std::vector<double> weights_;
};

}  // namespace submod

#endif  // SUBMOD_FUNCTIONS_H_
