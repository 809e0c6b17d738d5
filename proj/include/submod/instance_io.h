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

#ifndef SUBMOD_INSTANCE_IO_H_
#define SUBMOD_INSTANCE_IO_H_

#include <cstdint>
#include <filesystem>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "submod/functions.h"
#include "submod/set_function.h"

namespace submod {

enum class InstanceKind { kFacility, kModular, kSquaredModular };

std::string InstanceKindName(InstanceKind kind);
// Accepts "facility", "modular", "squared". Throws DomainError otherwise.
InstanceKind ParseInstanceKind(std::string_view name);
// .csv -> facility, .weights -> modular, .sqweights -> squared.
// Throws DomainError for any other extension.
InstanceKind InferInstanceKind(const std::filesystem::path& path);

struct ParsedMatrix {
  FacilityMatrix matrix;
  // Header fields when a header row was requested; otherwise empty.
  std::vector<std::string> labels;
};

// Parses rows of comma-separated decimal reals. Blank trailing lines are
// ignored. With `has_header`, the first line supplies column labels.
// Errors: ParseError for empty input, ragged rows, or bad numbers (messages
// carry the 1-based line number); DomainError for a negative entry.
ParsedMatrix ParseMatrixCsv(std::string_view text, bool has_header);
ParsedMatrix ReadMatrixCsv(const std::filesystem::path& path, bool has_header);

// Writes the matrix with 17 significant digits so that parsing the output
// reproduces every entry bit-exactly.
std::string FormatMatrixCsv(const FacilityMatrix& matrix);

// Weight lists: reals separated by commas and/or whitespace. Lines starting
// with '#' are comments.
std::vector<double> ParseWeights(std::string_view text);
std::vector<double> ReadWeights(const std::filesystem::path& path);

// A loaded instance plus what reports need to describe it.
struct Instance {
  InstanceKind kind = InstanceKind::kFacility;
  std::unique_ptr<SetFunction> function;
  std::size_t rows = 1;
  std::size_t cols = 0;
  // FNV-1a over the dimensions and the IEEE-754 bit patterns of the data.
  std::uint64_t checksum = 0;
};

Instance MakeFacilityInstance(FacilityMatrix matrix,
                              std::vector<std::string> labels = {});
Instance MakeWeightsInstance(InstanceKind kind, std::vector<double> weights);

Instance LoadInstance(const std::filesystem::path& path, InstanceKind kind,
                      bool has_header);

}  // namespace submod

#endif  // SUBMOD_INSTANCE_IO_H_
