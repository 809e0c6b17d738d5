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

#include "submod/instance_io.h"

#include <charconv>
#include <cmath>
#include <cstring>
#include <fstream>
#include <sstream>
#include <utility>

#include "submod/errors.h"

namespace submod {
namespace {

std::string_view Trim(std::string_view s) {
  const char* ws = " \t\r\n";
  const auto begin = s.find_first_not_of(ws);
  if (begin == std::string_view::npos) return {};
  const auto end = s.find_last_not_of(ws);
  return s.substr(begin, end - begin + 1);
}

std::vector<std::string_view> SplitLines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto nl = text.find('\n', start);
    if (nl == std::string_view::npos) {
      lines.push_back(text.substr(start));
      break;
    }
    lines.push_back(text.substr(start, nl - start));
    start = nl + 1;
  }
  // Blank trailing lines are ignored.
  while (!lines.empty() && Trim(lines.back()).empty()) lines.pop_back();
  return lines;
}

std::vector<std::string_view> SplitFields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    fields.push_back(Trim(line.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return fields;
}

bool ParseReal(std::string_view field, double& out) {
  if (!field.empty() && field.front() == '+') field.remove_prefix(1);
  const auto [ptr, ec] =
      std::from_chars(field.data(), field.data() + field.size(), out);
  return ec == std::errc() && ptr == field.data() + field.size() &&
         std::isfinite(out);
}

std::string ReadFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

class Fnv1a {
 public:
  void Add(std::uint64_t word) {
    for (int byte = 0; byte < 8; ++byte) {
      hash_ ^= (word >> (8 * byte)) & 0xffU;
      hash_ *= 0x100000001b3ULL;
    }
  }
  void Add(double value) {
    std::uint64_t bits;
    std::memcpy(&bits, &value, sizeof bits);
    Add(bits);
  }
  std::uint64_t value() const { return hash_; }

 private:
  std::uint64_t hash_ = 0xcbf29ce484222325ULL;
};

}  // namespace

std::string InstanceKindName(InstanceKind kind) {
  switch (kind) {
    case InstanceKind::kFacility:
      return "facility";
    case InstanceKind::kModular:
      return "modular";
    case InstanceKind::kSquaredModular:
      return "squared";
  }
  return "unknown";
}

InstanceKind ParseInstanceKind(std::string_view name) {
  if (name == "facility") return InstanceKind::kFacility;
  if (name == "modular") return InstanceKind::kModular;
  if (name == "squared") return InstanceKind::kSquaredModular;
  throw DomainError("unknown instance kind '" + std::string(name) + "'");
}

InstanceKind InferInstanceKind(const std::filesystem::path& path) {
  const std::string ext = path.extension().string();
  if (ext == ".csv") return InstanceKind::kFacility;
  if (ext == ".weights") return InstanceKind::kModular;
  if (ext == ".sqweights") return InstanceKind::kSquaredModular;
  throw DomainError("cannot infer instance kind from extension '" + ext +
                    "'; pass --kind");
}

ParsedMatrix ParseMatrixCsv(std::string_view text, bool has_header) {
  const std::vector<std::string_view> lines = SplitLines(text);
  std::size_t first_data = 0;
  std::vector<std::string> labels;
  if (has_header) {
    if (lines.empty()) throw ParseError("empty input: no header row");
    for (auto field : SplitFields(lines[0])) labels.emplace_back(field);
    first_data = 1;
  }
  if (lines.size() <= first_data) throw ParseError("empty input: no data rows");

  std::size_t cols = 0;
  std::vector<double> entries;
  for (std::size_t li = first_data; li < lines.size(); ++li) {
    const std::size_t line_number = li + 1;
    if (Trim(lines[li]).empty()) {
      throw ParseError("blank line at row " + std::to_string(line_number));
    }
    const auto fields = SplitFields(lines[li]);
    if (li == first_data) {
      cols = fields.size();
    } else if (fields.size() != cols) {
      throw ParseError("ragged row at row " + std::to_string(line_number) +
                       ": expected " + std::to_string(cols) +
                       " fields, found " + std::to_string(fields.size()));
    }
    for (std::size_t c = 0; c < fields.size(); ++c) {
      double value = 0.0;
      if (!ParseReal(fields[c], value)) {
        throw ParseError("invalid number '" + std::string(fields[c]) +
                         "' at row " + std::to_string(line_number) +
                         ", column " + std::to_string(c + 1));
      }
      if (value < 0.0) {
        throw DomainError("negative entry " + std::string(fields[c]) +
                          " at row " + std::to_string(line_number) +
                          ", column " + std::to_string(c + 1));
      }
      entries.push_back(value);
    }
  }
  if (has_header && labels.size() != cols) {
    throw ParseError("header has " + std::to_string(labels.size()) +
                     " fields but data rows have " + std::to_string(cols));
  }
  const std::size_t rows = lines.size() - first_data;
  return ParsedMatrix{FacilityMatrix(rows, cols, std::move(entries)),
                      std::move(labels)};
}

ParsedMatrix ReadMatrixCsv(const std::filesystem::path& path,
                           bool has_header) {
  return ParseMatrixCsv(ReadFile(path), has_header);
}

std::string FormatMatrixCsv(const FacilityMatrix& matrix) {
  std::string out;
  char buffer[64];
  for (std::size_t i = 0; i < matrix.rows(); ++i) {
    for (std::size_t j = 0; j < matrix.cols(); ++j) {
      if (j > 0) out += ',';
      const auto [ptr, ec] =
          std::to_chars(buffer, buffer + sizeof buffer, matrix(i, j),
                        std::chars_format::general, 17);
      out.append(buffer, ptr);
    }
    out += '\n';
  }
  return out;
}

std::vector<double> ParseWeights(std::string_view text) {
  std::vector<double> weights;
  std::size_t line_number = 0;
  for (std::string_view line : SplitLines(text)) {
    ++line_number;
    line = Trim(line);
    if (line.empty() || line.front() == '#') continue;
    std::size_t pos = 0;
    while (pos < line.size()) {
      const auto start = line.find_first_not_of(" \t\r,", pos);
      if (start == std::string_view::npos) break;
      auto end = line.find_first_of(" \t\r,", start);
      if (end == std::string_view::npos) end = line.size();
      const std::string_view token = line.substr(start, end - start);
      double value = 0.0;
      if (!ParseReal(token, value)) {
        throw ParseError("invalid weight '" + std::string(token) +
                         "' on line " + std::to_string(line_number));
      }
      if (value < 0.0) {
        throw DomainError("negative weight " + std::string(token) +
                          " on line " + std::to_string(line_number));
      }
      weights.push_back(value);
      pos = end;
    }
  }
  if (weights.empty()) throw ParseError("empty input: no weights");
  return weights;
}

std::vector<double> ReadWeights(const std::filesystem::path& path) {
  return ParseWeights(ReadFile(path));
}

Instance MakeFacilityInstance(FacilityMatrix matrix,
                              std::vector<std::string> labels) {
  Instance instance;
  instance.kind = InstanceKind::kFacility;
  instance.rows = matrix.rows();
  instance.cols = matrix.cols();
  Fnv1a hash;
  hash.Add(static_cast<std::uint64_t>(instance.kind));
  hash.Add(static_cast<std::uint64_t>(instance.rows));
  hash.Add(static_cast<std::uint64_t>(instance.cols));
  for (double v : matrix.entries()) hash.Add(v);
  instance.checksum = hash.value();
  instance.function = std::make_unique<FacilityFunction>(std::move(matrix),
                                                         std::move(labels));
  return instance;
}

Instance MakeWeightsInstance(InstanceKind kind, std::vector<double> weights) {
  Instance instance;
  instance.kind = kind;
  instance.rows = 1;
  instance.cols = weights.size();
  Fnv1a hash;
  hash.Add(static_cast<std::uint64_t>(kind));
  hash.Add(std::uint64_t{1});
  hash.Add(static_cast<std::uint64_t>(weights.size()));
  for (double v : weights) hash.Add(v);
  instance.checksum = hash.value();
  switch (kind) {
    case InstanceKind::kModular:
      instance.function = std::make_unique<ModularFunction>(std::move(weights));
      break;
    case InstanceKind::kSquaredModular:
      instance.function =
          std::make_unique<SquaredModularFunction>(std::move(weights));
      break;
    case InstanceKind::kFacility:
      throw DomainError("facility instances need a matrix, not weights");
  }
  return instance;
}

Instance LoadInstance(const std::filesystem::path& path, InstanceKind kind,
                      bool has_header) {
  if (kind == InstanceKind::kFacility) {
    ParsedMatrix parsed = ReadMatrixCsv(path, has_header);
    return MakeFacilityInstance(std::move(parsed.matrix),
                                std::move(parsed.labels));
  }
  return MakeWeightsInstance(kind, ReadWeights(path));
}

}  // namespace submod
