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

#include "submod/subset.h"

#include <algorithm>

#include "submod/errors.h"

namespace submod {
namespace {

std::size_t WordCount(std::size_t universe_size) {
  return (universe_size + 63) / 64;
}

}  // namespace

Subset::Subset(std::size_t universe_size)
    : universe_size_(universe_size), words_(WordCount(universe_size), 0) {}

Subset Subset::FromIndices(std::size_t universe_size,
                           std::span<const std::size_t> indices) {
  Subset s(universe_size);
  for (std::size_t i : indices) s.Insert(i);
  return s;
}

Subset Subset::FromIndices(std::size_t universe_size,
                           std::initializer_list<std::size_t> indices) {
  return FromIndices(universe_size,
                     std::span<const std::size_t>(indices.begin(),
                                                  indices.size()));
}

Subset Subset::FromMask(std::size_t universe_size, std::uint64_t mask) {
  if (universe_size > 64) {
    throw DomainError("Subset::FromMask requires a universe of at most 64");
  }
  if (universe_size < 64 && (mask >> universe_size) != 0) {
    throw DomainError("mask has bits outside the universe of size " +
                      std::to_string(universe_size));
  }
  Subset s(universe_size);
  if (!s.words_.empty()) s.words_[0] = mask;
  return s;
}

Subset Subset::Full(std::size_t universe_size) {
  Subset s(universe_size);
  for (std::size_t w = 0; w < s.words_.size(); ++w) s.words_[w] = ~0ULL;
  if (const std::size_t tail = universe_size % 64; tail != 0) {
    s.words_.back() = (1ULL << tail) - 1;
  }
  return s;
}

std::size_t Subset::size() const {
  std::size_t total = 0;
  for (std::uint64_t w : words_) total += std::popcount(w);
  return total;
}

bool Subset::empty() const {
  return std::all_of(words_.begin(), words_.end(),
                     [](std::uint64_t w) { return w == 0; });
}

void Subset::CheckIndex(std::size_t element) const {
  if (element >= universe_size_) {
    throw DomainError("element index " + std::to_string(element) +
                      " out of range for ground set of size " +
                      std::to_string(universe_size_));
  }
}

void Subset::CheckSameUniverse(const Subset& other) const {
  if (other.universe_size_ != universe_size_) {
    throw DomainError("subsets belong to different ground sets (" +
                      std::to_string(universe_size_) + " vs " +
                      std::to_string(other.universe_size_) + ")");
  }
}

bool Subset::Contains(std::size_t element) const {
  CheckIndex(element);
  return (words_[element / 64] >> (element % 64)) & 1ULL;
}

void Subset::Insert(std::size_t element) {
  CheckIndex(element);
  words_[element / 64] |= 1ULL << (element % 64);
}

void Subset::Erase(std::size_t element) {
  CheckIndex(element);
  words_[element / 64] &= ~(1ULL << (element % 64));
}

Subset Subset::With(std::size_t element) const {
  Subset copy = *this;
  copy.Insert(element);
  return copy;
}

Subset Subset::Union(const Subset& other) const {
  CheckSameUniverse(other);
  Subset out = *this;
  for (std::size_t w = 0; w < words_.size(); ++w) out.words_[w] |= other.words_[w];
  return out;
}

Subset Subset::Intersection(const Subset& other) const {
  CheckSameUniverse(other);
  Subset out = *this;
  for (std::size_t w = 0; w < words_.size(); ++w) out.words_[w] &= other.words_[w];
  return out;
}

bool Subset::IsSubsetOf(const Subset& other) const {
  CheckSameUniverse(other);
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if ((words_[w] & ~other.words_[w]) != 0) return false;
  }
  return true;
}

std::vector<std::size_t> Subset::Members() const {
  std::vector<std::size_t> out;
  out.reserve(size());
  ForEach([&](std::size_t e) { out.push_back(e); });
  return out;
}

std::string Subset::ToString() const {
  std::string out = "{";
  bool first = true;
  ForEach([&](std::size_t e) {
    if (!first) out += ", ";
    out += std::to_string(e);
    first = false;
  });
  return out + "}";
}

}  // namespace submod
