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

#ifndef SUBMOD_SUBSET_H_
#define SUBMOD_SUBSET_H_

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace submod {

// A subset of the ground set {0, ..., n-1}, stored as a packed bitset.
//
// Membership is O(1); iteration visits members in ascending index order.
// Every Subset remembers the size of the universe it was built for, and
// operations mixing subsets of different universes are rejected.
class Subset {
 public:
  Subset() = default;
  explicit Subset(std::size_t universe_size);

  // Throws DomainError naming the first out-of-range index. Duplicates are
  // absorbed.
  static Subset FromIndices(std::size_t universe_size,
                            std::span<const std::size_t> indices);
  static Subset FromIndices(std::size_t universe_size,
                            std::initializer_list<std::size_t> indices);
  // Bit j of `mask` selects element j. Requires universe_size <= 64.
  static Subset FromMask(std::size_t universe_size, std::uint64_t mask);
  static Subset Full(std::size_t universe_size);

  std::size_t universe_size() const { return universe_size_; }
  std::size_t size() const;
  bool empty() const;

  bool Contains(std::size_t element) const;
  void Insert(std::size_t element);
  void Erase(std::size_t element);

  // Copy with `element` added.
  Subset With(std::size_t element) const;

  Subset Union(const Subset& other) const;
  Subset Intersection(const Subset& other) const;
  bool IsSubsetOf(const Subset& other) const;

  // Low 64 bits of the membership mask.
  std::uint64_t LowMask() const { return words_.empty() ? 0 : words_[0]; }

  std::vector<std::size_t> Members() const;

  template <typename Fn>
  void ForEach(Fn&& fn) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits != 0) {
        const int bit = std::countr_zero(bits);
        fn(w * 64 + static_cast<std::size_t>(bit));
        bits &= bits - 1;
      }
    }
  }

  // "{0, 2}" style rendering.
  std::string ToString() const;

  friend bool operator==(const Subset&, const Subset&) = default;

 private:
  void CheckIndex(std::size_t element) const;
  void CheckSameUniverse(const Subset& other) const;

  std::size_t universe_size_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace submod

#endif  // SUBMOD_SUBSET_H_
