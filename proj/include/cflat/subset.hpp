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

#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace cflat {

// Ground sets are capped at 64 elements so a subset fits in one word.
inline constexpr int kMaxGroundSize = 64;

// A subset of an ordered ground set, stored as a bitmask over element
// indices.
class Subset {
 public:
  constexpr Subset() = default;
  constexpr explicit Subset(std::uint64_t bits) : bits_(bits) {}

  static constexpr Subset singleton(int i) { return Subset(std::uint64_t{1} << i); }
  // The first n elements {0, ..., n-1}.
  static constexpr Subset prefix(int n) {
    return Subset(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool contains(int i) const { return (bits_ >> i) & 1U; }
  constexpr bool is_subset_of(Subset other) const {
    return (bits_ & ~other.bits_) == 0;
  }
  constexpr bool is_proper_subset_of(Subset other) const {
    return is_subset_of(other) && bits_ != other.bits_;
  }
  constexpr bool comparable(Subset other) const {
    return is_subset_of(other) || other.is_subset_of(*this);
  }
  constexpr Subset with(int i) const { return Subset(bits_ | (std::uint64_t{1} << i)); }
  constexpr Subset without(int i) const { return Subset(bits_ & ~(std::uint64_t{1} << i)); }
  // Index of the lowest element; undefined on the empty set.
  constexpr int lowest() const { return std::countr_zero(bits_); }

  std::vector<int> elements() const;

  friend constexpr Subset operator|(Subset a, Subset b) { return Subset(a.bits_ | b.bits_); }
  friend constexpr Subset operator&(Subset a, Subset b) { return Subset(a.bits_ & b.bits_); }
  // Set difference.
  friend constexpr Subset operator-(Subset a, Subset b) { return Subset(a.bits_ & ~b.bits_); }
  friend constexpr bool operator==(Subset a, Subset b) = default;

 private:
  std::uint64_t bits_ = 0;
};

// Canonical order: by size, then lexicographically by sorted index list.
constexpr bool canonical_less(Subset a, Subset b) {
  if (a.size() != b.size()) return a.size() < b.size();
  const std::uint64_t diff = a.bits() ^ b.bits();
  if (diff == 0) return false;
  // For equal sizes, the set owning the lowest differing index is smaller.
  return (a.bits() & (diff & (~diff + 1))) != 0;
}

struct CanonicalLess {
  constexpr bool operator()(Subset a, Subset b) const { return canonical_less(a, b); }
};

struct SubsetHash {
  std::size_t operator()(Subset s) const noexcept {
    return std::hash<std::uint64_t>{}(s.bits());
  }
};

// Ordered finite ground set with distinct string labels.
class GroundSet {
 public:
  GroundSet() = default;
  explicit GroundSet(std::vector<std::string> labels);

  int size() const { return static_cast<int>(labels_.size()); }
  const std::string& label(int i) const { return labels_.at(i); }
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<int> index_of(const std::string& label) const;
  bool contains(const std::string& label) const { return index_.count(label) != 0; }

  Subset all() const { return Subset::prefix(size()); }
  // Throws kUnknownLabel for names not in the ground set.
  Subset subset_of(std::span<const std::string> names) const;
  std::vector<std::string> names_of(Subset s) const;
  // "{a,b,c}"
  std::string format(Subset s) const;

  friend bool operator==(const GroundSet& a, const GroundSet& b) {
    return a.labels_ == b.labels_;
  }

 private:
  std::vector<std::string> labels_;
  std::unordered_map<std::string, int> index_;
};

// Labels a, b, c, ... for small n and e1, e2, ... otherwise.
std::vector<std::string> default_labels(int n);

// A collection of distinct subsets of a ground set, kept in canonical order.
class SetFamily {
 public:
  SetFamily() = default;
  // Sorts canonically; throws kDuplicateSet on repeats.
  SetFamily(GroundSet ground, std::vector<Subset> sets);

  const GroundSet& ground() const { return ground_; }
  const std::vector<Subset>& sets() const { return sets_; }
  int size() const { return static_cast<int>(sets_.size()); }
  Subset operator[](int i) const { return sets_[i]; }

 private:
  GroundSet ground_;
  std::vector<Subset> sets_;
};

}  // namespace cflat
