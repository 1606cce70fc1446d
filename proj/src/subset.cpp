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

#include "cflat/subset.hpp"

#include <algorithm>

#include "cflat/error.hpp"

namespace cflat {

std::string_view errc_name(Errc code) {
  switch (code) {
    case Errc::kParseError: return "ParseError";
    case Errc::kUnknownLabel: return "UnknownLabel";
    case Errc::kDuplicateLabel: return "DuplicateLabel";
    case Errc::kDuplicateSet: return "DuplicateSet";
    case Errc::kCyclicCovers: return "CyclicCovers";
    case Errc::kNotALattice: return "NotALattice";
    case Errc::kAxiomViolation: return "AxiomViolation";
    case Errc::kGroundSetTooLarge: return "GroundSetTooLarge";
    case Errc::kTooLarge: return "TooLarge";
    case Errc::kTooManyCyclicFlats: return "TooManyCyclicFlats";
    case Errc::kNotRelaxable: return "NotRelaxable";
    case Errc::kOverlappingGroundSets: return "OverlappingGroundSets";
    case Errc::kRankZero: return "RankZero";
    case Errc::kLabelInUse: return "LabelInUse";
    case Errc::kDimensionMismatch: return "DimensionMismatch";
    case Errc::kNotNested: return "NotNested";
    case Errc::kChainTooShort: return "ChainTooShort";
    case Errc::kInvalidParameters: return "InvalidParameters";
    case Errc::kUnknownName: return "UnknownName";
  }
  return "Error";
}

std::vector<int> Subset::elements() const {
  std::vector<int> out;
  out.reserve(size());
  for (std::uint64_t b = bits_; b != 0; b &= b - 1) {
    out.push_back(std::countr_zero(b));
  }
  return out;
}

GroundSet::GroundSet(std::vector<std::string> labels) : labels_(std::move(labels)) {
  if (labels_.size() > static_cast<std::size_t>(kMaxGroundSize)) {
    throw Error(Errc::kGroundSetTooLarge,
                "ground set has " + std::to_string(labels_.size()) +
                    " elements; at most 64 are supported");
  }
  for (int i = 0; i < size(); ++i) {
    if (!index_.emplace(labels_[i], i).second) {
      throw Error(Errc::kDuplicateLabel, "duplicate ground label '" + labels_[i] + "'");
    }
  }
}

std::optional<int> GroundSet::index_of(const std::string& label) const {
  auto it = index_.find(label);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Subset GroundSet::subset_of(std::span<const std::string> names) const {
  Subset s;
  for (const auto& name : names) {
    auto idx = index_of(name);
    if (!idx) throw Error(Errc::kUnknownLabel, "unknown element '" + name + "'");
    s = s.with(*idx);
  }
  return s;
}

std::vector<std::string> GroundSet::names_of(Subset s) const {
  std::vector<std::string> out;
  for (int i : s.elements()) out.push_back(labels_.at(i));
  return out;
}

std::string GroundSet::format(Subset s) const {
  std::string out = "{";
  bool first = true;
  for (int i : s.elements()) {
    if (!first) out += ",";
    out += labels_.at(i);
    first = false;
  }
  return out + "}";
}

std::vector<std::string> default_labels(int n) {
  std::vector<std::string> out;
  out.reserve(n);
  for (int i = 0; i < n; ++i) {
    out.push_back(n <= 26 ? std::string(1, static_cast<char>('a' + i))
                          : "e" + std::to_string(i + 1));
  }
  return out;
}

SetFamily::SetFamily(GroundSet ground, std::vector<Subset> sets)
    : ground_(std::move(ground)), sets_(std::move(sets)) {
  std::sort(sets_.begin(), sets_.end(), CanonicalLess{});
  for (std::size_t i = 1; i < sets_.size(); ++i) {
    if (sets_[i] == sets_[i - 1]) {
      throw Error(Errc::kDuplicateSet, "duplicate set " + ground_.format(sets_[i]));
    }
  }
  for (Subset s : sets_) {
    if (!s.is_subset_of(ground_.all())) {
      throw Error(Errc::kUnknownLabel, "set refers to an index outside the ground set");
    }
  }
}

}  // namespace cflat
