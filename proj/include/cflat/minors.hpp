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

#include <optional>
#include <string>
#include <vector>

#include "cflat/matroid.hpp"

namespace cflat {

// M / contraction \ deletion. The two sets must be disjoint.
struct MinorSpec {
  Subset contraction;
  Subset deletion;
  friend bool operator==(const MinorSpec&, const MinorSpec&) = default;
};

// Cyclic flats are the complements E - X, with rank |E - X| - r(M) + r(X).
Matroid dual(const Matroid& m);

// Rank oracle r(A ∪ C) - r(C) on E - C - D, then cyclic flats recomputed by
// enumeration. The minor keeps the surviving labels in their original order.
// Throws kInvalidParameters on overlapping sets, kGroundSetTooLarge past cap.
Matroid minor(const Matroid& m, const MinorSpec& spec, int cap = kDefaultEnumerationCap);
inline Matroid delete_element(const Matroid& m, int x) { return minor(m, {Subset(), Subset::singleton(x)}); }
inline Matroid contract_element(const Matroid& m, int x) { return minor(m, {Subset::singleton(x), Subset()}); }

// Drops a cyclic flat comparable only to the least and greatest ones.
// Throws kNotRelaxable otherwise.
Matroid relax(const Matroid& m, Subset flat);

// Ground order: M's labels then N's. Throws kOverlappingGroundSets.
Matroid direct_sum(const Matroid& m, const Matroid& n);

// (M + e) / e. Throws kRankZero when r(M) = 0.
Matroid truncate(const Matroid& m);
Matroid higgs_lift(const Matroid& m);

// Prefixes every label.
Matroid relabel(const Matroid& m, const std::string& prefix);
// Replaces labels position by position.
Matroid relabel(const Matroid& m, std::vector<std::string> labels);
// New ground order: position i of the result holds old element order[i].
Matroid reorder(const Matroid& m, const std::vector<int>& order);

struct IsoOptions {
  int max_ground = 13;
  // Nested matroids compare by their chain signature.
  bool nested_fast_path = true;
};

// Ground bijection (index in M -> index in N) carrying the ranked cyclic
// flats of M onto those of N. Throws kTooLarge beyond max_ground on the
// generic path.
std::optional<std::vector<int>> isomorphism(const Matroid& m, const Matroid& n,
                                            const IsoOptions& options = {});
inline bool is_isomorphic(const Matroid& m, const Matroid& n, const IsoOptions& options = {}) {
  return isomorphism(m, n, options).has_value();
}

struct MinorSearchOptions {
  int max_ground = 12;
};

// First (C, D) in canonical order with M / C \ D isomorphic to N, where C is
// independent and D coindependent. Throws kTooLarge beyond max_ground.
std::optional<MinorSpec> find_minor(const Matroid& m, const Matroid& n,
                                    const MinorSearchOptions& options = {});
inline bool has_minor(const Matroid& m, const Matroid& n, const MinorSearchOptions& options = {}) {
  return find_minor(m, n, options).has_value();
}

}  // namespace cflat
