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

#include <cstdint>
#include <vector>

#include "cflat/matroid.hpp"

namespace cflat {

inline constexpr int kDefaultIngletonCap = 24;

// Width of Z(M) under inclusion.
int cyclic_width(const Matroid& m);

struct IngletonSides {
  // r(X_1 ∩ ... ∩ X_n).
  int lhs = 0;
  // Σ over nonempty J of (-1)^{|J|+1} r(∪_{j∈J} X_j).
  int rhs = 0;
};

// Both sides of the inequality for an arbitrary family of subsets.
IngletonSides ingleton_sides(const Matroid& m, const std::vector<Subset>& family);

struct IngletonResult {
  bool ok = true;
  // First violating antichain (indices into m.cyclic_flats()), if any.
  std::vector<int> antichain;
  IngletonSides sides;
  // Number of antichains evaluated.
  std::uint64_t checked = 0;
};

// Checks every antichain of at least two cyclic flats, by size and then
// lexicographically by flat index, stopping at the first violation.
// Throws kTooManyCyclicFlats when |Z(M)| > cap.
IngletonResult ingleton_transversal(const Matroid& m, int cap = kDefaultIngletonCap);

struct BitransversalResult {
  IngletonResult primal;
  IngletonResult dual;
  bool ok() const { return primal.ok && dual.ok; }
};

BitransversalResult bitransversal_cert(const Matroid& m, int cap = kDefaultIngletonCap);

}  // namespace cflat
