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

#include <string>

#include "cflat/matroid.hpp"

namespace cflat {

// Free product M □ N on E(M) followed by E(N).
//
// Cyclic flats are the proper cyclic flats of M, plus E(M) ∪ Y for each
// nonempty cyclic flat Y of N with rank r(M) + r_N(Y), plus E(M) itself
// (rank r(M)) exactly when M has no isthmus and N has no loop. The result
// is validated before it is returned. Throws kOverlappingGroundSets.
Matroid free_product(const Matroid& m, const Matroid& n);

// First of "e0", "e1", ... not already a label of M.
std::string fresh_label(const Matroid& m);

// M □ U_{0,1}; the new element comes last. An empty label picks a fresh one.
// Throws kLabelInUse.
Matroid free_extension(const Matroid& m, const std::string& label = "");
// U_{1,1} □ M, reordered so the new element comes last.
Matroid free_coextension(const Matroid& m, const std::string& label = "");

// r_M(X) + r_N(Y) + min{r(M) - r_M(X), ν_N(Y)}: the rank of X ∪ Y in M □ N.
int fp_rank_check(const Matroid& m, const Matroid& n, Subset x, Subset y);

// X independent in M and ν_N(Y) <= r(M) - |X|: independence of X ∪ Y in
// M □ N.
bool fp_independent_check(const Matroid& m, const Matroid& n, Subset x, Subset y);

}  // namespace cflat
