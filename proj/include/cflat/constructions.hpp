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
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cflat/matroid.hpp"
#include "cflat/minors.hpp"
#include "cflat/poset.hpp"

namespace cflat {

// Sequence of steps over {i, f}: i adds an isthmus, f adds an element
// freely.
class IFSequence {
 public:
  IFSequence() = default;
  // Throws kInvalidParameters on any character other than 'i' or 'f'.
  explicit IFSequence(std::string_view steps);

  const std::string& str() const { return steps_; }
  int size() const { return static_cast<int>(steps_.size()); }
  char operator[](int i) const { return steps_[i]; }
  friend bool operator==(const IFSequence&, const IFSequence&) = default;

 private:
  std::string steps_;
};

// ---- Lattice realization ----

enum class RealizationVariant {
  // One satellite s:z per lattice element, placed freely on V_z.
  kPlain,
  // |V_z| + 1 satellites per element, with the spanning vertices deleted.
  kSublattice,
};

struct Realization {
  Matroid matroid;
  // Lattice element index -> index of its cyclic flat in matroid.
  std::vector<int> flat_of;
};

// Realizes L as the lattice of cyclic flats of a transversal matroid.
//
// With B the elements other than the top and V_z = {y : y ≱ z}, the plain
// variant has ground B ∪ {s:z} and cyclic flats V_z ∪ {s:x : x ≤ z} of rank
// |V_z|. The sublattice variant uses disjoint point sets S_z of size
// |V_z| + 1 ("s:z:0", "s:z:1", ...) with cyclic flats F_z = ∪_{y≤z} S_y of
// rank |V_z|, so that F_x ∩ F_y = F_{x∧y}.
Realization realize_lattice(const FiniteLattice& lattice,
                            RealizationVariant variant = RealizationVariant::kPlain);

// All lattices with at most max_size elements, one per isomorphism class.
// Elements are named "0", "1", ... with 0 least and size-1 greatest.
std::vector<FiniteLattice> enumerate_lattices(int max_size);

// ---- Nested matroids ----

// Labels e1, e2, ... in step order.
Matroid nested_from_sequence(const IFSequence& seq);

// Loops first (as f), then per chain layer |I_j| i's and |F_j| f's, then
// the isthmuses outside the greatest cyclic flat. Throws kNotNested.
IFSequence nested_sequence_of(const Matroid& m);

struct SubsequenceMinor {
  bool is_subsequence = false;
  // Position in seq_m of each step of seq_n (leftmost embedding).
  std::vector<int> embedding;
  // Deletes unused f-steps and contracts unused i-steps of
  // nested_from_sequence(seq_m).
  MinorSpec spec;
};

SubsequenceMinor nested_subsequence_minor(const IFSequence& seq_n, const IFSequence& seq_m);

// ---- Families ----

// U_{r,n}. Labels default to default_labels(n). Throws kInvalidParameters.
Matroid uniform(int r, int n, std::vector<std::string> labels = {});

// Truncation to rank n of U_{n-1,n} ⊕ U_{n-1,n}. Throws kInvalidParameters
// for n < 2.
Matroid excluded_minor_pn(int n);

// Ground a, a', a'', b, b', x1..xn, y1..yn, z1..zn, w1..wn with cyclic flats
// ∅, A_0..A_n, B_0..B_n, S where A_i = A_{i-1} ∪ {z_i, w_i} and
// B_i = B_{i-1} ∪ {z_i, w_σ(i)}. `sigma` is 1-based.
Matroid gimenez_family(int n, const std::vector<int>& sigma);
// Reads σ back from the cyclic flats, up to isomorphism: σ(i) is the j with
// w_j added to the B-chain at step i, after relabelling the A-chain steps.
std::optional<std::vector<int>> gimenez_permutation(const Matroid& m);

// Named matroids: "mk4" (graphic K_4, edges labelled by endpoints), "w3"
// (rank-3 whirl), "fano" (F_7). Throws kUnknownName.
Matroid catalog(const std::string& name);
std::vector<std::string> catalog_names();

// ---- Uniform minors of long chains ----

struct ChainMinor {
  // M|X_{k+1} / I_{k+1} \ (X_0 ∪ F_1 ∪ ... ∪ F_{k-1}): uniform, rank >= k,
  // nullity >= 2.
  MinorSpec proof_spec;
  // proof_spec with further contractions and deletions giving U_{k,k+2}.
  MinorSpec trimmed_spec;
};

// Requires Z(M) to be a chain of at least k + 2 members. Each layer
// X_j - X_{j-1} splits into I_j (its lowest-indexed r(X_j) - r(X_{j-1})
// elements) and F_j. Throws kNotNested, kChainTooShort, kInvalidParameters.
ChainMinor uniform_minor_from_chain(const Matroid& m, int k);

// ---- Random generators (seeded, deterministic) ----

// Random valid matroid with at most max_ground elements, built from uniform,
// nested and named pieces by direct sums, free products, duals,
// truncations, lifts, relaxations and single-element minors.
Matroid random_matroid(std::uint64_t seed, int max_ground = 10);

// Random matroid of cyclic width exactly 2: a random nested chain plus one
// incomparable cyclic flat, retried until the axioms hold.
Matroid random_width2_matroid(std::uint64_t seed, int max_ground = 10);

}  // namespace cflat
