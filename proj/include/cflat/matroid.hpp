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
#include <functional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "cflat/poset.hpp"
#include "cflat/subset.hpp"

namespace cflat {

// Default bound on |E| for anything that walks all 2^|E| subsets.
inline constexpr int kDefaultEnumerationCap = 22;

struct CyclicFlat {
  Subset set;
  int rank = 0;
  friend bool operator==(const CyclicFlat&, const CyclicFlat&) = default;
};

// Candidate (Z, r): subsets of a ground set with integer ranks. Entries are
// kept in canonical subset order.
class RankedFamily {
 public:
  RankedFamily() = default;
  // Throws kDuplicateSet, kUnknownLabel (set outside ground) or
  // kInvalidParameters (no entries).
  RankedFamily(GroundSet ground, std::vector<CyclicFlat> entries);

  const GroundSet& ground() const { return ground_; }
  const std::vector<CyclicFlat>& entries() const { return entries_; }
  int size() const { return static_cast<int>(entries_.size()); }
  SetFamily sets() const;

  friend bool operator==(const RankedFamily&, const RankedFamily&) = default;

 private:
  GroundSet ground_;
  std::vector<CyclicFlat> entries_;
};

enum class Axiom { kZ0, kZ1, kZ2, kZ3 };
std::string_view axiom_name(Axiom a);

// One failed axiom with enough data to re-check it by hand.
//   Z0: first/second lack a meet (or join) inside the family.
//   Z1: first is the least member, ranks[0] its rank.
//   Z2: first ⊊ second, ranks = {r(first), r(second)}, gap = |second - first|.
//   Z3: first, second with join/meet, ranks = {r(X), r(Y), r(X∨Y), r(X∧Y)},
//       gap = |(X∩Y) - (X∧Y)|.
struct AxiomViolation {
  Axiom which = Axiom::kZ0;
  Subset first;
  Subset second;
  Subset join;
  Subset meet;
  std::vector<int> ranks;
  int gap = 0;
  bool missing_meet = false;

  std::string describe(const GroundSet& ground) const;
};

class Matroid;

// Returns the matroid, or the first violation in canonical order.
std::variant<Matroid, AxiomViolation> validate(const RankedFamily& candidate);
// Every violation found, in canonical order. Z3 is skipped when Z0 fails.
std::vector<AxiomViolation> audit(const RankedFamily& candidate);

// A matroid held as its lattice of cyclic flats with their ranks. Ground
// elements outside the greatest cyclic flat are isthmuses; elements of the
// least cyclic flat are loops.
class Matroid {
 public:
  // Validates; throws kAxiomViolation with the first failure.
  static Matroid from_family(RankedFamily family);

  const GroundSet& ground() const { return family_.ground(); }
  int ground_size() const { return family_.ground().size(); }
  const RankedFamily& family() const { return family_; }
  const std::vector<CyclicFlat>& cyclic_flats() const { return family_.entries(); }
  int num_cyclic_flats() const { return family_.size(); }
  const CyclicFlat& flat(int i) const { return family_.entries()[i]; }

  int meet(int a, int b) const { return tables_.meet[static_cast<std::size_t>(a) * num_cyclic_flats() + b]; }
  int join(int a, int b) const { return tables_.join[static_cast<std::size_t>(a) * num_cyclic_flats() + b]; }
  int bottom() const { return tables_.bottom; }
  int top() const { return tables_.top; }

  // r(M).
  int rank() const { return rank_; }
  int nullity() const { return ground_size() - rank_; }
  // min over cyclic flats F of r(F) + |A - F|.
  int rank(Subset a) const;
  int nullity(Subset a) const { return a.size() - rank(a); }

  friend bool operator==(const Matroid& a, const Matroid& b) { return a.family_ == b.family_; }

 private:
  friend std::variant<Matroid, AxiomViolation> validate(const RankedFamily&);
  Matroid(RankedFamily family, LatticeTables tables);

  RankedFamily family_;
  LatticeTables tables_;
  int rank_ = 0;
};

inline int rank(const Matroid& m, Subset a) { return m.rank(a); }

// |I ∩ X| <= r(X) for every cyclic flat X.
bool is_independent(const Matroid& m, Subset independent);

// Minimal sets C with C ⊆ X and |C| = r(X) + 1 for some cyclic flat X,
// in canonical order.
std::vector<Subset> circuits(const Matroid& m);

Subset closure(const Matroid& m, Subset a);

// Rank of every subset of an n-element ground set, indexed by bitmask.
class RankTable {
 public:
  // Evaluates `rank_fn` on all 2^n subsets. Throws kGroundSetTooLarge
  // when n > cap.
  static RankTable build(int n, const std::function<int(Subset)>& rank_fn,
                         int cap = kDefaultEnumerationCap);
  static RankTable of(const Matroid& m, int cap = kDefaultEnumerationCap);

  int ground_size() const { return n_; }
  int operator()(Subset s) const { return ranks_[s.bits()]; }

 private:
  int n_ = 0;
  std::vector<std::uint8_t> ranks_;
};

// Closed, isthmus-free subsets of a rank table (the cyclic flats).
RankedFamily cyclic_flats_of(const GroundSet& ground, const RankTable& table);

// Recomputes Z(M) from the rank oracle by full enumeration.
RankedFamily cyclic_flats_recompute(const Matroid& m, int cap = kDefaultEnumerationCap);

struct BasicStats {
  int rank = 0;
  int nullity = 0;
  Subset loops;
  Subset isthmuses;
  int num_cyclic_flats = 0;
};

BasicStats basic_stats(const Matroid& m);

// Poset of the cyclic flats under inclusion.
inline Poset cyclic_flat_poset(const Matroid& m) { return Poset::of_family(m.family().sets()); }

}  // namespace cflat
