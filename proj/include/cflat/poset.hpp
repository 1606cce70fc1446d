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
#include <utility>
#include <vector>

#include "cflat/subset.hpp"

namespace cflat {

// Finite partial order on {0, ..., n-1}, stored as a dense relation matrix.
class Poset {
 public:
  Poset() = default;

  // `leq` is row-major n x n. Throws kInvalidParameters unless it is
  // reflexive, antisymmetric and transitive.
  static Poset from_relation(int n, std::vector<char> leq);
  // Inclusion order on the members of a family.
  static Poset of_family(const SetFamily& family);

  int size() const { return n_; }
  bool leq(int a, int b) const { return leq_[static_cast<std::size_t>(a) * n_ + b] != 0; }
  bool less(int a, int b) const { return a != b && leq(a, b); }
  bool comparable(int a, int b) const { return leq(a, b) || leq(b, a); }
  // The order with every relation reversed.
  Poset dual() const;

 private:
  int n_ = 0;
  std::vector<char> leq_;
};

// Meet/join tables (row-major, n x n) of a lattice.
struct LatticeTables {
  std::vector<int> meet;
  std::vector<int> join;
  int bottom = -1;
  int top = -1;
};

struct LatticeCheck {
  bool is_lattice = false;
  LatticeTables tables;  // filled only when is_lattice
  // First pair (in index order) lacking a unique meet or join.
  std::optional<std::pair<int, int>> counterexample;
  bool missing_meet = false;  // otherwise the join is missing
};

LatticeCheck check_lattice(const Poset& order);

// A lattice given abstractly by named elements and an order.
class FiniteLattice {
 public:
  // Throws kNotALattice naming the first offending pair, or
  // kInvalidParameters when empty.
  FiniteLattice(std::vector<std::string> names, Poset order);

  int size() const { return order_.size(); }
  const std::string& name(int i) const { return names_.at(i); }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<int> index_of(const std::string& name) const;
  const Poset& order() const { return order_; }
  bool leq(int a, int b) const { return order_.leq(a, b); }
  int meet(int a, int b) const { return tables_.meet[static_cast<std::size_t>(a) * size() + b]; }
  int join(int a, int b) const { return tables_.join[static_cast<std::size_t>(a) * size() + b]; }
  int bottom() const { return tables_.bottom; }
  int top() const { return tables_.top; }
  // Pairs (lower, upper) of the covering relation, in index order.
  std::vector<std::pair<int, int>> covers() const;

 private:
  std::vector<std::string> names_;
  Poset order_;
  LatticeTables tables_;
};

// Builds the order as the reflexive-transitive closure of `covers`.
// Throws kCyclicCovers, kUnknownLabel, kDuplicateLabel or kNotALattice.
FiniteLattice lattice_from_covers(
    std::vector<std::string> elements,
    const std::vector<std::pair<std::string, std::string>>& covers);

// Meets and joins are taken inside the family under inclusion, so they need
// not be intersection and union. Indices refer to family.sets().
LatticeCheck family_lattice_tables(const SetFamily& family);

enum class WidthMethod { kMatching, kBruteForce };

// Size of a largest antichain. kMatching uses a minimum chain cover from a
// maximum bipartite matching; kBruteForce searches antichains directly.
int poset_width(const Poset& order, WidthMethod method = WidthMethod::kMatching);
int width_of_family(const SetFamily& family, WidthMethod method = WidthMethod::kMatching);

bool is_chain(const SetFamily& family);

// Order isomorphism a -> b as an index map, if one exists.
std::optional<std::vector<int>> poset_isomorphism(const Poset& a, const Poset& b);
inline bool poset_isomorphic(const Poset& a, const Poset& b) {
  return poset_isomorphism(a, b).has_value();
}

}  // namespace cflat
