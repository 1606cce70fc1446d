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

#include "cflat/matroid.hpp"

#include <algorithm>
#include <limits>
#include <optional>
#include <sstream>
#include <unordered_set>

#include "cflat/error.hpp"
#include "enumerate.hpp"

namespace cflat {

RankedFamily::RankedFamily(GroundSet ground, std::vector<CyclicFlat> entries)
    : ground_(std::move(ground)), entries_(std::move(entries)) {
  if (entries_.empty()) throw Error(Errc::kInvalidParameters, "ranked family has no entries");
  std::sort(entries_.begin(), entries_.end(),
            [](const CyclicFlat& a, const CyclicFlat& b) { return canonical_less(a.set, b.set); });
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (!entries_[i].set.is_subset_of(ground_.all())) {
      throw Error(Errc::kUnknownLabel, "set refers to an index outside the ground set");
    }
    if (i > 0 && entries_[i].set == entries_[i - 1].set) {
      throw Error(Errc::kDuplicateSet, "duplicate set " + ground_.format(entries_[i].set));
    }
  }
}

SetFamily RankedFamily::sets() const {
  std::vector<Subset> sets;
  sets.reserve(entries_.size());
  for (const auto& e : entries_) sets.push_back(e.set);
  return SetFamily(ground_, std::move(sets));
}

std::string_view axiom_name(Axiom a) {
  switch (a) {
    case Axiom::kZ0: return "Z0";
    case Axiom::kZ1: return "Z1";
    case Axiom::kZ2: return "Z2";
    case Axiom::kZ3: return "Z3";
  }
  return "?";
}

std::string AxiomViolation::describe(const GroundSet& ground) const {
  std::ostringstream os;
  os << axiom_name(which) << ": ";
  switch (which) {
    case Axiom::kZ0:
      os << ground.format(first) << " and " << ground.format(second) << " have no "
         << (missing_meet ? "meet" : "join") << " in the family";
      break;
    case Axiom::kZ1:
      os << "least member " << ground.format(first) << " has rank " << ranks.at(0)
         << ", expected 0";
      break;
    case Axiom::kZ2:
      os << ground.format(first) << " (rank " << ranks.at(0) << ") ⊊ " << ground.format(second)
         << " (rank " << ranks.at(1) << ") needs 0 < " << ranks.at(1) - ranks.at(0) << " < "
         << gap;
      break;
    case Axiom::kZ3:
      os << "X=" << ground.format(first) << ", Y=" << ground.format(second) << ": r(X)+r(Y) = "
         << ranks.at(0) + ranks.at(1) << " < r(X∨Y)+r(X∧Y)+|(X∩Y)-(X∧Y)| = " << ranks.at(2)
         << "+" << ranks.at(3) << "+" << gap;
      break;
  }
  return os.str();
}

namespace {

// Runs the axiom checks, stopping at the first failure unless `all`.
std::vector<AxiomViolation> check_axioms(const RankedFamily& family, bool all,
                                         LatticeCheck* lattice_out) {
  std::vector<AxiomViolation> out;
  const auto& e = family.entries();
  const int n = family.size();
  LatticeCheck lattice = family_lattice_tables(family.sets());
  if (!lattice.is_lattice) {
    AxiomViolation v;
    v.which = Axiom::kZ0;
    v.first = e[lattice.counterexample->first].set;
    v.second = e[lattice.counterexample->second].set;
    v.missing_meet = lattice.missing_meet;
    out.push_back(v);
    if (!all) return out;
  }
  if (lattice.is_lattice) {
    const CyclicFlat& least = e[lattice.tables.bottom];
    if (least.rank != 0) {
      AxiomViolation v;
      v.which = Axiom::kZ1;
      v.first = least.set;
      v.ranks = {least.rank};
      out.push_back(v);
      if (!all) return out;
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (!e[i].set.is_proper_subset_of(e[j].set)) continue;
      const int diff = e[j].rank - e[i].rank;
      const int gap = (e[j].set - e[i].set).size();
      if (diff > 0 && diff < gap) continue;
      AxiomViolation v;
      v.which = Axiom::kZ2;
      v.first = e[i].set;
      v.second = e[j].set;
      v.ranks = {e[i].rank, e[j].rank};
      v.gap = gap;
      out.push_back(v);
      if (!all) return out;
    }
  }
  if (lattice.is_lattice) {
    const auto& t = lattice.tables;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        const auto& jn = e[t.join[static_cast<std::size_t>(i) * n + j]];
        const auto& mt = e[t.meet[static_cast<std::size_t>(i) * n + j]];
        const int gap = ((e[i].set & e[j].set) - mt.set).size();
        if (e[i].rank + e[j].rank >= jn.rank + mt.rank + gap) continue;
        AxiomViolation v;
        v.which = Axiom::kZ3;
        v.first = e[i].set;
        v.second = e[j].set;
        v.join = jn.set;
        v.meet = mt.set;
        v.ranks = {e[i].rank, e[j].rank, jn.rank, mt.rank};
        v.gap = gap;
        out.push_back(v);
        if (!all) return out;
      }
    }
  }
  if (lattice_out != nullptr) *lattice_out = std::move(lattice);
  return out;
}

}  // namespace

std::variant<Matroid, AxiomViolation> validate(const RankedFamily& candidate) {
  LatticeCheck lattice;
  auto violations = check_axioms(candidate, false, &lattice);
  if (!violations.empty()) return violations.front();
  return Matroid(candidate, std::move(lattice.tables));
}

std::vector<AxiomViolation> audit(const RankedFamily& candidate) {
  return check_axioms(candidate, true, nullptr);
}

Matroid Matroid::from_family(RankedFamily family) {
  auto result = validate(family);
  if (auto* v = std::get_if<AxiomViolation>(&result)) {
    throw Error(Errc::kAxiomViolation, v->describe(family.ground()));
  }
  return std::get<Matroid>(std::move(result));
}

Matroid::Matroid(RankedFamily family, LatticeTables tables)
    : family_(std::move(family)), tables_(std::move(tables)) {
  rank_ = rank(ground().all());
}

int Matroid::rank(Subset a) const {
  int best = std::numeric_limits<int>::max();
  for (const auto& f : family_.entries()) {
    best = std::min(best, f.rank + (a - f.set).size());
  }
  return best;
}

bool is_independent(const Matroid& m, Subset independent) {
  return std::all_of(m.cyclic_flats().begin(), m.cyclic_flats().end(), [&](const CyclicFlat& f) {
    return (independent & f.set).size() <= f.rank;
  });
}

std::vector<Subset> circuits(const Matroid& m) {
  std::unordered_set<Subset, SubsetHash> found;
  for (const auto& f : m.cyclic_flats()) {
    detail::for_each_k_subset(f.set, f.rank + 1, [&](Subset c) {
      if (found.count(c)) return false;
      // Minimal: every proper subset is independent, so every C - x is.
      for (int x : c.elements()) {
        if (!is_independent(m, c.without(x))) return false;
      }
      found.insert(c);
      return false;
    });
  }
  std::vector<Subset> out(found.begin(), found.end());
  std::sort(out.begin(), out.end(), CanonicalLess{});
  return out;
}

Subset closure(const Matroid& m, Subset a) {
  const int r = m.rank(a);
  Subset out = a;
  for (int x = 0; x < m.ground_size(); ++x) {
    if (!a.contains(x) && m.rank(a.with(x)) == r) out = out.with(x);
  }
  return out;
}

RankTable RankTable::build(int n, const std::function<int(Subset)>& rank_fn, int cap) {
  if (n > cap || n >= 63) {
    throw Error(Errc::kGroundSetTooLarge, "enumerating 2^" + std::to_string(n) +
                                              " subsets exceeds the cap of 2^" +
                                              std::to_string(cap));
  }
  RankTable t;
  t.n_ = n;
  t.ranks_.resize(std::size_t{1} << n);
  for (std::uint64_t mask = 0; mask < t.ranks_.size(); ++mask) {
    t.ranks_[mask] = static_cast<std::uint8_t>(rank_fn(Subset(mask)));
  }
  return t;
}

RankTable RankTable::of(const Matroid& m, int cap) {
  return build(m.ground_size(), [&](Subset s) { return m.rank(s); }, cap);
}

RankedFamily cyclic_flats_of(const GroundSet& ground, const RankTable& table) {
  const int n = table.ground_size();
  std::vector<CyclicFlat> flats;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    const Subset f(mask);
    const int r = table(f);
    bool ok = true;
    for (int x = 0; x < n && ok; ++x) {
      // Closed: adding an outside element raises the rank. Cyclic: removing
      // an inside element does not lower it.
      ok = f.contains(x) ? table(f.without(x)) == r : table(f.with(x)) == r + 1;
    }
    if (ok) flats.push_back({f, r});
  }
  return RankedFamily(ground, std::move(flats));
}

RankedFamily cyclic_flats_recompute(const Matroid& m, int cap) {
  return cyclic_flats_of(m.ground(), RankTable::of(m, cap));
}

BasicStats basic_stats(const Matroid& m) {
  BasicStats s;
  s.rank = m.rank();
  s.nullity = m.nullity();
  s.loops = m.flat(m.bottom()).set;
  const Subset all = m.ground().all();
  for (int x = 0; x < m.ground_size(); ++x) {
    if (m.rank(all.without(x)) == s.rank - 1) s.isthmuses = s.isthmuses.with(x);
  }
  s.num_cyclic_flats = m.num_cyclic_flats();
  return s;
}

}  // namespace cflat
