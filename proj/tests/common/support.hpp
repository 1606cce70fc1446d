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

// Shared test catalog and brute-force oracles. Nothing here calls the
// library's own rank, circuit or cyclic-flat code paths except where noted.

#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "cflat/cflat.hpp"

namespace cflat::testing {

struct Named {
  std::string name;
  Matroid m;
};

inline Matroid relabeled(const Matroid& m, const std::string& prefix) { return relabel(m, prefix); }

// Uniforms, sums, nested, P_2..P_4, catalog entries, Gimenez n <= 2 and
// realized lattices up to five elements.
inline std::vector<Named> test_catalog() {
  std::vector<Named> out;
  for (int n = 0; n <= 5; ++n) {
    for (int r = 0; r <= n; ++r) {
      out.push_back({"U" + std::to_string(r) + "," + std::to_string(n), uniform(r, n)});
    }
  }
  out.push_back({"U1,2+U1,2", direct_sum(uniform(1, 2), relabel(uniform(1, 2), "n"))});
  out.push_back({"U2,4+U0,1", direct_sum(uniform(2, 4), relabel(uniform(0, 1), "n"))});
  out.push_back({"U1,3+U2,3", direct_sum(uniform(1, 3), relabel(uniform(2, 3), "n"))});
  out.push_back({"U1,1+U0,1+U2,3",
                 direct_sum(direct_sum(uniform(1, 1), relabel(uniform(0, 1), "n")),
                            relabel(uniform(2, 3), "p"))});
  for (const char* seq : {"fif", "iffi", "ffiif", "fifif", "iiffff", "fiffiif", "ifififif"}) {
    out.push_back({std::string("nested ") + seq, nested_from_sequence(IFSequence(seq))});
  }
  for (int n = 2; n <= 4; ++n) out.push_back({"P" + std::to_string(n), excluded_minor_pn(n)});
  for (const auto& name : catalog_names()) out.push_back({name, catalog(name)});
  out.push_back({"gimenez 1", gimenez_family(1, {1})});
  out.push_back({"gimenez 2 id", gimenez_family(2, {1, 2})});
  out.push_back({"gimenez 2 swap", gimenez_family(2, {2, 1})});
  out.push_back({"U1,2 fp U1,3", free_product(uniform(1, 2), relabel(uniform(1, 3), "n"))});
  out.push_back({"mk4 relaxed twice", relax(catalog("w3"), catalog("w3").flat(1).set)});
  int index = 0;
  for (const auto& lattice : enumerate_lattices(5)) {
    const std::string tag = "lattice " + std::to_string(index++);
    out.push_back({tag, realize_lattice(lattice).matroid});
    out.push_back({tag + " sub", realize_lattice(lattice, RealizationVariant::kSublattice).matroid});
  }
  return out;
}

inline std::vector<Named> small_catalog(int max_ground) {
  std::vector<Named> out;
  for (auto& entry : test_catalog()) {
    if (entry.m.ground_size() <= max_ground) out.push_back(std::move(entry));
  }
  return out;
}

// ---- rank-function oracles ----

// Ranks of all subsets from an arbitrary rank function.
inline std::vector<int> table_of(int n, const std::function<int(Subset)>& rank) {
  std::vector<int> t(std::size_t{1} << n);
  for (std::uint64_t s = 0; s < t.size(); ++s) t[s] = rank(Subset(s));
  return t;
}

inline std::vector<int> table_of(const Matroid& m) {
  return table_of(m.ground_size(), [&](Subset s) { return m.rank(s); });
}

// Graph rank: number of vertices minus components, for edges given as
// vertex pairs.
inline int graphic_rank(const std::vector<std::pair<int, int>>& edges, int vertices, Subset s) {
  std::vector<int> parent(vertices);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  int rank = 0;
  for (int e : s.elements()) {
    const int a = find(edges[e].first);
    const int b = find(edges[e].second);
    if (a != b) {
      parent[a] = b;
      ++rank;
    }
  }
  return rank;
}

// Rank over GF(2) of the given bit vectors.
inline int gf2_rank(const std::vector<unsigned>& vectors, Subset s) {
  std::vector<unsigned> basis;
  for (int e : s.elements()) {
    unsigned v = vectors[e];
    for (unsigned b : basis) v = std::min(v, v ^ b);
    if (v != 0) basis.push_back(v);
  }
  return static_cast<int>(basis.size());
}

// Minimal dependent sets of a rank table, canonical order.
inline std::vector<Subset> brute_circuits(int n, const std::vector<int>& rank) {
  std::vector<Subset> out;
  for (std::uint64_t s = 1; s < rank.size(); ++s) {
    const Subset c(s);
    if (rank[s] == c.size()) continue;
    bool minimal = true;
    for (int x : c.elements()) minimal = minimal && rank[c.without(x).bits()] == c.size() - 1;
    if (minimal) out.push_back(c);
  }
  std::sort(out.begin(), out.end(), CanonicalLess{});
  (void)n;
  return out;
}

// Cyclic flats as closed unions of circuits, with their ranks.
inline std::vector<CyclicFlat> brute_cyclic_flats(int n, const std::vector<int>& rank) {
  const auto circ = brute_circuits(n, rank);
  std::vector<CyclicFlat> out;
  for (std::uint64_t s = 0; s < rank.size(); ++s) {
    const Subset a(s);
    bool closed = true;
    for (int x = 0; x < n && closed; ++x) {
      if (!a.contains(x) && rank[a.with(x).bits()] == rank[s]) closed = false;
    }
    if (!closed) continue;
    Subset cover;
    for (Subset c : circ) {
      if (c.is_subset_of(a)) cover = cover | c;
    }
    if (cover == a) out.push_back({a, rank[s]});
  }
  std::sort(out.begin(), out.end(),
            [](const CyclicFlat& p, const CyclicFlat& q) { return canonical_less(p.set, q.set); });
  return out;
}

// Largest antichain by trying every subfamily.
inline int brute_width(const std::vector<Subset>& family) {
  const int z = static_cast<int>(family.size());
  int best = 0;
  for (std::uint64_t pick = 1; pick < (std::uint64_t{1} << z); ++pick) {
    const Subset p(pick);
    if (p.size() <= best) continue;
    bool anti = true;
    const auto idx = p.elements();
    for (std::size_t i = 0; i < idx.size() && anti; ++i) {
      for (std::size_t j = i + 1; j < idx.size() && anti; ++j) {
        anti = !family[idx[i]].comparable(family[idx[j]]);
      }
    }
    if (anti) best = p.size();
  }
  return best;
}

// Tutte polynomial by deletion and contraction on a rank function; keys
// are (x, y) exponents.
using SparsePoly = std::map<std::pair<int, int>, long long>;

inline SparsePoly tutte_deletion_contraction(int n, const std::function<int(Subset)>& rank) {
  std::function<SparsePoly(Subset, Subset)> go = [&](Subset contracted, Subset deleted) {
    const Subset all = Subset::prefix(n);
    const Subset rest = all - contracted - deleted;
    auto r = [&](Subset a) { return rank(a | contracted) - rank(contracted); };
    if (rest.empty()) return SparsePoly{{{0, 0}, 1}};
    const int e = rest.lowest();
    const Subset single = Subset::singleton(e);
    const bool loop = r(single) == 0;
    const bool isthmus = r(rest) - r(rest.without(e)) == 1;
    SparsePoly out;
    if (loop || isthmus) {
      const SparsePoly sub = loop ? go(contracted, deleted | single) : go(contracted | single, deleted);
      for (const auto& [k, c] : sub) {
        out[{k.first + (isthmus ? 1 : 0), k.second + (loop ? 1 : 0)}] += c;
      }
      return out;
    }
    for (const auto& [k, c] : go(contracted, deleted | single)) out[k] += c;
    for (const auto& [k, c] : go(contracted | single, deleted)) out[k] += c;
    return out;
  };
  SparsePoly p = go(Subset(), Subset());
  std::erase_if(p, [](const auto& kv) { return kv.second == 0; });
  return p;
}

inline SparsePoly sparse(const Poly2& p) {
  SparsePoly out;
  for (const auto& t : p.terms()) out[{t.x, t.y}] = static_cast<long long>(t.c);
  return out;
}

// Isomorphism by trying every permutation of the ground set.
inline bool brute_isomorphic(const Matroid& a, const Matroid& b) {
  if (a.ground_size() != b.ground_size()) return false;
  const int n = a.ground_size();
  const auto ta = table_of(a);
  const auto tb = table_of(b);
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool same = true;
    for (std::uint64_t s = 0; s < ta.size() && same; ++s) {
      std::uint64_t image = 0;
      for (int x : Subset(s).elements()) image |= std::uint64_t{1} << perm[x];
      same = ta[s] == tb[image];
    }
    if (same) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

// Every valid chain family on n elements with prefix members. Up to
// isomorphism these are all the nested matroids on n elements.
inline std::vector<Matroid> prefix_chain_matroids(int n) {
  std::vector<Matroid> out;
  const GroundSet ground(default_labels(n));
  std::vector<CyclicFlat> chain;
  std::function<void(int, int)> grow = [&](int size, int rank) {
    // Any prefix of the chain may stop here.
    auto result = validate(RankedFamily(ground, chain));
    if (auto* m = std::get_if<Matroid>(&result)) out.push_back(*m);
    for (int next = size + 2; next <= n; ++next) {
      for (int r = rank + 1; r - rank < next - size; ++r) {
        chain.push_back({Subset::prefix(next), r});
        grow(next, r);
        chain.pop_back();
      }
    }
  };
  for (int first = 0; first <= n; ++first) {
    chain = {{Subset::prefix(first), 0}};
    grow(first, 0);
  }
  return out;
}

}  // namespace cflat::testing
