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

#include "cflat/poset.hpp"

#include <algorithm>
#include <numeric>
#include <tuple>
#include <unordered_map>

#include "cflat/error.hpp"

namespace cflat {

Poset Poset::from_relation(int n, std::vector<char> leq) {
  if (n < 0 || leq.size() != static_cast<std::size_t>(n) * n) {
    throw Error(Errc::kInvalidParameters, "relation matrix has the wrong size");
  }
  Poset p;
  p.n_ = n;
  p.leq_ = std::move(leq);
  for (int a = 0; a < n; ++a) {
    if (!p.leq(a, a)) throw Error(Errc::kInvalidParameters, "relation is not reflexive");
    for (int b = 0; b < n; ++b) {
      if (a != b && p.leq(a, b) && p.leq(b, a)) {
        throw Error(Errc::kInvalidParameters, "relation is not antisymmetric");
      }
      if (!p.leq(a, b)) continue;
      for (int c = 0; c < n; ++c) {
        if (p.leq(b, c) && !p.leq(a, c)) {
          throw Error(Errc::kInvalidParameters, "relation is not transitive");
        }
      }
    }
  }
  return p;
}

Poset Poset::of_family(const SetFamily& family) {
  const int n = family.size();
  Poset p;
  p.n_ = n;
  p.leq_.assign(static_cast<std::size_t>(n) * n, 0);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      p.leq_[static_cast<std::size_t>(a) * n + b] = family[a].is_subset_of(family[b]);
    }
  }
  return p;
}

Poset Poset::dual() const {
  Poset p;
  p.n_ = n_;
  p.leq_.assign(leq_.size(), 0);
  for (int a = 0; a < n_; ++a) {
    for (int b = 0; b < n_; ++b) p.leq_[static_cast<std::size_t>(a) * n_ + b] = leq(b, a);
  }
  return p;
}

namespace {

// Greatest element among {k : below(k)}, or -1 if there is none.
template <typename Pred, typename Leq>
int greatest_where(int n, Pred below, Leq leq) {
  int cand = -1;
  for (int k = 0; k < n; ++k) {
    if (!below(k)) continue;
    if (cand < 0 || leq(cand, k)) cand = k;
  }
  if (cand < 0) return -1;
  for (int k = 0; k < n; ++k) {
    if (below(k) && !leq(k, cand)) return -1;
  }
  return cand;
}

}  // namespace

LatticeCheck check_lattice(const Poset& order) {
  const int n = order.size();
  LatticeCheck out;
  if (n == 0) return out;
  auto leq = [&](int a, int b) { return order.leq(a, b); };
  auto geq = [&](int a, int b) { return order.leq(b, a); };
  LatticeTables t;
  t.meet.assign(static_cast<std::size_t>(n) * n, -1);
  t.join.assign(static_cast<std::size_t>(n) * n, -1);
  for (int a = 0; a < n; ++a) {
    for (int b = a; b < n; ++b) {
      const int m = greatest_where(n, [&](int k) { return leq(k, a) && leq(k, b); }, leq);
      const int j = greatest_where(n, [&](int k) { return leq(a, k) && leq(b, k); }, geq);
      if (m < 0 || j < 0) {
        out.counterexample = {a, b};
        out.missing_meet = m < 0;
        return out;
      }
      t.meet[static_cast<std::size_t>(a) * n + b] = t.meet[static_cast<std::size_t>(b) * n + a] = m;
      t.join[static_cast<std::size_t>(a) * n + b] = t.join[static_cast<std::size_t>(b) * n + a] = j;
    }
  }
  t.bottom = 0;
  t.top = 0;
  for (int k = 1; k < n; ++k) {
    t.bottom = t.meet[static_cast<std::size_t>(t.bottom) * n + k];
    t.top = t.join[static_cast<std::size_t>(t.top) * n + k];
  }
  out.is_lattice = true;
  out.tables = std::move(t);
  return out;
}

FiniteLattice::FiniteLattice(std::vector<std::string> names, Poset order)
    : names_(std::move(names)), order_(std::move(order)) {
  if (order_.size() == 0) throw Error(Errc::kInvalidParameters, "a lattice needs at least one element");
  if (static_cast<int>(names_.size()) != order_.size()) {
    throw Error(Errc::kInvalidParameters, "name count does not match the order");
  }
  LatticeCheck check = check_lattice(order_);
  if (!check.is_lattice) {
    const auto [a, b] = *check.counterexample;
    throw Error(Errc::kNotALattice, "elements " + names_[a] + " and " + names_[b] +
                                        " have no unique " +
                                        (check.missing_meet ? "meet" : "join"));
  }
  tables_ = std::move(check.tables);
}

std::optional<int> FiniteLattice::index_of(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<int>(it - names_.begin());
}

std::vector<std::pair<int, int>> FiniteLattice::covers() const {
  std::vector<std::pair<int, int>> out;
  const int n = size();
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (!order_.less(a, b)) continue;
      bool direct = true;
      for (int c = 0; c < n && direct; ++c) {
        if (order_.less(a, c) && order_.less(c, b)) direct = false;
      }
      if (direct) out.emplace_back(a, b);
    }
  }
  return out;
}

FiniteLattice lattice_from_covers(
    std::vector<std::string> elements,
    const std::vector<std::pair<std::string, std::string>>& covers) {
  const int n = static_cast<int>(elements.size());
  std::unordered_map<std::string, int> index;
  for (int i = 0; i < n; ++i) {
    if (!index.emplace(elements[i], i).second) {
      throw Error(Errc::kDuplicateLabel, "duplicate lattice element '" + elements[i] + "'");
    }
  }
  auto lookup = [&](const std::string& name) {
    auto it = index.find(name);
    if (it == index.end()) throw Error(Errc::kUnknownLabel, "unknown lattice element '" + name + "'");
    return it->second;
  };
  std::vector<char> leq(static_cast<std::size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i) leq[static_cast<std::size_t>(i) * n + i] = 1;
  for (const auto& [lo, hi] : covers) {
    const int a = lookup(lo);
    const int b = lookup(hi);
    if (a == b) throw Error(Errc::kCyclicCovers, "cover (" + lo + ", " + hi + ") is a loop");
    leq[static_cast<std::size_t>(a) * n + b] = 1;
  }
  // Warshall closure.
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < n; ++i) {
      if (!leq[static_cast<std::size_t>(i) * n + k]) continue;
      for (int j = 0; j < n; ++j) {
        if (leq[static_cast<std::size_t>(k) * n + j]) leq[static_cast<std::size_t>(i) * n + j] = 1;
      }
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (leq[static_cast<std::size_t>(i) * n + j] && leq[static_cast<std::size_t>(j) * n + i]) {
        throw Error(Errc::kCyclicCovers,
                    "covers contain a cycle through " + elements[i] + " and " + elements[j]);
      }
    }
  }
  return FiniteLattice(std::move(elements), Poset::from_relation(n, std::move(leq)));
}

LatticeCheck family_lattice_tables(const SetFamily& family) {
  if (family.size() == 0) throw Error(Errc::kInvalidParameters, "empty family");
  return check_lattice(Poset::of_family(family));
}

namespace {

// Kuhn's augmenting paths on the strict-comparability bipartite graph.
int max_comparability_matching(const Poset& order) {
  const int n = order.size();
  std::vector<std::vector<int>> adj(n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (order.less(a, b)) adj[a].push_back(b);
    }
  }
  std::vector<int> match_right(n, -1);
  std::vector<char> seen(n);
  auto augment = [&](auto&& self, int u) -> bool {
    for (int v : adj[u]) {
      if (seen[v]) continue;
      seen[v] = 1;
      if (match_right[v] < 0 || self(self, match_right[v])) {
        match_right[v] = u;
        return true;
      }
    }
    return false;
  };
  int matched = 0;
  for (int u = 0; u < n; ++u) {
    std::fill(seen.begin(), seen.end(), 0);
    if (augment(augment, u)) ++matched;
  }
  return matched;
}

int brute_force_antichain(const Poset& order) {
  const int n = order.size();
  int best = 0;
  std::vector<int> chosen;
  auto extend = [&](auto&& self, int next) -> void {
    best = std::max(best, static_cast<int>(chosen.size()));
    if (static_cast<int>(chosen.size()) + (n - next) <= best) return;
    for (int k = next; k < n; ++k) {
      bool free = std::none_of(chosen.begin(), chosen.end(),
                               [&](int c) { return order.comparable(c, k); });
      if (!free) continue;
      chosen.push_back(k);
      self(self, k + 1);
      chosen.pop_back();
    }
  };
  extend(extend, 0);
  return best;
}

}  // namespace

int poset_width(const Poset& order, WidthMethod method) {
  if (method == WidthMethod::kBruteForce) return brute_force_antichain(order);
  // Dilworth: width = minimum chain cover = n - maximum matching.
  return order.size() - max_comparability_matching(order);
}

int width_of_family(const SetFamily& family, WidthMethod method) {
  return poset_width(Poset::of_family(family), method);
}

bool is_chain(const SetFamily& family) {
  // Canonical order sorts by size, so a chain is increasing in this order.
  for (int i = 1; i < family.size(); ++i) {
    if (!family[i - 1].is_subset_of(family[i])) return false;
  }
  return true;
}

namespace {

struct ElementInvariant {
  int below = 0;
  int above = 0;
  int height = 0;
  friend bool operator==(const ElementInvariant&, const ElementInvariant&) = default;
};

std::vector<ElementInvariant> invariants(const Poset& p) {
  const int n = p.size();
  std::vector<ElementInvariant> inv(n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (p.less(b, a)) ++inv[a].below;
      if (p.less(a, b)) ++inv[a].above;
    }
  }
  // Sorting by number of elements below yields a linear extension.
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int x, int y) { return inv[x].below < inv[y].below; });
  for (int a : order) {
    for (int b = 0; b < n; ++b) {
      if (p.less(b, a)) inv[a].height = std::max(inv[a].height, inv[b].height + 1);
    }
  }
  return inv;
}

}  // namespace

std::optional<std::vector<int>> poset_isomorphism(const Poset& a, const Poset& b) {
  const int n = a.size();
  if (b.size() != n) return std::nullopt;
  const auto inv_a = invariants(a);
  const auto inv_b = invariants(b);
  {
    auto key = [](const ElementInvariant& e) { return std::tuple(e.height, e.below, e.above); };
    std::vector<std::tuple<int, int, int>> ka, kb;
    for (const auto& e : inv_a) ka.push_back(key(e));
    for (const auto& e : inv_b) kb.push_back(key(e));
    std::sort(ka.begin(), ka.end());
    std::sort(kb.begin(), kb.end());
    if (ka != kb) return std::nullopt;
  }
  // Assign bottom-up so comparabilities with earlier choices prune early.
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int x, int y) {
    return std::tuple(inv_a[x].height, inv_a[x].below) < std::tuple(inv_a[y].height, inv_a[y].below);
  });
  std::vector<int> image(n, -1);
  std::vector<char> used(n, 0);
  auto search = [&](auto&& self, int depth) -> bool {
    if (depth == n) return true;
    const int x = order[depth];
    for (int y = 0; y < n; ++y) {
      if (used[y] || !(inv_b[y] == inv_a[x])) continue;
      bool ok = true;
      for (int d = 0; d < depth && ok; ++d) {
        const int w = order[d];
        ok = a.leq(w, x) == b.leq(image[w], y) && a.leq(x, w) == b.leq(y, image[w]);
      }
      if (!ok) continue;
      image[x] = y;
      used[y] = 1;
      if (self(self, depth + 1)) return true;
      used[y] = 0;
      image[x] = -1;
    }
    return false;
  };
  if (!search(search, 0)) return std::nullopt;
  return image;
}

}  // namespace cflat
