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

#include "cflat/minors.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#include "cflat/error.hpp"
#include "cflat/freeprod.hpp"
#include "enumerate.hpp"

namespace cflat {

Matroid dual(const Matroid& m) {
  const Subset all = m.ground().all();
  std::vector<CyclicFlat> flats;
  flats.reserve(m.num_cyclic_flats());
  for (const auto& f : m.cyclic_flats()) {
    const Subset comp = all - f.set;
    flats.push_back({comp, comp.size() - m.rank() + f.rank});
  }
  return Matroid::from_family(RankedFamily(m.ground(), std::move(flats)));
}

Matroid minor(const Matroid& m, const MinorSpec& spec, int cap) {
  const Subset all = m.ground().all();
  if (!(spec.contraction & spec.deletion).empty()) {
    throw Error(Errc::kInvalidParameters, "contraction and deletion sets overlap");
  }
  if (!(spec.contraction | spec.deletion).is_subset_of(all)) {
    throw Error(Errc::kInvalidParameters, "minor spec refers to elements outside the ground set");
  }
  const std::vector<int> keep = (all - spec.contraction - spec.deletion).elements();
  std::vector<std::string> labels;
  for (int x : keep) labels.push_back(m.ground().label(x));
  const int k = static_cast<int>(keep.size());
  const int r_contract = m.rank(spec.contraction);
  const RankTable table = RankTable::build(
      k,
      [&](Subset local) {
        Subset original = spec.contraction;
        for (int i : local.elements()) original = original.with(keep[i]);
        return m.rank(original) - r_contract;
      },
      cap);
  return Matroid::from_family(cyclic_flats_of(GroundSet(std::move(labels)), table));
}

Matroid relax(const Matroid& m, Subset flat) {
  int target = -1;
  for (int i = 0; i < m.num_cyclic_flats(); ++i) {
    if (m.flat(i).set == flat) target = i;
  }
  if (target < 0) {
    throw Error(Errc::kNotRelaxable, m.ground().format(flat) + " is not a cyclic flat");
  }
  if (target == m.bottom() || target == m.top()) {
    throw Error(Errc::kNotRelaxable, "cannot relax the least or greatest cyclic flat");
  }
  std::vector<CyclicFlat> kept;
  for (int i = 0; i < m.num_cyclic_flats(); ++i) {
    if (i == target) continue;
    if (i != m.bottom() && i != m.top() && m.flat(i).set.comparable(flat)) {
      throw Error(Errc::kNotRelaxable, m.ground().format(flat) + " is comparable to " +
                                           m.ground().format(m.flat(i).set));
    }
    kept.push_back(m.flat(i));
  }
  return Matroid::from_family(RankedFamily(m.ground(), std::move(kept)));
}

Matroid direct_sum(const Matroid& m, const Matroid& n) {
  for (const auto& label : n.ground().labels()) {
    if (m.ground().contains(label)) {
      throw Error(Errc::kOverlappingGroundSets, "label '" + label + "' occurs in both ground sets");
    }
  }
  std::vector<std::string> labels = m.ground().labels();
  labels.insert(labels.end(), n.ground().labels().begin(), n.ground().labels().end());
  const int offset = m.ground_size();
  std::vector<CyclicFlat> flats;
  for (const auto& x : m.cyclic_flats()) {
    for (const auto& y : n.cyclic_flats()) {
      flats.push_back({x.set | Subset(y.set.bits() << offset), x.rank + y.rank});
    }
  }
  return Matroid::from_family(RankedFamily(GroundSet(std::move(labels)), std::move(flats)));
}

Matroid truncate(const Matroid& m) {
  if (m.rank() == 0) throw Error(Errc::kRankZero, "cannot truncate a rank-0 matroid");
  const Matroid extended = free_extension(m);
  return minor(extended, {Subset::singleton(m.ground_size()), Subset()});
}

Matroid higgs_lift(const Matroid& m) {
  const Matroid d = dual(m);
  if (d.rank() == 0) throw Error(Errc::kRankZero, "cannot lift a free matroid");
  return dual(truncate(d));
}

Matroid relabel(const Matroid& m, const std::string& prefix) {
  std::vector<std::string> labels;
  for (const auto& label : m.ground().labels()) labels.push_back(prefix + label);
  return relabel(m, std::move(labels));
}

Matroid relabel(const Matroid& m, std::vector<std::string> labels) {
  if (static_cast<int>(labels.size()) != m.ground_size()) {
    throw Error(Errc::kInvalidParameters, "relabel needs one label per element");
  }
  return Matroid::from_family(RankedFamily(GroundSet(std::move(labels)), m.cyclic_flats()));
}

Matroid reorder(const Matroid& m, const std::vector<int>& order) {
  const int n = m.ground_size();
  std::vector<int> position(n, -1);
  if (static_cast<int>(order.size()) != n) {
    throw Error(Errc::kInvalidParameters, "reorder needs a permutation of the ground set");
  }
  for (int i = 0; i < n; ++i) {
    if (order[i] < 0 || order[i] >= n || position[order[i]] >= 0) {
      throw Error(Errc::kInvalidParameters, "reorder needs a permutation of the ground set");
    }
    position[order[i]] = i;
  }
  std::vector<std::string> labels;
  for (int old : order) labels.push_back(m.ground().label(old));
  std::vector<CyclicFlat> flats;
  for (const auto& f : m.cyclic_flats()) {
    Subset s;
    for (int x : f.set.elements()) s = s.with(position[x]);
    flats.push_back({s, f.rank});
  }
  return Matroid::from_family(RankedFamily(GroundSet(std::move(labels)), std::move(flats)));
}

namespace {

bool is_nested(const Matroid& m) { return is_chain(m.family().sets()); }

// Nested matroids: equal (|F|, r(F)) chains plus ground size. The witness
// maps each layer X_j - X_{j-1} (and the isthmuses) in index order.
std::optional<std::vector<int>> nested_isomorphism(const Matroid& m, const Matroid& n) {
  if (m.ground_size() != n.ground_size() || m.num_cyclic_flats() != n.num_cyclic_flats()) {
    return std::nullopt;
  }
  for (int i = 0; i < m.num_cyclic_flats(); ++i) {
    if (m.flat(i).set.size() != n.flat(i).set.size() || m.flat(i).rank != n.flat(i).rank) {
      return std::nullopt;
    }
  }
  std::vector<int> image(m.ground_size(), -1);
  Subset prev_m, prev_n;
  auto map_layer = [&](Subset lm, Subset ln) {
    const auto a = lm.elements();
    const auto b = ln.elements();
    for (std::size_t i = 0; i < a.size(); ++i) image[a[i]] = b[i];
  };
  for (int i = 0; i < m.num_cyclic_flats(); ++i) {
    map_layer(m.flat(i).set - prev_m, n.flat(i).set - prev_n);
    prev_m = m.flat(i).set;
    prev_n = n.flat(i).set;
  }
  map_layer(m.ground().all() - prev_m, n.ground().all() - prev_n);
  return image;
}

// Searches bijections between the cyclic flats preserving size, rank and
// pairwise intersection sizes, then matches elements by which flats contain
// them. Two elements with the same flat-membership pattern are
// interchangeable, so the flat bijection determines isomorphism.
std::optional<std::vector<int>> generic_isomorphism(const Matroid& m, const Matroid& n) {
  const int z = m.num_cyclic_flats();
  const int e = m.ground_size();
  std::vector<int> image(z, -1);
  std::vector<char> used(z, 0);

  auto patterns_match = [&]() -> std::optional<std::vector<int>> {
    std::map<std::vector<int>, std::vector<int>> m_classes, n_classes;
    for (int x = 0; x < e; ++x) {
      std::vector<int> pm, pn;
      for (int i = 0; i < z; ++i) {
        if (m.flat(i).set.contains(x)) pm.push_back(i);
        if (n.flat(image[i]).set.contains(x)) pn.push_back(i);
      }
      m_classes[pm].push_back(x);
      n_classes[pn].push_back(x);
    }
    if (m_classes.size() != n_classes.size()) return std::nullopt;
    std::vector<int> witness(e, -1);
    for (const auto& [pattern, xs] : m_classes) {
      auto it = n_classes.find(pattern);
      if (it == n_classes.end() || it->second.size() != xs.size()) return std::nullopt;
      for (std::size_t i = 0; i < xs.size(); ++i) witness[xs[i]] = it->second[i];
    }
    return witness;
  };

  std::optional<std::vector<int>> result;
  auto search = [&](auto&& self, int i) -> bool {
    if (i == z) {
      result = patterns_match();
      return result.has_value();
    }
    const CyclicFlat& f = m.flat(i);
    for (int j = 0; j < z; ++j) {
      const CyclicFlat& g = n.flat(j);
      if (used[j] || g.rank != f.rank || g.set.size() != f.set.size()) continue;
      bool ok = true;
      for (int k = 0; k < i && ok; ++k) {
        ok = (f.set & m.flat(k).set).size() == (g.set & n.flat(image[k]).set).size();
      }
      if (!ok) continue;
      image[i] = j;
      used[j] = 1;
      if (self(self, i + 1)) return true;
      used[j] = 0;
      image[i] = -1;
    }
    return false;
  };
  search(search, 0);
  return result;
}

}  // namespace

std::optional<std::vector<int>> isomorphism(const Matroid& m, const Matroid& n,
                                            const IsoOptions& options) {
  if (m.ground_size() != n.ground_size() || m.num_cyclic_flats() != n.num_cyclic_flats() ||
      m.rank() != n.rank()) {
    return std::nullopt;
  }
  const bool m_nested = is_nested(m);
  if (m_nested != is_nested(n)) return std::nullopt;
  if (m_nested && options.nested_fast_path) return nested_isomorphism(m, n);
  if (m.ground_size() > options.max_ground) {
    throw Error(Errc::kTooLarge, "isomorphism search limited to " +
                                     std::to_string(options.max_ground) + " elements");
  }
  using Sig = std::tuple<int, int>;
  std::vector<Sig> sm, sn;
  for (const auto& f : m.cyclic_flats()) sm.emplace_back(f.set.size(), f.rank);
  for (const auto& f : n.cyclic_flats()) sn.emplace_back(f.set.size(), f.rank);
  std::sort(sm.begin(), sm.end());
  std::sort(sn.begin(), sn.end());
  if (sm != sn) return std::nullopt;
  return generic_isomorphism(m, n);
}

std::optional<MinorSpec> find_minor(const Matroid& m, const Matroid& n,
                                    const MinorSearchOptions& options) {
  if (m.ground_size() > options.max_ground) {
    throw Error(Errc::kTooLarge, "minor search limited to " +
                                     std::to_string(options.max_ground) + " elements");
  }
  const int k_contract = m.rank() - n.rank();
  const int k_delete = m.nullity() - n.nullity();
  if (k_contract < 0 || k_delete < 0) return std::nullopt;
  const Subset all = m.ground().all();
  IsoOptions iso;
  iso.max_ground = options.max_ground;
  std::optional<MinorSpec> found;
  // Every minor arises with C independent and D coindependent.
  detail::for_each_k_subset(all, k_contract, [&](Subset c) {
    if (!is_independent(m, c)) return false;
    return detail::for_each_k_subset(all - c, k_delete, [&](Subset d) {
      if (m.rank(all - d) != m.rank()) return false;
      const MinorSpec spec{c, d};
      if (!is_isomorphic(minor(m, spec), n, iso)) return false;
      found = spec;
      return true;
    });
  });
  return found;
}

}  // namespace cflat
