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

#include "cflat/constructions.hpp"

#include <algorithm>
#include <random>

#include "cflat/error.hpp"
#include "cflat/freeprod.hpp"

namespace cflat {

IFSequence::IFSequence(std::string_view steps) : steps_(steps) {
  for (char c : steps_) {
    if (c != 'i' && c != 'f') {
      throw Error(Errc::kInvalidParameters,
                  std::string("sequence step '") + c + "' is not 'i' or 'f'");
    }
  }
}

namespace {

int flat_index(const Matroid& m, Subset s) {
  for (int i = 0; i < m.num_cyclic_flats(); ++i) {
    if (m.flat(i).set == s) return i;
  }
  return -1;
}

}  // namespace

Realization realize_lattice(const FiniteLattice& lattice, RealizationVariant variant) {
  const int n = lattice.size();
  // V_z as lattice element indices.
  std::vector<std::vector<int>> v(n);
  for (int z = 0; z < n; ++z) {
    for (int y = 0; y < n; ++y) {
      if (!lattice.leq(z, y)) v[z].push_back(y);
    }
  }
  std::vector<std::string> labels;
  std::vector<CyclicFlat> flats;
  if (variant == RealizationVariant::kPlain) {
    // Ground: B (all but the top) in lattice order, then the satellites.
    std::vector<int> vertex(n, -1);
    for (int y = 0; y < n; ++y) {
      if (y == lattice.top()) continue;
      vertex[y] = static_cast<int>(labels.size());
      labels.push_back(lattice.name(y));
    }
    const int base = static_cast<int>(labels.size());
    for (int z = 0; z < n; ++z) labels.push_back("s:" + lattice.name(z));
    for (int z = 0; z < n; ++z) {
      Subset f;
      for (int y : v[z]) f = f.with(vertex[y]);
      for (int x = 0; x < n; ++x) {
        if (lattice.leq(x, z)) f = f.with(base + x);
      }
      flats.push_back({f, static_cast<int>(v[z].size())});
    }
  } else {
    std::vector<Subset> points(n);
    for (int z = 0; z < n; ++z) {
      for (std::size_t k = 0; k <= v[z].size(); ++k) {
        points[z] = points[z].with(static_cast<int>(labels.size()));
        labels.push_back("s:" + lattice.name(z) + ":" + std::to_string(k));
      }
    }
    for (int z = 0; z < n; ++z) {
      Subset f;
      for (int y = 0; y < n; ++y) {
        if (lattice.leq(y, z)) f = f | points[y];
      }
      flats.push_back({f, static_cast<int>(v[z].size())});
    }
  }
  std::vector<Subset> sets;
  for (const auto& f : flats) sets.push_back(f.set);
  Matroid m = Matroid::from_family(RankedFamily(GroundSet(std::move(labels)), std::move(flats)));
  std::vector<int> flat_of(n);
  for (int z = 0; z < n; ++z) flat_of[z] = flat_index(m, sets[z]);
  return {std::move(m), std::move(flat_of)};
}

std::vector<FiniteLattice> enumerate_lattices(int max_size) {
  std::vector<FiniteLattice> out;
  for (int n = 1; n <= max_size; ++n) {
    std::vector<std::string> names;
    for (int i = 0; i < n; ++i) names.push_back(std::to_string(i));
    // Relations among the middle elements 1..n-2, only from lower to higher
    // index (every poset has such a labelling).
    std::vector<std::pair<int, int>> pairs;
    for (int a = 1; a + 1 < n; ++a) {
      for (int b = a + 1; b + 1 < n; ++b) pairs.emplace_back(a, b);
    }
    std::vector<FiniteLattice> found;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
      std::vector<char> leq(static_cast<std::size_t>(n) * n, 0);
      auto at = [&](int a, int b) -> char& { return leq[static_cast<std::size_t>(a) * n + b]; };
      for (int a = 0; a < n; ++a) {
        at(a, a) = 1;
        at(0, a) = 1;
        at(a, n - 1) = 1;
      }
      for (std::size_t p = 0; p < pairs.size(); ++p) {
        if ((mask >> p) & 1U) at(pairs[p].first, pairs[p].second) = 1;
      }
      // Skip relations that are not already transitively closed; their
      // closures appear under another mask.
      bool closed = true;
      for (int a = 0; a < n && closed; ++a) {
        for (int b = 0; b < n && closed; ++b) {
          for (int c = 0; c < n && closed; ++c) {
            if (at(a, b) && at(b, c) && !at(a, c)) closed = false;
          }
        }
      }
      if (!closed) continue;
      Poset order = Poset::from_relation(n, leq);
      if (!check_lattice(order).is_lattice) continue;
      const bool seen = std::any_of(found.begin(), found.end(), [&](const FiniteLattice& l) {
        return poset_isomorphic(l.order(), order);
      });
      if (!seen) found.emplace_back(names, std::move(order));
    }
    out.insert(out.end(), found.begin(), found.end());
  }
  return out;
}

Matroid nested_from_sequence(const IFSequence& seq) {
  std::vector<CyclicFlat> flats{{Subset(), 0}};
  int size = 0;
  int rank = 0;
  std::vector<std::string> labels;
  for (int step = 0; step < seq.size(); ++step) {
    labels.push_back("e" + std::to_string(step + 1));
    if (seq[step] == 'i') {
      // An isthmus leaves the cyclic flats unchanged.
      ++rank;
    } else {
      // Free extension: drop E(M) if present, adjoin E(M) ∪ e at rank r(M).
      const Subset old_all = Subset::prefix(size);
      std::erase_if(flats, [&](const CyclicFlat& f) { return f.set == old_all; });
      flats.push_back({Subset::prefix(size + 1), rank});
    }
    ++size;
  }
  return Matroid::from_family(RankedFamily(GroundSet(std::move(labels)), std::move(flats)));
}

IFSequence nested_sequence_of(const Matroid& m) {
  if (!is_chain(m.family().sets())) {
    throw Error(Errc::kNotNested, "the cyclic flats do not form a chain");
  }
  std::string steps(m.flat(0).set.size(), 'f');
  for (int j = 1; j < m.num_cyclic_flats(); ++j) {
    const int layer = (m.flat(j).set - m.flat(j - 1).set).size();
    const int isthmuses = m.flat(j).rank - m.flat(j - 1).rank;
    steps.append(isthmuses, 'i');
    steps.append(layer - isthmuses, 'f');
  }
  steps.append((m.ground().all() - m.flat(m.top()).set).size(), 'i');
  return IFSequence(steps);
}

SubsequenceMinor nested_subsequence_minor(const IFSequence& seq_n, const IFSequence& seq_m) {
  SubsequenceMinor out;
  int pos = 0;
  for (int i = 0; i < seq_n.size(); ++i) {
    while (pos < seq_m.size() && seq_m[pos] != seq_n[i]) ++pos;
    if (pos == seq_m.size()) {
      out.embedding.clear();
      return out;
    }
    out.embedding.push_back(pos++);
  }
  out.is_subsequence = true;
  std::vector<char> used(seq_m.size(), 0);
  for (int p : out.embedding) used[p] = 1;
  for (int p = 0; p < seq_m.size(); ++p) {
    if (used[p]) continue;
    if (seq_m[p] == 'f') {
      out.spec.deletion = out.spec.deletion.with(p);
    } else {
      out.spec.contraction = out.spec.contraction.with(p);
    }
  }
  return out;
}

Matroid uniform(int r, int n, std::vector<std::string> labels) {
  if (n < 0 || r < 0 || r > n || n > kMaxGroundSize) {
    throw Error(Errc::kInvalidParameters, "uniform matroid needs 0 <= r <= n");
  }
  if (labels.empty()) labels = default_labels(n);
  if (static_cast<int>(labels.size()) != n) {
    throw Error(Errc::kInvalidParameters, "uniform matroid needs n labels");
  }
  GroundSet ground(std::move(labels));
  std::vector<CyclicFlat> flats;
  if (r == n) {
    flats = {{Subset(), 0}};
  } else if (r == 0) {
    flats = {{ground.all(), 0}};
  } else {
    flats = {{Subset(), 0}, {ground.all(), r}};
  }
  return Matroid::from_family(RankedFamily(std::move(ground), std::move(flats)));
}

Matroid excluded_minor_pn(int n) {
  if (n < 2 || 2 * n > kMaxGroundSize) {
    throw Error(Errc::kInvalidParameters, "P_n needs n >= 2");
  }
  const auto labels = default_labels(2 * n);
  Matroid m = direct_sum(uniform(n - 1, n, {labels.begin(), labels.begin() + n}),
                         uniform(n - 1, n, {labels.begin() + n, labels.end()}));
  while (m.rank() > n) m = truncate(m);
  return m;
}

Matroid gimenez_family(int n, const std::vector<int>& sigma) {
  if (n < 1 || static_cast<int>(sigma.size()) != n || 4 * n + 5 > kMaxGroundSize) {
    throw Error(Errc::kInvalidParameters, "gimenez family needs n >= 1 and a permutation of 1..n");
  }
  std::vector<int> sorted = sigma;
  std::sort(sorted.begin(), sorted.end());
  for (int i = 0; i < n; ++i) {
    if (sorted[i] != i + 1) {
      throw Error(Errc::kInvalidParameters, "sigma is not a permutation of 1..n");
    }
  }
  std::vector<std::string> labels{"a", "a'", "a''", "b", "b'"};
  for (const char* prefix : {"x", "y", "z", "w"}) {
    for (int i = 1; i <= n; ++i) labels.push_back(prefix + std::to_string(i));
  }
  auto x = [&](int i) { return 5 + (i - 1); };
  auto y = [&](int i) { return 5 + n + (i - 1); };
  auto z = [&](int i) { return 5 + 2 * n + (i - 1); };
  auto w = [&](int i) { return 5 + 3 * n + (i - 1); };
  Subset a = Subset::prefix(3);
  Subset b = Subset::singleton(3).with(4);
  for (int i = 1; i <= n; ++i) {
    a = a.with(x(i));
    b = b.with(y(i));
  }
  std::vector<CyclicFlat> flats{{Subset(), 0}, {a, n + 1}, {b, n + 1}};
  for (int i = 1; i <= n; ++i) {
    a = a.with(z(i)).with(w(i));
    b = b.with(z(i)).with(w(sigma[i - 1]));
    flats.push_back({a, n + 1 + i});
    flats.push_back({b, n + 1 + i});
  }
  GroundSet ground(std::move(labels));
  flats.push_back({ground.all(), 2 * n + 2});
  return Matroid::from_family(RankedFamily(std::move(ground), std::move(flats)));
}

std::optional<std::vector<int>> gimenez_permutation(const Matroid& m) {
  const int e = m.ground_size();
  if ((e - 5) % 4 != 0 || e < 9) return std::nullopt;
  const int n = (e - 5) / 4;
  if (m.num_cyclic_flats() != 2 * n + 4) return std::nullopt;
  // |A_i| = n + 3 + 2i and |B_i| = n + 2 + 2i, so parity splits the chains.
  std::vector<Subset> chain_a, chain_b;
  for (int i = 0; i < m.num_cyclic_flats(); ++i) {
    if (i == m.bottom() || i == m.top()) continue;
    const Subset s = m.flat(i).set;
    ((s.size() - n) % 2 == 1 ? chain_a : chain_b).push_back(s);
  }
  auto by_size = [](Subset p, Subset q) { return p.size() < q.size(); };
  std::sort(chain_a.begin(), chain_a.end(), by_size);
  std::sort(chain_b.begin(), chain_b.end(), by_size);
  if (static_cast<int>(chain_a.size()) != n + 1 || static_cast<int>(chain_b.size()) != n + 1) {
    return std::nullopt;
  }
  if (chain_a.front().size() != n + 3 || chain_b.front().size() != n + 2) return std::nullopt;
  std::vector<Subset> layer_a(n + 1), layer_b(n + 1);
  for (int i = 1; i <= n; ++i) {
    if (!chain_a[i - 1].is_subset_of(chain_a[i]) || !chain_b[i - 1].is_subset_of(chain_b[i])) {
      return std::nullopt;
    }
    layer_a[i] = chain_a[i] - chain_a[i - 1];
    layer_b[i] = chain_b[i] - chain_b[i - 1];
    if (layer_a[i].size() != 2 || layer_b[i].size() != 2) return std::nullopt;
  }
  std::vector<int> sigma(n, 0);
  for (int i = 1; i <= n; ++i) {
    // z_i is the element both layers share; the other B element is w_σ(i).
    // Equal layers mean σ(i) = i.
    const Subset shared = layer_a[i] & layer_b[i];
    if (shared.size() == 2) {
      sigma[i - 1] = i;
      continue;
    }
    if (shared.size() != 1) return std::nullopt;
    const Subset w = layer_b[i] - shared;
    for (int j = 1; j <= n; ++j) {
      if (!(layer_a[j] & w).empty()) sigma[i - 1] = j;
    }
    if (sigma[i - 1] == 0) return std::nullopt;
  }
  return sigma;
}

namespace {

Matroid family_matroid(std::vector<std::string> labels,
                       const std::vector<std::vector<std::string>>& hyperplanes, int rank) {
  GroundSet ground(std::move(labels));
  std::vector<CyclicFlat> flats{{Subset(), 0}, {ground.all(), rank}};
  for (const auto& h : hyperplanes) flats.push_back({ground.subset_of(h), rank - 1});
  return Matroid::from_family(RankedFamily(std::move(ground), std::move(flats)));
}

}  // namespace

Matroid catalog(const std::string& name) {
  if (name == "mk4" || name == "w3") {
    // Edges of K_4 named by their endpoints; the triangles are the rank-2
    // cyclic flats. The whirl relaxes the triangle {23,24,34}.
    std::vector<std::vector<std::string>> triangles{
        {"12", "13", "23"}, {"12", "14", "24"}, {"13", "14", "34"}, {"23", "24", "34"}};
    if (name == "w3") triangles.pop_back();
    return family_matroid({"12", "13", "14", "23", "24", "34"}, triangles, 3);
  }
  if (name == "fano") {
    return family_matroid({"1", "2", "3", "4", "5", "6", "7"},
                          {{"1", "2", "3"},
                           {"1", "4", "5"},
                           {"1", "6", "7"},
                           {"2", "4", "6"},
                           {"2", "5", "7"},
                           {"3", "4", "7"},
                           {"3", "5", "6"}},
                          3);
  }
  throw Error(Errc::kUnknownName, "no catalog entry named '" + name + "'");
}

std::vector<std::string> catalog_names() { return {"fano", "mk4", "w3"}; }

ChainMinor uniform_minor_from_chain(const Matroid& m, int k) {
  if (k < 1) throw Error(Errc::kInvalidParameters, "k must be at least 1");
  if (!is_chain(m.family().sets())) {
    throw Error(Errc::kNotNested, "the cyclic flats do not form a chain");
  }
  if (m.num_cyclic_flats() < k + 2) {
    throw Error(Errc::kChainTooShort, "chain has " + std::to_string(m.num_cyclic_flats()) +
                                          " cyclic flats; need at least " + std::to_string(k + 2));
  }
  std::vector<Subset> ind(k + 2), fre(k + 2);
  for (int j = 1; j <= k + 1; ++j) {
    const auto layer = (m.flat(j).set - m.flat(j - 1).set).elements();
    const int isthmuses = m.flat(j).rank - m.flat(j - 1).rank;
    for (int t = 0; t < static_cast<int>(layer.size()); ++t) {
      if (t < isthmuses) {
        ind[j] = ind[j].with(layer[t]);
      } else {
        fre[j] = fre[j].with(layer[t]);
      }
    }
  }
  ChainMinor out;
  out.proof_spec.contraction = ind[k + 1];
  out.proof_spec.deletion = (m.ground().all() - m.flat(k + 1).set) | m.flat(0).set;
  for (int j = 1; j <= k - 1; ++j) out.proof_spec.deletion = out.proof_spec.deletion | fre[j];

  // The remaining minor is U_{ρ,ρ+ν} on I_1..I_k ∪ F_k ∪ F_{k+1}; contract
  // ρ - k of the I elements and delete ν - 2 of the F elements.
  Subset rest_ind, rest_free = fre[k] | fre[k + 1];
  for (int j = 1; j <= k; ++j) rest_ind = rest_ind | ind[j];
  out.trimmed_spec = out.proof_spec;
  const auto ie = rest_ind.elements();
  const auto fe = rest_free.elements();
  for (int t = 0; t < rest_ind.size() - k; ++t) {
    out.trimmed_spec.contraction = out.trimmed_spec.contraction.with(ie[t]);
  }
  for (int t = 0; t < rest_free.size() - 2; ++t) {
    out.trimmed_spec.deletion = out.trimmed_spec.deletion.with(fe[t]);
  }
  return out;
}

namespace {

using Rng = std::mt19937_64;

int uniform_int(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

IFSequence random_sequence(Rng& rng, int length) {
  std::string s;
  for (int i = 0; i < length; ++i) s.push_back(uniform_int(rng, 0, 1) == 0 ? 'i' : 'f');
  return IFSequence(s);
}

Matroid tagged(const Matroid& m, const std::string& tag) {
  std::vector<std::string> labels;
  for (int i = 0; i < m.ground_size(); ++i) labels.push_back(tag + std::to_string(i));
  return relabel(m, std::move(labels));
}

Matroid random_piece(Rng& rng, int budget, int depth) {
  // Leaves: 0 uniform, 1 nested, 9 named; 10 relaxes. Composite steps are
  // forced at the top so that sums (and hence wider lattices) are common.
  int choice;
  if (depth >= 3 || budget <= 1) {
    choice = uniform_int(rng, 0, 1);
  } else if (depth == 0) {
    // Direct sums twice as likely as any other step.
    constexpr int kTop[] = {2, 3, 4, 5, 6, 7, 8, 9, 10, 2, 8};
    choice = kTop[uniform_int(rng, 0, 10)];
  } else {
    choice = uniform_int(rng, 0, 10);
  }
  if (choice == 9 && budget < 6) choice = 0;
  switch (choice) {
    case 0: {
      const int n = uniform_int(rng, 1, std::min(budget, 5));
      // Mostly proper uniform matroids, which have two cyclic flats.
      const int r = n >= 2 && uniform_int(rng, 0, 3) > 0 ? uniform_int(rng, 1, n - 1)
                                                          : uniform_int(rng, 0, n);
      return uniform(r, n);
    }
    case 1:
      return nested_from_sequence(random_sequence(rng, uniform_int(rng, 1, std::min(budget, 7))));
    case 9: {
      const auto names = catalog_names();
      const Matroid m = catalog(names[uniform_int(rng, 0, static_cast<int>(names.size()) - 1)]);
      return m.ground_size() <= budget ? m : uniform(2, std::min(budget, 5));
    }
    case 2:
    case 3:
    case 8: {
      const int left = uniform_int(rng, 1, budget - 1);
      const Matroid a = tagged(random_piece(rng, left, depth + 1), "p");
      const Matroid b = tagged(random_piece(rng, budget - left, depth + 1), "q");
      return choice == 3 ? free_product(a, b) : direct_sum(a, b);
    }
    case 4:
      return dual(random_piece(rng, budget, depth + 1));
    case 5: {
      Matroid m = random_piece(rng, budget, depth + 1);
      return m.rank() > 0 ? truncate(m) : m;
    }
    case 6: {
      Matroid m = random_piece(rng, budget, depth + 1);
      return dual(m).rank() > 0 ? higgs_lift(m) : m;
    }
    case 7: {
      Matroid m = random_piece(rng, std::min(budget + 1, kDefaultEnumerationCap), depth + 1);
      if (m.ground_size() == 0) return m;
      const int x = uniform_int(rng, 0, m.ground_size() - 1);
      return uniform_int(rng, 0, 1) == 0 ? delete_element(m, x) : contract_element(m, x);
    }
    default: {
      Matroid m = random_piece(rng, budget, depth + 1);
      std::vector<Subset> relaxable;
      for (int i = 0; i < m.num_cyclic_flats(); ++i) {
        if (i == m.bottom() || i == m.top()) continue;
        bool isolated = true;
        for (int j = 0; j < m.num_cyclic_flats() && isolated; ++j) {
          if (j != i && j != m.bottom() && j != m.top() && m.flat(i).set.comparable(m.flat(j).set)) {
            isolated = false;
          }
        }
        if (isolated) relaxable.push_back(m.flat(i).set);
      }
      if (relaxable.empty()) return m;
      return relax(m, relaxable[uniform_int(rng, 0, static_cast<int>(relaxable.size()) - 1)]);
    }
  }
}

}  // namespace

Matroid random_matroid(std::uint64_t seed, int max_ground) {
  if (max_ground < 1) throw Error(Errc::kInvalidParameters, "max_ground must be positive");
  Rng rng(seed);
  while (true) {
    Matroid m = random_piece(rng, max_ground, 0);
    if (m.ground_size() >= 1 && m.ground_size() <= max_ground) {
      return relabel(m, default_labels(m.ground_size()));
    }
  }
}

Matroid random_width2_matroid(std::uint64_t seed, int max_ground) {
  if (max_ground < 4) throw Error(Errc::kInvalidParameters, "max_ground must be at least 4");
  Rng rng(seed);
  while (true) {
    const int n = uniform_int(rng, 4, max_ground);
    const Matroid chain = nested_from_sequence(random_sequence(rng, n));
    const Subset top = chain.flat(chain.top()).set;
    const Subset bottom = chain.flat(chain.bottom()).set;
    Subset extra = bottom;
    for (int x : (top - bottom).elements()) {
      if (uniform_int(rng, 0, 1) == 1) extra = extra.with(x);
    }
    std::vector<CyclicFlat> flats = chain.cyclic_flats();
    if (std::all_of(flats.begin(), flats.end(),
                    [&](const CyclicFlat& f) { return f.set.comparable(extra); })) {
      continue;
    }
    flats.push_back({extra, uniform_int(rng, 1, std::max(1, chain.rank()))});
    auto result = validate(RankedFamily(chain.ground(), std::move(flats)));
    auto* m = std::get_if<Matroid>(&result);
    if (m != nullptr && width_of_family(m->family().sets()) == 2) {
      return relabel(*m, default_labels(m->ground_size()));
    }
  }
}

}  // namespace cflat
