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

#include "cflat/freeprod.hpp"

#include <algorithm>
#include <numeric>

#include "cflat/error.hpp"
#include "cflat/minors.hpp"

namespace cflat {

namespace {

GroundSet concat_grounds(const GroundSet& a, const GroundSet& b) {
  for (const auto& label : b.labels()) {
    if (a.contains(label)) {
      throw Error(Errc::kOverlappingGroundSets, "label '" + label + "' occurs in both ground sets");
    }
  }
  std::vector<std::string> labels = a.labels();
  labels.insert(labels.end(), b.labels().begin(), b.labels().end());
  return GroundSet(std::move(labels));
}

Subset shift(Subset s, int by) { return Subset(s.bits() << by); }

}  // namespace

Matroid free_product(const Matroid& m, const Matroid& n) {
  GroundSet ground = concat_grounds(m.ground(), n.ground());
  const Subset em = m.ground().all();
  const int offset = m.ground_size();
  std::vector<CyclicFlat> flats;
  for (const auto& f : m.cyclic_flats()) {
    if (f.set != em) flats.push_back(f);
  }
  for (const auto& f : n.cyclic_flats()) {
    if (!f.set.empty()) flats.push_back({em | shift(f.set, offset), m.rank() + f.rank});
  }
  // Decided from the matroids themselves, not from any cached metadata.
  const bool m_has_isthmus = !basic_stats(m).isthmuses.empty();
  const bool n_has_loop = !basic_stats(n).loops.empty();
  if (!m_has_isthmus && !n_has_loop) flats.push_back({em, m.rank()});
  return Matroid::from_family(RankedFamily(std::move(ground), std::move(flats)));
}

std::string fresh_label(const Matroid& m) {
  for (int i = 0;; ++i) {
    std::string label = "e" + std::to_string(i);
    if (!m.ground().contains(label)) return label;
  }
}

namespace {

std::string pick_label(const Matroid& m, const std::string& label) {
  if (label.empty()) return fresh_label(m);
  if (m.ground().contains(label)) {
    throw Error(Errc::kLabelInUse, "label '" + label + "' is already in the ground set");
  }
  return label;
}

Matroid single(const std::string& label, int rank) {
  // U_{0,1} has Z = {{e}:0}; U_{1,1} has Z = {∅:0}.
  GroundSet g({label});
  const Subset s = rank == 0 ? g.all() : Subset();
  return Matroid::from_family(RankedFamily(g, {{s, 0}}));
}

}  // namespace

Matroid free_extension(const Matroid& m, const std::string& label) {
  return free_product(m, single(pick_label(m, label), 0));
}

Matroid free_coextension(const Matroid& m, const std::string& label) {
  Matroid coext = free_product(single(pick_label(m, label), 1), m);
  std::vector<int> order(coext.ground_size());
  std::iota(order.begin(), order.end(), 1);
  order.back() = 0;
  return reorder(coext, order);
}

int fp_rank_check(const Matroid& m, const Matroid& n, Subset x, Subset y) {
  const int rx = m.rank(x);
  const int ry = n.rank(y);
  return rx + ry + std::min(m.rank() - rx, y.size() - ry);
}

bool fp_independent_check(const Matroid& m, const Matroid& n, Subset x, Subset y) {
  return is_independent(m, x) && n.nullity(y) <= m.rank() - x.size();
}

}  // namespace cflat
