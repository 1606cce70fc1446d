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

#include "cflat/transversal.hpp"

#include <bit>

#include "cflat/error.hpp"
#include "cflat/minors.hpp"
#include "cflat/poset.hpp"

namespace cflat {

int cyclic_width(const Matroid& m) { return width_of_family(m.family().sets()); }

IngletonSides ingleton_sides(const Matroid& m, const std::vector<Subset>& family) {
  if (family.empty() || family.size() > 30) {
    throw Error(Errc::kInvalidParameters, "Ingleton family must have 1 to 30 members");
  }
  IngletonSides out;
  Subset common = m.ground().all();
  for (Subset x : family) common = common & x;
  out.lhs = m.rank(common);
  const std::uint32_t count = std::uint32_t{1} << family.size();
  for (std::uint32_t j = 1; j < count; ++j) {
    Subset u;
    for (std::size_t i = 0; i < family.size(); ++i) {
      if ((j >> i) & 1U) u = u | family[i];
    }
    const int r = m.rank(u);
    out.rhs += std::popcount(j) % 2 == 1 ? r : -r;
  }
  return out;
}

IngletonResult ingleton_transversal(const Matroid& m, int cap) {
  const int z = m.num_cyclic_flats();
  if (z > cap) {
    throw Error(Errc::kTooManyCyclicFlats, std::to_string(z) + " cyclic flats exceed the limit of " +
                                               std::to_string(cap));
  }
  IngletonResult result;
  std::vector<int> chosen;
  std::vector<Subset> sets;
  // Extends `chosen` to antichains of exactly `size` members in lex order.
  auto search = [&](auto&& self, int next, int size) -> bool {
    if (static_cast<int>(chosen.size()) == size) {
      ++result.checked;
      const IngletonSides sides = ingleton_sides(m, sets);
      if (sides.lhs > sides.rhs) {
        result.ok = false;
        result.antichain = chosen;
        result.sides = sides;
        return true;
      }
      return false;
    }
    for (int j = next; j < z; ++j) {
      const Subset s = m.flat(j).set;
      bool free = true;
      for (Subset t : sets) free = free && !s.comparable(t);
      if (!free) continue;
      chosen.push_back(j);
      sets.push_back(s);
      const bool stop = self(self, j + 1, size);
      chosen.pop_back();
      sets.pop_back();
      if (stop) return true;
    }
    return false;
  };
  const int width = cyclic_width(m);
  for (int size = 2; size <= width; ++size) {
    if (search(search, 0, size)) break;
  }
  return result;
}

BitransversalResult bitransversal_cert(const Matroid& m, int cap) {
  return {ingleton_transversal(m, cap), ingleton_transversal(dual(m), cap)};
}

}  // namespace cflat
