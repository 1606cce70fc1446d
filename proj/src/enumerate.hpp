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

#include <vector>

#include "cflat/subset.hpp"

namespace cflat::detail {

// Calls fn on every k-element subset of `pool`, in canonical order. Stops
// early when fn returns true.
template <typename Fn>
bool for_each_k_subset(Subset pool, int k, Fn&& fn) {
  const std::vector<int> items = pool.elements();
  const int n = static_cast<int>(items.size());
  if (k < 0 || k > n) return false;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    Subset s;
    for (int i : idx) s = s.with(items[i]);
    if (fn(s)) return true;
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) return false;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace cflat::detail
