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

#include "cflat/tutte.hpp"

#include <algorithm>

#include "cflat/error.hpp"

namespace cflat {

Poly2::Poly2(int max_x, int max_y)
    : max_x_(max_x), max_y_(max_y), c_(static_cast<std::size_t>(max_x + 1) * (max_y + 1)) {
  if (max_x < 0 || max_y < 0) throw Error(Errc::kInvalidParameters, "negative polynomial degree");
}

BigInt Poly2::coefficient(int i, int j) const {
  if (i < 0 || j < 0 || i > max_x_ || j > max_y_) return 0;
  return at(i, j);
}

std::vector<Poly2::Term> Poly2::terms() const {
  std::vector<Term> out;
  for (int i = 0; i <= max_x_; ++i) {
    for (int j = 0; j <= max_y_; ++j) {
      if (at(i, j) != 0) out.push_back({i, j, at(i, j)});
    }
  }
  return out;
}

Poly2 Poly2::transposed() const {
  Poly2 out(max_y_, max_x_);
  for (int i = 0; i <= max_x_; ++i) {
    for (int j = 0; j <= max_y_; ++j) out.at(j, i) = at(i, j);
  }
  return out;
}

Poly2 operator*(const Poly2& a, const Poly2& b) {
  Poly2 out(a.max_x_ + b.max_x_, a.max_y_ + b.max_y_);
  for (int i = 0; i <= a.max_x_; ++i) {
    for (int j = 0; j <= a.max_y_; ++j) {
      if (a.at(i, j) == 0) continue;
      for (int k = 0; k <= b.max_x_; ++k) {
        for (int l = 0; l <= b.max_y_; ++l) out.at(i + k, j + l) += a.at(i, j) * b.at(k, l);
      }
    }
  }
  return out;
}

bool operator==(const Poly2& a, const Poly2& b) { return a.terms() == b.terms(); }

RankGenMatrix rank_gen_brute(const Matroid& m, int cap) {
  const RankTable table = RankTable::of(m, cap);
  RankGenMatrix out(m.rank(), m.nullity());
  const std::uint64_t count = std::uint64_t{1} << m.ground_size();
  // Accumulate in machine words, convert once.
  std::vector<std::uint64_t> tally(static_cast<std::size_t>(m.rank() + 1) * (m.nullity() + 1));
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    const Subset a(mask);
    const int r = table(a);
    ++tally[static_cast<std::size_t>(m.rank() - r) * (m.nullity() + 1) + (a.size() - r)];
  }
  for (int i = 0; i <= m.rank(); ++i) {
    for (int j = 0; j <= m.nullity(); ++j) {
      out.coeffs.at(i, j) = tally[static_cast<std::size_t>(i) * (m.nullity() + 1) + j];
    }
  }
  return out;
}

RankGenMatrix rank_gen_convolution(const RankGenMatrix& rm, int rank_m, const RankGenMatrix& rn,
                                   std::uint64_t* multiply_adds) {
  if (rm.rank != rank_m || rm.coeffs.max_x() != rm.rank || rm.coeffs.max_y() != rm.nullity ||
      rn.coeffs.max_x() != rn.rank || rn.coeffs.max_y() != rn.nullity) {
    throw Error(Errc::kDimensionMismatch, "rank generating matrix dimensions are inconsistent");
  }
  // r(M □ N) = r(M) + r(N); nullities add the same way.
  RankGenMatrix out(rm.rank + rn.rank, rm.nullity + rn.nullity);
  std::uint64_t ops = 0;
  for (int i = 0; i <= rm.rank; ++i) {
    for (int j = 0; j <= rm.nullity; ++j) {
      const BigInt& a = rm.coeffs.at(i, j);
      for (int k = 0; k <= rn.rank; ++k) {
        for (int l = 0; l <= rn.nullity; ++l) {
          ++ops;
          const int shared = std::min(i, l);
          out.coeffs.at(i + k - shared, j + l - shared) += a * rn.coeffs.at(k, l);
        }
      }
    }
  }
  if (multiply_adds != nullptr) *multiply_adds = ops;
  return out;
}

namespace {

std::vector<std::vector<BigInt>> binomials(int n) {
  std::vector<std::vector<BigInt>> c(n + 1);
  for (int i = 0; i <= n; ++i) {
    c[i].assign(i + 1, 1);
    for (int k = 1; k < i; ++k) c[i][k] = c[i - 1][k - 1] + c[i - 1][k];
  }
  return c;
}

}  // namespace

Poly2 tutte_from_rank_gen(const RankGenMatrix& r) {
  const int mx = r.coeffs.max_x();
  const int my = r.coeffs.max_y();
  const auto binom = binomials(std::max(mx, my));
  Poly2 t(mx, my);
  // (x-1)^i (y-1)^j = sum_p sum_q C(i,p) C(j,q) (-1)^{i-p+j-q} x^p y^q.
  for (int i = 0; i <= mx; ++i) {
    for (int j = 0; j <= my; ++j) {
      const BigInt& a = r.coeffs.at(i, j);
      if (a == 0) continue;
      for (int p = 0; p <= i; ++p) {
        for (int q = 0; q <= j; ++q) {
          BigInt term = a * binom[i][p] * binom[j][q];
          if ((i - p + j - q) % 2 != 0) term = -term;
          t.at(p, q) += term;
        }
      }
    }
  }
  return t;
}

}  // namespace cflat
