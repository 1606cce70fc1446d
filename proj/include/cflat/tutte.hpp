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

#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "cflat/matroid.hpp"

namespace cflat {

using BigInt = boost::multiprecision::cpp_int;

// Dense bivariate polynomial with coefficients for x^0..x^max_x and
// y^0..y^max_y.
class Poly2 {
 public:
  struct Term {
    int x = 0;
    int y = 0;
    BigInt c;
    friend bool operator==(const Term&, const Term&) = default;
  };

  Poly2() : Poly2(0, 0) {}
  Poly2(int max_x, int max_y);

  int max_x() const { return max_x_; }
  int max_y() const { return max_y_; }
  const BigInt& at(int i, int j) const { return c_[index(i, j)]; }
  BigInt& at(int i, int j) { return c_[index(i, j)]; }
  // 0 outside the stored grid.
  BigInt coefficient(int i, int j) const;

  // Nonzero terms sorted by (x, y).
  std::vector<Term> terms() const;
  Poly2 transposed() const;
  friend Poly2 operator*(const Poly2& a, const Poly2& b);
  // Equal as polynomials, regardless of grid size.
  friend bool operator==(const Poly2& a, const Poly2& b);

 private:
  std::size_t index(int i, int j) const {
    return static_cast<std::size_t>(i) * (max_y_ + 1) + j;
  }
  int max_x_;
  int max_y_;
  std::vector<BigInt> c_;
};

// Whitney rank generating function: coefficient (i, j) counts subsets A with
// corank r(M) - r(A) = i and nullity ν(A) = j. The grid is
// [0, rank] x [0, nullity].
struct RankGenMatrix {
  int rank = 0;
  int nullity = 0;
  Poly2 coeffs;

  RankGenMatrix() = default;
  RankGenMatrix(int r, int nu) : rank(r), nullity(nu), coeffs(r, nu) {}
  friend bool operator==(const RankGenMatrix&, const RankGenMatrix&) = default;
};

// Sums over all 2^|E| subsets with the cyclic-flat rank oracle.
RankGenMatrix rank_gen_brute(const Matroid& m, int cap = kDefaultEnumerationCap);

// R(M □ N) from R(M), r(M) and R(N): the (p, q) coefficient is the sum of
// a_ij * b_kl over i + k - min(i, l) = p and j + l - min(i, l) = q.
// `multiply_adds`, if given, receives the number of coefficient products.
// Throws kDimensionMismatch when rm's rank disagrees with rank_m.
RankGenMatrix rank_gen_convolution(const RankGenMatrix& rm, int rank_m, const RankGenMatrix& rn,
                                   std::uint64_t* multiply_adds = nullptr);

// t(x, y) = R(x - 1, y - 1), expanded binomially.
Poly2 tutte_from_rank_gen(const RankGenMatrix& r);
inline Poly2 tutte_polynomial(const Matroid& m, int cap = kDefaultEnumerationCap) {
  return tutte_from_rank_gen(rank_gen_brute(m, cap));
}

}  // namespace cflat
