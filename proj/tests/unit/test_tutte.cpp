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

#include <doctest.h>

#include "cflat/cflat.hpp"
#include "support.hpp"

using namespace cflat;

namespace {

testing::SparsePoly poly(std::initializer_list<std::pair<std::pair<int, int>, long long>> terms) {
  return testing::SparsePoly(terms.begin(), terms.end());
}

}  // namespace

TEST_SUITE("tutte") {
  TEST_CASE("rank generating function examples") {
    CHECK(testing::sparse(rank_gen_brute(uniform(1, 1)).coeffs) == poly({{{0, 0}, 1}, {{1, 0}, 1}}));
    CHECK(testing::sparse(rank_gen_brute(uniform(0, 1)).coeffs) == poly({{{0, 0}, 1}, {{0, 1}, 1}}));
    CHECK(testing::sparse(rank_gen_brute(uniform(2, 4)).coeffs) ==
          poly({{{2, 0}, 1}, {{1, 0}, 4}, {{0, 0}, 6}, {{0, 1}, 4}, {{0, 2}, 1}}));
    CHECK(testing::sparse(tutte_polynomial(uniform(2, 4))) ==
          poly({{{2, 0}, 1}, {{1, 0}, 2}, {{0, 1}, 2}, {{0, 2}, 1}}));
    CHECK(testing::sparse(tutte_polynomial(uniform(1, 2))) == poly({{{1, 0}, 1}, {{0, 1}, 1}}));
    CHECK(testing::sparse(tutte_polynomial(uniform(0, 1))) == poly({{{0, 1}, 1}}));
    CHECK(testing::sparse(tutte_polynomial(uniform(1, 1))) == poly({{{1, 0}, 1}}));
  }

  TEST_CASE("convolution worked case and identity") {
    const auto r = rank_gen_convolution(rank_gen_brute(uniform(1, 1)), 1, rank_gen_brute(uniform(0, 1)));
    CHECK(testing::sparse(r.coeffs) == poly({{{0, 0}, 2}, {{1, 0}, 1}, {{0, 1}, 1}}));
    CHECK(r == rank_gen_brute(uniform(1, 2)));
    const RankGenMatrix empty = rank_gen_brute(uniform(0, 0));
    for (const auto& [name, m] : testing::small_catalog(6)) {
      CHECK(rank_gen_convolution(empty, 0, rank_gen_brute(m)) == rank_gen_brute(m));
    }
    try {
      rank_gen_convolution(rank_gen_brute(uniform(1, 2)), 2, empty);
      FAIL("expected DimensionMismatch");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::kDimensionMismatch);
    }
  }

  TEST_CASE("Tutte polynomial agrees with deletion-contraction") {
    for (const auto& [name, m] : testing::small_catalog(9)) {
      CAPTURE(name);
      const auto expected =
          testing::tutte_deletion_contraction(m.ground_size(), [&](Subset s) { return m.rank(s); });
      CHECK(testing::sparse(tutte_polynomial(m)) == expected);
    }
    // M(K_4): x^3 + 3x^2 + 2x + 4xy + 2y + 3y^2 + y^3.
    CHECK(testing::sparse(tutte_polynomial(catalog("mk4"))) ==
          poly({{{3, 0}, 1}, {{2, 0}, 3}, {{1, 0}, 2}, {{1, 1}, 4}, {{0, 1}, 2}, {{0, 2}, 3}, {{0, 3}, 1}}));
  }

  TEST_CASE("marginals, corners and duality") {
    for (const auto& [name, m] : testing::small_catalog(10)) {
      CAPTURE(name);
      const RankGenMatrix r = rank_gen_brute(m);
      BigInt total = 0;
      for (const auto& t : r.coeffs.terms()) total += t.c;
      CHECK(total == BigInt(1) << m.ground_size());
      CHECK(r.coeffs.coefficient(0, m.nullity()) == 1);
      CHECK(r.coeffs.coefficient(m.rank(), 0) == 1);
      CHECK(rank_gen_brute(dual(m)).coeffs == r.coeffs.transposed());
      CHECK(tutte_polynomial(dual(m)) == tutte_polynomial(m).transposed());
    }
  }

  TEST_CASE("convolution equals brute force with a bounded operation count") {
    const auto pool = testing::small_catalog(6);
    for (std::size_t i = 0; i < pool.size(); i += 3) {
      for (std::size_t j = 0; j < pool.size(); j += 4) {
        const Matroid& m = pool[i].m;
        const Matroid n = relabel(pool[j].m, "n.");
        CAPTURE(pool[i].name);
        CAPTURE(pool[j].name);
        std::uint64_t ops = 0;
        const auto conv = rank_gen_convolution(rank_gen_brute(m), m.rank(), rank_gen_brute(n), &ops);
        CHECK(conv == rank_gen_brute(free_product(m, n)));
        const std::uint64_t em = m.ground_size() + 1;
        const std::uint64_t en = n.ground_size() + 1;
        CHECK(ops <= em * em * en * en);
      }
    }
  }

  TEST_CASE("polynomial product and transposition") {
    Poly2 a(1, 0), b(0, 1);
    a.at(1, 0) = 1;
    a.at(0, 0) = 1;
    b.at(0, 1) = 1;
    b.at(0, 0) = 1;
    // Direct sums multiply Tutte polynomials.
    CHECK(tutte_polynomial(direct_sum(uniform(2, 4), relabel(catalog("mk4"), "k"))) ==
          tutte_polynomial(uniform(2, 4)) * tutte_polynomial(catalog("mk4")));
    CHECK((a * b).terms().size() == 4);
    CHECK(a.transposed() == b);
  }
}
