// Copyright 2026 The nilcomm Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "doctest.h"
#include "nilcomm/enumerate.hpp"
#include "nilcomm/nilpotent.hpp"
#include "nilcomm/random.hpp"
#include "oracles.hpp"

using namespace nilcomm;

TEST_CASE("jordan_type examples") {
  const Field f2 = make_field(2, 1);
  CHECK(jordan_type(Mat(f2, 4, 4)) == Partition({1, 1, 1, 1}));
  CHECK(jordan_type(canonical_e(f2, 5, 2).matrix) == Partition({2, 2, 1}));
  CHECK(jordan_type(canonical_e(f2, 5, 2).matrix).to_string() == "2^2.1");
  CHECK(jordan_type(jordan_block(f2, 4)) == Partition({4}));
  CHECK_THROWS_AS(jordan_type(Mat::identity(f2, 2)), DomainError);
}

TEST_CASE("canonical_e examples") {
  const Field f2 = make_field(2, 1);
  CHECK(canonical_e(f2, 2, 1).matrix == Mat::unit(f2, 2, 2, 0, 1));
  CHECK(canonical_e(f2, 2, 0).matrix.is_zero());
  const Mat e52 = Mat::unit(f2, 5, 5, 0, 3) + Mat::unit(f2, 5, 5, 1, 4);
  CHECK(canonical_e(f2, 5, 2).matrix == e52);
  CHECK(is_restricted_nilpotent(e52));
  CHECK_THROWS_AS(canonical_e(f2, 4, 3), InvalidArgument);
  CHECK_THROWS_AS(canonical_e(f2, 4, -1), InvalidArgument);
}

TEST_CASE("centralizer_basis examples") {
  const Field f2 = make_field(2, 1);
  CHECK(centralizer_basis(Mat(f2, 3, 3)).size() == 9);
  CHECK(centralizer_basis(canonical_e(f2, 2, 1).matrix).size() == 2);
  CHECK(centralizer_basis(canonical_e(f2, 4, 2).matrix).size() == 8);
  for (const Mat& z : centralizer_basis(canonical_e(f2, 5, 2).matrix))
    CHECK(commutator(z, canonical_e(f2, 5, 2).matrix).is_zero());
}

TEST_CASE("dim_centralizer examples") {
  CHECK(dim_centralizer(Partition({2, 1})) == 5);
  CHECK(dim_centralizer(Partition({2, 2})) == 8);
  CHECK(dim_centralizer(Partition({7, 5, 2})) == 32);
  CHECK(Partition({7, 5, 2}).transpose() == Partition({3, 3, 2, 2, 2, 1, 1}));
}

TEST_CASE("group orders against brute force over GF(2)") {
  CHECK(gl_order(2, 2) == oracle::count_invertible(2));
  CHECK(gl_order(2, 2) == 6);
  CHECK(gl_order(3, 2) == oracle::count_invertible(3));
  CHECK(gl_order(3, 2) == 168);
  CHECK(gl_order(1, 5) == 4);
  CHECK(gl_order(4, 3) == oracle::gl_count(4, 3));

  CHECK(centralizer_group_order(2, 1, 2) == 2);
  CHECK(centralizer_group_order(2, 1, 2) == oracle::count_invertible_commuting(oracle::corner_identity(2, 1), 2));
  CHECK(centralizer_group_order(4, 1, 2) == 192);
  CHECK(centralizer_group_order(4, 1, 2) == oracle::count_invertible_commuting(oracle::corner_identity(4, 1), 4));
  CHECK(centralizer_group_order(4, 2, 2) == oracle::count_invertible_commuting(oracle::corner_identity(4, 2), 4));
  CHECK(centralizer_group_order(3, 0, 4) == gl_order(3, 4));
  CHECK_THROWS_AS(centralizer_group_order(3, 2, 2), InvalidArgument);
}

TEST_CASE("orbit sizes") {
  CHECK(orbit_size(2, 1, 2) == 3);
  CHECK(orbit_size(2, 1, 2) == oracle::count_square_zero_of_rank(2, 1));
  CHECK(orbit_size(4, 2, 2) == 210);
  CHECK(orbit_size(4, 2, 2) == oracle::count_square_zero_of_rank(4, 2));
  CHECK(orbit_size(4, 1, 2) == oracle::count_square_zero_of_rank(4, 1));
  CHECK(orbit_size(5, 0, 7) == 1);
  for (std::uint64_t q : {2, 3, 4, 5, 7, 8})
    for (int n = 1; n <= 5; ++n)
      for (int i = 0; 2 * i <= n; ++i) CHECK(orbit_size(n, i, q) == oracle::square_zero_rank_count(n, i, q));
}

TEST_CASE("orbit sizes add up to the square-zero count") {
  for (int n = 1; n <= 4; ++n) {
    BigInt sum = 0;
    for (int i = 0; 2 * i <= n; ++i) sum += orbit_size(n, i, 2);
    CHECK(sum == oracle::square_zero(n).size());
  }
  // q = 4 by direct enumeration of gl(n), n <= 3 (n = 4 runs in test_long).
  const Field f4 = make_field(2, 2);
  for (int n = 1; n <= 3; ++n) {
    std::vector<Mat> basis;
    for (int k = 0; k < n * n; ++k) basis.push_back(Mat::unit(f4, n, n, k / n, k % n));
    BigInt sum = 0;
    for (int i = 0; 2 * i <= n; ++i) sum += orbit_size(n, i, 4);
    CHECK(sum == enumerate_affine(std::span<const Mat>(basis), CountRestrictedNilpotent{}).count);
  }
}

TEST_CASE("centralizer_group_order matches enumeration") {
  for (int k : {1, 2}) {
    const Field f = make_field(2, k);
    for (int n = 1; n <= 4; ++n) {
      for (int i = 0; 2 * i <= n; ++i) {
        const std::vector<Mat> basis = centralizer_basis(canonical_e(f, n, i).matrix);
        if (f->q() == 4 && basis.size() > 12) continue;
        const std::uint64_t count =
            enumerate_affine(std::span<const Mat>(basis), CountInvertible{}, {.budget = 1u << 24}).count;
        CHECK(centralizer_group_order(n, i, f->q()) == count);
      }
    }
  }
  const Field f3 = make_field(3, 1);
  const std::vector<Mat> b3 = centralizer_basis(canonical_e(f3, 4, 1).matrix);
  CHECK(centralizer_group_order(4, 1, 3) ==
        enumerate_affine(std::span<const Mat>(b3), CountInvertible{}).count);
}

TEST_CASE("cocharacter weights") {
  CHECK(cocharacter_weights(Partition({2})) == std::vector<int>{1, -1});
  CHECK(cocharacter_weights(Partition({7, 5, 2})) ==
        std::vector<int>{6, 4, 2, 0, -2, -4, -6, 4, 2, 0, -2, -4, 1, -1});
  CHECK(cocharacter_weights(Partition({1, 1})) == std::vector<int>{0, 0});
  // The Jordan matrix sits in degree 2.
  const Field f7 = make_field(7, 1);
  const Partition t({7, 5, 2});
  const Mat e = jordan_matrix(f7, t);
  const std::vector<int> w = cocharacter_weights(t);
  for (std::size_t a = 0; a < 14; ++a)
    for (std::size_t b = 0; b < 14; ++b)
      if (e(a, b) != 0) CHECK(w[a] - w[b] == 2);
}

TEST_CASE("invariance under conjugation") {
  Rng rng(17);
  for (int t = 0; t < 1000; ++t) {
    const Field f = make_field(t % 3 == 0 ? 3 : 2, 1 + static_cast<int>(rng.below(2)));
    const int n = 1 + static_cast<int>(rng.below(6));
    const int i = static_cast<int>(rng.below(static_cast<std::uint64_t>(n / 2 + 1)));
    const Mat x = canonical_e(f, n, i).matrix;
    const Mat y = conjugate(random_invertible(f, static_cast<std::size_t>(n), rng), x);
    CHECK(jordan_type(y) == square_zero_type(n, i));
    if (t < 100) CHECK(centralizer_basis(y).size() == static_cast<std::size_t>(dim_centralizer(jordan_type(y))));
  }
  const Field f2 = make_field(2, 1);
  for (int n = 1; n <= 7; ++n)
    for (int i = 0; 2 * i <= n; ++i) {
      const std::size_t d = centralizer_basis(canonical_e(f2, n, i).matrix).size();
      CHECK(d == static_cast<std::size_t>(dim_centralizer(square_zero_type(n, i))));
      CHECK(d == static_cast<std::size_t>((n - i) * (n - i) + i * i));
    }
}
