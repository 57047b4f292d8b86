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


#include <vector>

#include "doctest.h"
#include "nilcomm/enumerate.hpp"
#include "nilcomm/nilpotent.hpp"

using namespace nilcomm;

namespace {

struct Recorder {
  std::vector<Mat> seen;
  void operator()(const Mat& m) { seen.push_back(m); }
  void merge(const Recorder& o) { seen.insert(seen.end(), o.seen.begin(), o.seen.end()); }
};

}  // namespace

TEST_CASE("enumeration examples") {
  const Field f2 = make_field(2, 1);
  const std::vector<Mat> one = {Mat::unit(f2, 2, 2, 0, 1)};
  CHECK(enumerate_affine(std::span<const Mat>(one), CountAll{}).count == 2);

  const std::vector<Mat> cent = centralizer_basis(canonical_e(f2, 2, 1).matrix);
  CHECK(enumerate_affine(std::span<const Mat>(cent), CountRestrictedNilpotent{}).count == 2);

  const Field f8 = make_field(2, 3);
  std::vector<Mat> basis;
  for (std::size_t k = 0; k < 8; ++k) basis.push_back(Mat::unit(f8, 3, 3, k / 3, k % 3));
  CHECK(enumerate_affine(std::span<const Mat>(basis), CountAll{}).count == 16777216);
}

TEST_CASE("visits every combination once, low index fastest") {
  const Field f3 = make_field(3, 1);
  const std::vector<Mat> basis = {Mat::unit(f3, 1, 2, 0, 0), Mat::unit(f3, 1, 2, 0, 1)};
  for (unsigned workers : {1u, 2u, 4u}) {
    const Recorder r = enumerate_affine(std::span<const Mat>(basis), Recorder{}, {.workers = workers});
    REQUIRE(r.seen.size() == 9);
    for (std::size_t t = 0; t < 9; ++t) {
      CHECK(r.seen[t](0, 0) == t % 3);
      CHECK(r.seen[t](0, 1) == t / 3);
    }
  }
  const Recorder part = enumerate_affine_range(std::span<const Mat>(basis), 4, 3, Recorder{});
  REQUIRE(part.seen.size() == 3);
  CHECK(part.seen[0](0, 0) == 1);
  CHECK(part.seen[0](0, 1) == 1);
}

TEST_CASE("counts are independent of worker count") {
  const Field f4 = make_field(2, 2);
  const std::vector<Mat> basis = centralizer_basis(canonical_e(f4, 4, 2).matrix);
  const std::uint64_t one = enumerate_affine(std::span<const Mat>(basis), CountRestrictedNilpotent{}).count;
  for (unsigned w : {2u, 3u, 7u})
    CHECK(enumerate_affine(std::span<const Mat>(basis), CountRestrictedNilpotent{}, {.workers = w}).count == one);
  CHECK(enumerate_affine(std::span<const Mat>(basis), CountAll{}, {.workers = 3}).count == 65536);
}

TEST_CASE("budget is enforced before any work") {
  const Field f2 = make_field(2, 1);
  std::vector<Mat> basis(21, Mat::unit(f2, 1, 1, 0, 0));
  try {
    enumerate_affine(std::span<const Mat>(basis), CountAll{}, {.budget = 1u << 20});
    FAIL("expected BudgetExceeded");
  } catch (const BudgetExceeded& e) {
    CHECK(e.budget() == (1u << 20));
    CHECK(e.requested() == doctest::Approx(2097152.0));
  }
  CHECK(enumeration_size(2, 20, 1u << 20) == (1u << 20));
  CHECK_THROWS_AS(enumeration_size(65536, 4, kDefaultBudget), BudgetExceeded);
  CHECK_THROWS_AS(enumerate_affine(std::span<const Mat>(), CountAll{}), InvalidArgument);
}
