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
#include "nilcomm/ff.hpp"
#include "props.hpp"

using namespace nilcomm;

namespace {

// Polynomials over GF(p) as coefficient vectors, constant term first.
std::vector<int> poly_mod(std::vector<int> a, const std::vector<int>& m, int p) {
  while (a.size() >= m.size()) {
    const int lead = a.back();
    const std::size_t shift = a.size() - m.size();
    for (std::size_t i = 0; i < m.size(); ++i) a[shift + i] = ((a[shift + i] - lead * m[i]) % p + p) % p;
    a.pop_back();
  }
  return a;
}

bool divides(const std::vector<int>& d, const std::vector<int>& a, int p) {
  for (int v : poly_mod(a, d, p))
    if (v != 0) return false;
  return true;
}

std::vector<int> monic_from_index(long idx, int deg, int p) {
  std::vector<int> c(static_cast<std::size_t>(deg) + 1, 0);
  for (int i = 0; i < deg; ++i, idx /= p) c[static_cast<std::size_t>(i)] = static_cast<int>(idx % p);
  c.back() = 1;
  return c;
}

bool irreducible(const std::vector<int>& f, int p) {
  const int deg = static_cast<int>(f.size()) - 1;
  for (int d = 1; 2 * d <= deg; ++d) {
    long count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (long idx = 0; idx < count; ++idx)
      if (divides(monic_from_index(idx, d, p), f, p)) return false;
  }
  return true;
}

// First monic irreducible, coefficient vectors compared constant term first.
std::vector<int> smallest_irreducible(int p, int k) {
  long count = 1;
  for (int i = 0; i < k; ++i) count *= p;
  std::vector<std::vector<int>> cands;
  for (long idx = 0; idx < count; ++idx) {
    auto c = monic_from_index(idx, k, p);
    if (irreducible(c, p)) cands.push_back(c);
  }
  return *std::min_element(cands.begin(), cands.end());
}

}  // namespace

TEST_CASE("prime fields") {
  const Field f2 = make_field(2, 1);
  CHECK(f2->q() == 2);
  CHECK(f2->add(1, 1) == 0);
  const Field f7 = make_field(7, 1);
  CHECK(f7->q() == 7);
  CHECK(f7->mul(3, 5) == 1);
  CHECK(f7->sub(2, 5) == 4);
  CHECK(f7->from_int(-1) == 6);
}

TEST_CASE("GF(4) arithmetic") {
  const Field f4 = make_field(2, 2);
  CHECK(f4->modulus() == std::vector<int>{1, 1, 1});
  CHECK(f4->mul(2, 2) == 3);
  CHECK(f4->mul(2, 3) == 1);
}

TEST_CASE("modulus is the smallest monic irreducible") {
  for (int p : {2, 3, 5, 7}) {
    for (int k = 2; k <= 4; ++k) {
      long q = 1;
      for (int i = 0; i < k; ++i) q *= p;
      if (q > 2401) continue;
      CAPTURE(p);
      CAPTURE(k);
      CHECK(make_field(p, k)->modulus() == smallest_irreducible(p, k));
    }
  }
  CHECK(make_field(2, 3)->modulus() == std::vector<int>{1, 0, 1, 1});
}

TEST_CASE("encoding is sum of digits times powers of p") {
  const Field f9 = make_field(3, 2);
  CHECK(f9->digits(7) == std::vector<int>{1, 2});
  // t * t = t^2 = -(c0 + c1 t) with modulus c0 + c1 t + t^2.
  const auto& m = f9->modulus();
  const Elem t = 3;
  CHECK(f9->mul(t, t) == static_cast<Elem>(((3 - m[0]) % 3) + 3 * ((3 - m[1]) % 3)));
}

TEST_CASE("large field uses log tables consistently") {
  const Field f = make_field(2, 16);
  CHECK(f->q() == 65536);
  const Elem g = f->primitive();
  CHECK(f->pow(g, 65535) == 1);
  CHECK(f->pow(g, 65535 / 3) != 1);
  CHECK(f->pow(g, 65535 / 5) != 1);
  CHECK(f->pow(g, 65535 / 17) != 1);
  CHECK(f->pow(g, 65535 / 257) != 1);
  for (Elem a : {Elem{1}, Elem{2}, Elem{12345}, Elem{65535}}) CHECK(f->mul(a, f->inv(a)) == 1);
  CHECK(f->mul(f->add(3, 5), 77) == f->add(f->mul(3, 77), f->mul(5, 77)));
}

TEST_CASE("errors") {
  CHECK_THROWS_AS(make_field(11, 1), InvalidArgument);
  CHECK_THROWS_AS(make_field(4, 1), InvalidArgument);
  CHECK_THROWS_AS(make_field(2, 17), InvalidArgument);
  CHECK_THROWS_AS(make_field(7, 6), InvalidArgument);
  CHECK_THROWS_AS(make_field(2, 1)->inv(0), DomainError);
  CHECK_THROWS_AS(field_of_size(6), InvalidArgument);
  CHECK_THROWS_AS(field_of_size(11), InvalidArgument);
}

TEST_CASE("field_of_size and caching") {
  CHECK(field_of_size(9)->p() == 3);
  CHECK(field_of_size(9)->k() == 2);
  CHECK(field_of_size(8).get() == make_field(2, 3).get());
  CHECK(same_field(make_field(5, 1), make_field(5, 1)));
  CHECK_FALSE(same_field(make_field(2, 2), make_field(2, 1)));
}

TEST_CASE("field axioms, exhaustive for q <= 256") {
  const props::Tally t = props::field_axioms();
  CHECK(t.trials == props::small_fields().size());
  CHECK(t.failures == 0);
}
