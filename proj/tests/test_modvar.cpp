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


#include <algorithm>

#include "doctest.h"
#include "nilcomm/modvar.hpp"
#include "props.hpp"

using namespace nilcomm;

namespace {

Mat e(const Field& f, std::size_t n, std::size_t r, std::size_t c) { return Mat::unit(f, n, n, r - 1, c - 1); }

LambdaModule triv(const Field& f) { return LambdaModule(Mat(f, 1, 1), Mat(f, 1, 1)); }
LambdaModule w(const Field& f) { return LambdaModule(w_pair(f)); }
LambdaModule zplus3(const Field& f) { return LambdaModule(e(f, 3, 1, 3), e(f, 3, 1, 2)); }

std::vector<std::string> names(const std::vector<Summand>& parts) {
  std::vector<std::string> out;
  for (const Summand& s : parts) out.push_back(s.certified ? classify_indec(s).name() : "uncertified");
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("fingerprint examples") {
  const Field f2 = make_field(2, 1);
  const Fingerprint t = fingerprint(triv(f2));
  CHECK(t == Fingerprint{1, 0, 0, 0, 0, 0, 1, 1, 1});

  const Fingerprint fw = fingerprint(w(f2));
  CHECK(fw.dim == 4);
  CHECK(fw.rk_x == 2);
  CHECK(fw.rk_y == 2);
  CHECK(fw.rk_xy == 1);
  CHECK(fw.dim_rad == 3);
  CHECK(fw.dim_soc == 1);
  CHECK(fw.end_dim == 4);
  CHECK(fw.loewy_length == 3);

  const Fingerprint fz = fingerprint(zplus3(f2));
  CHECK(fz.dim == 3);
  CHECK(fz.rk_x == 1);
  CHECK(fz.rk_y == 1);
  CHECK(fz.rk_xy == 0);
  CHECK(fz.dim_rad == 1);
  CHECK(fz.dim_soc == 1);
}

TEST_CASE("end_basis examples") {
  const Field f2 = make_field(2, 1);
  CHECK(end_basis(triv(f2)).size() == 1);
  const LambdaModule zp(generic_component_rep({5, ComponentKind::XPlus, 0}, f2));
  CHECK(end_basis(zp).size() == 7);
  CHECK(end_basis(LambdaModule(Mat(f2, 2, 2), Mat(f2, 2, 2))).size() == 4);
  // The identity is an endomorphism.
  const std::vector<Mat> basis = end_basis(w(f2));
  const Mat span = hstack([&] {
    std::vector<Mat> cols;
    for (const Mat& b : basis) cols.push_back(vec(b));
    cols.push_back(vec(Mat::identity(f2, 4)));
    return cols;
  }(), f2, 16);
  CHECK(rank(span) == basis.size());
  for (const Mat& phi : basis) {
    CHECK(mul(phi, w(f2).x()) == mul(w(f2).x(), phi));
    CHECK(mul(phi, w(f2).y()) == mul(w(f2).y(), phi));
  }
}

TEST_CASE("decompose examples") {
  const Field f2 = make_field(2, 1);
  const auto pw = decompose(w(f2));
  REQUIRE(pw.size() == 1);
  CHECK(pw[0].certified);
  CHECK(pw[0].module.dim() == 4);

  const auto px = decompose(LambdaModule(generic_component_rep({4, ComponentKind::X, 0}, f2)));
  CHECK(names(px) == std::vector<std::string>{"U(1:0)", "U(1:1)"});

  const auto ps = decompose(module_sum(w(f2), triv(f2)));
  REQUIRE(ps.size() == 2);
  std::vector<int> dims = {ps[0].module.dim(), ps[1].module.dim()};
  std::sort(dims.begin(), dims.end());
  CHECK(dims == std::vector<int>{1, 4});
}

TEST_CASE("classify_indec examples") {
  const Field f2 = make_field(2, 1);
  CHECK(classify_indec({zplus3(f2), true}).name() == "ZPLUS(3)");
  const IndecClass dual = classify_indec({dualize(zplus3(f2)), true});
  CHECK(dual.name() == "ZMINUS(3)");
  CHECK(dual.fp.dim_rad == 2);
  CHECK(dual.fp.dim_soc == 2);
  CHECK(classify_indec({LambdaModule(e(f2, 2, 1, 2), e(f2, 2, 1, 2)), true}).name() == "U(1:1)");
  CHECK(classify_indec({triv(f2), true}).tag == IndecTag::Triv);
  CHECK(classify_indec({w(f2), true}).tag == IndecTag::W);
  CHECK_THROWS_AS(classify_indec({w(f2), false}), InvalidArgument);

  const Field f4 = make_field(2, 2);
  const IndecClass u = classify_indec({LambdaModule(scale(2, e(f4, 2, 2, 1)), scale(3, e(f4, 2, 2, 1))), true});
  CHECK(u.tag == IndecTag::U);
  REQUIRE(u.param);
  CHECK(u.param->first == 1);
  CHECK(u.param->second == f4->div(3, 2));
  const IndecClass u01 = classify_indec({LambdaModule(Mat(f4, 2, 2), e(f4, 2, 1, 2)), true});
  CHECK(u01.name() == "U(0:1)");
}

TEST_CASE("component representatives decompose as expected") {
  const Field f2 = make_field(2, 1);
  const LambdaModule zp(generic_component_rep({5, ComponentKind::XPlus, 0}, f2));
  CHECK(names(decompose(zp)) == std::vector<std::string>{"ZPLUS(5)"});
  CHECK(names(decompose(dualize(zp))) == std::vector<std::string>{"ZMINUS(5)"});
  CHECK(names(decompose(LambdaModule(generic_component_rep({5, ComponentKind::XHalf, 1}, f2)))) ==
        std::vector<std::string>{"TRIV", "W"});
  // X_j splits as j copies of W and (n - 4j)/2 copies of U.
  const Field f4 = make_field(2, 2);
  for (int n : {4, 6, 8}) {
    for (int j = 0; j <= n / 4; ++j) {
      const auto parts = decompose(LambdaModule(generic_component_rep({n, ComponentKind::X, j}, f4)));
      int ws = 0, us = 0;
      for (const Summand& s : parts) {
        REQUIRE(s.certified);
        const IndecTag tag = classify_indec(s).tag;
        ws += tag == IndecTag::W;
        us += tag == IndecTag::U;
      }
      CHECK(ws == j);
      CHECK(us == (n - 4 * j) / 2);
      CHECK(static_cast<int>(parts.size()) == ws + us);
    }
  }
}

TEST_CASE("Fitting tier splits large modules") {
  const Field f2 = make_field(2, 1);
  // End(W + W + W) has dimension 36: no exhaustive search.
  const LambdaModule m = module_sum(module_sum(w(f2), w(f2)), w(f2));
  const auto parts = decompose(m);
  int total = 0;
  for (const Summand& s : parts) total += s.module.dim();
  CHECK(total == 12);
  CHECK(parts.size() == 3);
  const auto tiny = decompose(m, {.idempotent_budget = 1, .fitting_trials = 0});
  CHECK(tiny.size() >= 1);
}

TEST_CASE("dualize") {
  const Field f2 = make_field(2, 1);
  CHECK(dualize(triv(f2)) == triv(f2));
  const IsoResult r = iso_test(w(f2), dualize(w(f2)));
  CHECK(r.isomorphic);
  CHECK(r.certain);
  CHECK(fingerprint(dualize(w(f2))) == fingerprint(w(f2)));
  CHECK(classify_indec({dualize(zplus3(f2)), true}).tag == IndecTag::ZMinus);
}

TEST_CASE("iso_test examples") {
  const Field f2 = make_field(2, 1);
  const IsoResult a = iso_test(LambdaModule(e(f2, 2, 1, 2), Mat(f2, 2, 2)), LambdaModule(e(f2, 2, 2, 1), Mat(f2, 2, 2)));
  CHECK(a.isomorphic);
  CHECK(a.certain);
  const IsoResult b = iso_test(LambdaModule(e(f2, 2, 1, 2), Mat(f2, 2, 2)), LambdaModule(e(f2, 2, 1, 2), e(f2, 2, 1, 2)));
  CHECK_FALSE(b.isomorphic);
  CHECK(b.certain);
  Rng rng(12);
  for (int t = 0; t < 100; ++t) {
    const LambdaModule m = props::random_module(rng, 5, true);
    const IsoResult r = iso_test(m, dualize(dualize(m)));
    CHECK(r.isomorphic);
  }
  CHECK_THROWS_AS(iso_test(triv(f2), w(f2)), DimensionMismatch);
  CHECK_THROWS_AS(iso_test(triv(f2), triv(make_field(2, 2))), FieldMismatch);
  CHECK_THROWS_AS(LambdaModule(Mat(make_field(3, 1), 1, 1), Mat(make_field(3, 1), 1, 1)), InvalidArgument);
}

TEST_CASE("sampled iso_test reports uncertain negatives") {
  const Field f2 = make_field(2, 1);
  const LambdaModule m = module_sum(module_sum(w(f2), w(f2)), triv(f2));
  const LambdaModule n = module_sum(module_sum(w(f2), triv(f2)), w(f2));
  const IsoResult exact = iso_test(m, n);
  CHECK(exact.isomorphic);
  const IsoResult sampled = iso_test(m, n, 2, 200, 1);
  CHECK(sampled.isomorphic);
  const IsoResult none = iso_test(m, n, 2, 0, 1);
  CHECK_FALSE(none.isomorphic);
  CHECK_FALSE(none.certain);
}

TEST_CASE("fingerprint is conjugation invariant") {
  const props::Tally t = props::fingerprint_conjugation(1000, 7);
  CHECK(t.trials == 1000);
  CHECK(t.failures == 0);
}

TEST_CASE("duality arithmetic") {
  const props::Tally t = props::duality(1000, 8);
  CHECK(t.trials == 1000);
  CHECK(t.failures == 0);
}

TEST_CASE("decomposition is a partition") {
  const props::Tally t = props::decomposition_partition(300, 9);
  CHECK(t.failures == 0);
}

TEST_CASE("Krull-Schmidt multisets are stable") {
  const props::Tally t = props::krull_schmidt(100, 10);
  CHECK(t.trials == 100);
  CHECK(t.failures == 0);
}
