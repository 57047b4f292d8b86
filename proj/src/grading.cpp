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


#include "nilcomm/grading.hpp"

#include "nilcomm/random.hpp"

namespace nilcomm {

GradedCentralizer graded_centralizer(const Field& field, const Partition& type) {
  GradedCentralizer out;
  out.e = jordan_matrix(field, type);
  out.weights = cocharacter_weights(type);
  const std::size_t n = out.weights.size();
  const FieldCtx& f = *field;

  std::map<int, std::vector<std::pair<std::size_t, std::size_t>>> slots;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) slots[out.weights[a] - out.weights[b]].emplace_back(a, b);

  // [x, e] restricted to the coordinates of one degree.
  for (const auto& [deg, pos] : slots) {
    Mat lin(field, n * n, pos.size());
    for (std::size_t c = 0; c < pos.size(); ++c) {
      const auto [a, b] = pos[c];
      for (std::size_t k = 0; k < n; ++k) {
        if (out.e(b, k) != 0) lin(a * n + k, c) = f.add(lin(a * n + k, c), out.e(b, k));
        if (out.e(k, a) != 0) lin(k * n + b, c) = f.sub(lin(k * n + b, c), out.e(k, a));
      }
    }
    std::vector<Mat> basis;
    for (const Mat& v : rank_kernel(lin).kernel) {
      Mat x(field, n, n);
      for (std::size_t c = 0; c < pos.size(); ++c) x(pos[c].first, pos[c].second) = v(c, 0);
      basis.push_back(std::move(x));
    }
    if (!basis.empty()) out.pieces.emplace(deg, std::move(basis));
  }
  return out;
}

GradingReport grading_check(const Partition& type, int p, std::uint64_t samples,
                            std::uint64_t seed) {
  const Field field = make_field(p, 1);
  const GradedCentralizer gc = graded_centralizer(field, type);
  GradingReport r;
  r.type = type;
  r.p = p;
  r.samples = samples;
  for (const auto& [deg, basis] : gc.pieces) {
    r.dims[deg] = static_cast<int>(basis.size());
    r.dim_centralizer += static_cast<int>(basis.size());
  }
  r.dim_degree0 = r.dims.contains(0) ? r.dims.at(0) : 0;
  r.dim_degree1 = r.dims.contains(1) ? r.dims.at(1) : 0;

  static const std::vector<Mat> kNone;
  const auto it0 = gc.pieces.find(0);
  const std::vector<Mat>& h = it0 == gc.pieces.end() ? kNone : it0->second;
  r.degree0_commutative = true;
  for (std::size_t a = 0; a < h.size() && r.degree0_commutative; ++a)
    for (std::size_t b = a + 1; b < h.size(); ++b)
      if (!commutator(h[a], h[b]).is_zero()) {
        r.degree0_commutative = false;
        break;
      }

  // On a commutative piece over GF(p) the p-th power map is linear, so the
  // piece is toral when h^p = h holds on all of it.
  if (r.degree0_commutative) {
    const std::size_t n = gc.e.rows();
    Mat lin(field, n * n, h.size());
    for (std::size_t c = 0; c < h.size(); ++c) {
      const Mat d = sub(pth_power(h[c]), h[c]);
      for (std::size_t k = 0; k < n * n; ++k) lin(k, c) = d.data()[k];
    }
    r.degree0_toral = rank(lin) == 0;
  }

  std::vector<Mat> positive;
  for (const auto& [deg, basis] : gc.pieces)
    if (deg > 0) positive.insert(positive.end(), basis.begin(), basis.end());
  Rng rng(seed);
  for (std::uint64_t t = 0; t < samples; ++t) {
    Mat y(field, gc.e.rows(), gc.e.cols());
    for (const Mat& b : positive) add_scaled_inplace(y, rng.element(*field), b);
    if (!pth_power(y).is_zero()) ++r.positive_violations;
  }
  return r;
}

}  // namespace nilcomm
