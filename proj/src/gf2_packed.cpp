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

#include "nilcomm/gf2_packed.hpp"

#include <utility>

#include "nilcomm/mat.hpp"

namespace nilcomm::gf2 {

PackedMat::PackedMat(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), wpr_((cols + 63) / 64), bits_(rows * wpr_, 0) {}

PackedMat PackedMat::from(const Mat& m) {
  if (!m.field() || !m.ctx().is_gf2()) throw FieldMismatch("packed path requires GF(2)");
  PackedMat out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (m(r, c) != 0) out.set(r, c, true);
  return out;
}

Mat PackedMat::to_mat() const {
  Mat out(make_field(2, 1), rows_, cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out(r, c) = get(r, c) ? 1 : 0;
  return out;
}

void PackedMat::xor_row_into(std::size_t dst, const PackedMat& src, std::size_t src_row) {
  std::uint64_t* d = row(dst);
  const std::uint64_t* s = src.row(src_row);
  for (std::size_t w = 0; w < wpr_; ++w) d[w] ^= s[w];
}

PackedMat mul(const PackedMat& a, const PackedMat& b) {
  if (a.cols() != b.rows()) throw DimensionMismatch("packed mul: inner dimensions differ");
  PackedMat out(a.rows(), b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    const std::uint64_t* arow = a.row(r);
    for (std::size_t w = 0; w < a.words_per_row(); ++w) {
      std::uint64_t word = arow[w];
      while (word != 0) {
        const auto bit = static_cast<std::size_t>(__builtin_ctzll(word));
        word &= word - 1;
        out.xor_row_into(r, b, w * 64 + bit);
      }
    }
  }
  return out;
}

PackedRankKernel rank_kernel(const PackedMat& m) {
  PackedMat a = m;
  std::vector<std::size_t> pivot_cols;
  std::size_t pivot_row = 0;
  for (std::size_t c = 0; c < a.cols() && pivot_row < a.rows(); ++c) {
    std::size_t r = pivot_row;
    while (r < a.rows() && !a.get(r, c)) ++r;
    if (r == a.rows()) continue;
    if (r != pivot_row) {
      for (std::size_t w = 0; w < a.words_per_row(); ++w)
        std::swap(a.row(r)[w], a.row(pivot_row)[w]);
    }
    for (std::size_t other = 0; other < a.rows(); ++other) {
      if (other != pivot_row && a.get(other, c)) a.xor_row_into(other, a, pivot_row);
    }
    pivot_cols.push_back(c);
    ++pivot_row;
  }

  PackedRankKernel out;
  out.rank = pivot_cols.size();
  std::vector<bool> is_pivot(a.cols(), false);
  for (std::size_t c : pivot_cols) is_pivot[c] = true;
  for (std::size_t f = 0; f < a.cols(); ++f) {
    if (is_pivot[f]) continue;
    std::vector<bool> v(a.cols(), false);
    v[f] = true;
    for (std::size_t k = 0; k < pivot_cols.size(); ++k) {
      if (a.get(k, f)) v[pivot_cols[k]] = true;
    }
    out.kernel.push_back(std::move(v));
  }
  return out;
}

}  // namespace nilcomm::gf2
