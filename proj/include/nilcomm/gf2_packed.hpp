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

// Bit-packed GF(2) matrices: one bit per entry, rows padded to 64-bit words.

#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace nilcomm {
class Mat;
}

namespace nilcomm::gf2 {

class PackedMat {
 public:
  PackedMat() = default;
  PackedMat(std::size_t rows, std::size_t cols);

  static PackedMat from(const Mat& m);  // m must be over GF(2)
  Mat to_mat() const;

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t words_per_row() const { return wpr_; }

  bool get(std::size_t r, std::size_t c) const {
    return (row(r)[c >> 6] >> (c & 63)) & 1u;
  }
  void set(std::size_t r, std::size_t c, bool v) {
    std::uint64_t& w = row(r)[c >> 6];
    const std::uint64_t bit = std::uint64_t{1} << (c & 63);
    w = v ? (w | bit) : (w & ~bit);
  }
  void flip(std::size_t r, std::size_t c) { row(r)[c >> 6] ^= std::uint64_t{1} << (c & 63); }

  std::uint64_t* row(std::size_t r) { return bits_.data() + r * wpr_; }
  const std::uint64_t* row(std::size_t r) const { return bits_.data() + r * wpr_; }

  void xor_row_into(std::size_t dst, const PackedMat& src, std::size_t src_row);

  friend bool operator==(const PackedMat& a, const PackedMat& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t wpr_ = 0;
  std::vector<std::uint64_t> bits_;
};

PackedMat mul(const PackedMat& a, const PackedMat& b);

struct PackedRankKernel {
  std::size_t rank = 0;
  std::vector<std::vector<bool>> kernel;  // each of length cols
};

// Same pivot rule as the generic path (first nonzero row below the current
// pivot row), so kernel bases coincide bit for bit.
PackedRankKernel rank_kernel(const PackedMat& m);

}  // namespace nilcomm::gf2
