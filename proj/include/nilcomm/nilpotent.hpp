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

// Nilpotent orbits in gl(n): Jordan types, the square-zero representatives
// e_i of type 2^i.1^{n-2i}, centralizers and GL(n, q) orbit sizes.

#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "nilcomm/mat.hpp"

namespace nilcomm {

using BigInt = boost::multiprecision::cpp_int;

// Weakly decreasing list of positive parts.
class Partition {
 public:
  Partition() = default;
  // Sorts descending; throws InvalidArgument on a non-positive part.
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int n() const;
  std::size_t length() const { return parts_.size(); }
  Partition transpose() const;
  std::string to_string() const;  // e.g. "2^2.1"

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

// Partition 2^i.1^{n-2i}.
Partition square_zero_type(int n, int i);

struct CanonicalNilpotent {
  int n = 0;
  int i = 0;
  Mat matrix;
};

// Block layout (i, n-2i, i) used for e_i and its centralizer.
BlockSpec canonical_blocks(int n, int i);

// e_i: identity I_i in the top-right block of the (i, n-2i, i) layout.
CanonicalNilpotent canonical_e(const Field& field, int n, int i);

// Block-diagonal Jordan matrix, blocks in the order of the parts.
Mat jordan_matrix(const Field& field, const Partition& type);

// Jordan type from the ranks r_k = rank(x^k): part k occurs
// r_{k-1} - 2 r_k + r_{k+1} times. Throws DomainError if x is not nilpotent.
Partition jordan_type(const Mat& x);

// Basis of { z : zx = xz }, as the kernel of z -> zx - xz on n^2 coordinates.
std::vector<Mat> centralizer_basis(const Mat& x);

// sum_j (lambda'_j)^2
int dim_centralizer(const Partition& type);

// |GL(n, q)| = q^{n(n-1)/2} prod_{i=1..n} (q^i - 1)
BigInt gl_order(int n, std::uint64_t q);

// |Z_{GL(n,q)}(e_i)| for e_i of type 2^i.1^{n-2i}.
BigInt centralizer_group_order(int n, int i, std::uint64_t q);

// Number of F_q-points of the GL(n)-orbit of e_i. Throws DomainError if the
// division is not exact.
BigInt orbit_size(int n, int i, std::uint64_t q);

// Weights (s-1, s-3, ..., 1-s) per Jordan block of size s, in block order.
std::vector<int> cocharacter_weights(const Partition& type);

}  // namespace nilcomm
