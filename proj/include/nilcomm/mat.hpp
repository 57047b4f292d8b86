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

// Dense matrices over a FieldCtx and the exact linear algebra on them.
//
// Mat is a value type: row-major element encodings plus a shared handle to
// the (immutable) field. All binary operations check that dimensions and
// fields agree. Zero-sized blocks are allowed so that block layouts with an
// empty middle band (n = 2i) need no special casing.

#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include "nilcomm/ff.hpp"

namespace nilcomm {

class Mat {
 public:
  Mat() = default;
  Mat(Field field, std::size_t rows, std::size_t cols);

  static Mat zero(Field field, std::size_t rows, std::size_t cols) {
    return Mat(std::move(field), rows, cols);
  }
  static Mat identity(Field field, std::size_t n);
  // Matrix unit e_{r+1,c+1} (zero based arguments).
  static Mat unit(Field field, std::size_t rows, std::size_t cols, std::size_t r, std::size_t c);
  // Checked construction from integer encodings; all rows must have equal
  // length and every entry must be a valid element.
  static Mat from_rows(Field field, const std::vector<std::vector<long long>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }
  const Field& field() const { return field_; }
  const FieldCtx& ctx() const { return *field_; }

  Elem operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Elem& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

  std::span<const Elem> data() const { return data_; }
  std::span<Elem> data() { return data_; }

  bool is_zero() const;
  std::vector<std::vector<long long>> to_rows() const;

  friend bool operator==(const Mat& a, const Mat& b);

 private:
  Field field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Elem> data_;
};

// Row and column partitions of a block layout. Parts may be zero.
struct BlockSpec {
  std::vector<std::size_t> row_parts;
  std::vector<std::size_t> col_parts;

  static BlockSpec symmetric(std::vector<std::size_t> parts) { return {parts, parts}; }
  std::size_t rows() const;
  std::size_t cols() const;
  std::size_t row_offset(std::size_t block) const;
  std::size_t col_offset(std::size_t block) const;
};

// --- arithmetic -----------------------------------------------------------

Mat add(const Mat& a, const Mat& b);
Mat sub(const Mat& a, const Mat& b);
Mat neg(const Mat& a);
Mat scale(Elem s, const Mat& a);
Mat mul(const Mat& a, const Mat& b);
Mat mul_generic(const Mat& a, const Mat& b);
Mat pow(const Mat& a, std::uint64_t e);
// [a, b] = ab - ba
Mat commutator(const Mat& a, const Mat& b);
Mat transpose(const Mat& a);

void add_inplace(Mat& acc, const Mat& b);
void add_scaled_inplace(Mat& acc, Elem s, const Mat& b);

inline Mat operator+(const Mat& a, const Mat& b) { return add(a, b); }
inline Mat operator-(const Mat& a, const Mat& b) { return sub(a, b); }
inline Mat operator-(const Mat& a) { return neg(a); }
inline Mat operator*(const Mat& a, const Mat& b) { return mul(a, b); }
inline Mat operator*(Elem s, const Mat& a) { return scale(s, a); }

// --- elimination ----------------------------------------------------------

struct RankKernel {
  std::size_t rank = 0;
  std::vector<Mat> kernel;  // column vectors (cols x 1)
};

// Gaussian elimination with the first nonzero entry as pivot. GF(2) input is
// routed through the bit-packed path.
RankKernel rank_kernel(const Mat& m);
RankKernel rank_kernel_generic(const Mat& m);
std::size_t rank(const Mat& m);

// Basis (as columns of the returned matrix) of the column space of m, taken
// from the pivot columns of m. Has zero columns when m = 0.
Mat column_space(const Mat& m);
// Columns of `m` stacked side by side (all must have equal height).
Mat hstack(const std::vector<Mat>& columns, const Field& field, std::size_t height);

// Throws DomainError when g is singular, DimensionMismatch when not square.
Mat inverse(const Mat& g);
bool is_invertible(const Mat& g);

// Writes one solution of a x = b into x; false when the system
// is inconsistent.
bool solve(const Mat& a, const Mat& b, Mat& x);

// --- restricted structure -------------------------------------------------

// m multiplied by itself p times, p the characteristic.
Mat pth_power(const Mat& m);
bool is_restricted_nilpotent(const Mat& m);
// Early-exit variant used in enumeration inner loops.
bool pth_power_is_zero(const Mat& m);

// g x g^{-1}
Mat conjugate(const Mat& g, const Mat& x);
// x -> -J x^T J^{-1}, J the antidiagonal permutation.
Mat theta_dual(const Mat& x);

// --- blocks ---------------------------------------------------------------

Mat submatrix(const Mat& m, std::size_t r0, std::size_t c0, std::size_t rows, std::size_t cols);
void set_submatrix(Mat& m, std::size_t r0, std::size_t c0, const Mat& block);
Mat block(const Mat& m, const BlockSpec& spec, std::size_t bi, std::size_t bj);
void set_block(Mat& m, const BlockSpec& spec, std::size_t bi, std::size_t bj, const Mat& value);
Mat direct_sum(const Mat& a, const Mat& b);

// Row-major coordinates of m as a column vector of length rows*cols, and back.
Mat vec(const Mat& m);
Mat unvec(const Mat& v, std::size_t rows, std::size_t cols);

// Nilpotent Jordan block of size n (ones on the superdiagonal).
Mat jordan_block(const Field& field, std::size_t n);
// Permutation matrix sending basis vector j to basis vector perm[j].
Mat permutation_matrix(const Field& field, const std::vector<std::size_t>& perm);

}  // namespace nilcomm
