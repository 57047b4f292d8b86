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

#include "nilcomm/mat.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <utility>

#include "nilcomm/gf2_packed.hpp"

namespace nilcomm {
namespace {

void require_field(const Mat& a) {
  if (!a.field()) throw InvalidArgument("matrix has no field");
}

void require_same_field(const Mat& a, const Mat& b) {
  require_field(a);
  require_field(b);
  if (!same_field(a.field(), b.field())) throw FieldMismatch("matrices over different fields");
}

void require_same_shape(const Mat& a, const Mat& b, const char* op) {
  require_same_field(a, b);
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionMismatch(std::string(op) + ": shapes " + std::to_string(a.rows()) + "x" +
                            std::to_string(a.cols()) + " and " + std::to_string(b.rows()) +
                            "x" + std::to_string(b.cols()) + " differ");
  }
}

void require_square(const Mat& a, const char* op) {
  if (!a.square()) throw DimensionMismatch(std::string(op) + ": matrix is not square");
}

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(Mat& a) {
  const FieldCtx& f = a.ctx();
  std::vector<std::size_t> pivots;
  std::size_t pr = 0;
  for (std::size_t c = 0; c < a.cols() && pr < a.rows(); ++c) {
    std::size_t r = pr;
    while (r < a.rows() && a(r, c) == 0) ++r;
    if (r == a.rows()) continue;
    if (r != pr) {
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(r, j), a(pr, j));
    }
    const Elem piv_inv = f.inv(a(pr, c));
    for (std::size_t j = 0; j < a.cols(); ++j) a(pr, j) = f.mul(a(pr, j), piv_inv);
    for (std::size_t other = 0; other < a.rows(); ++other) {
      if (other == pr) continue;
      const Elem factor = a(other, c);
      if (factor == 0) continue;
      const Elem nf = f.neg(factor);
      for (std::size_t j = 0; j < a.cols(); ++j) {
        a(other, j) = f.add(a(other, j), f.mul(nf, a(pr, j)));
      }
    }
    pivots.push_back(c);
    ++pr;
  }
  return pivots;
}

}  // namespace

Mat::Mat(Field field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, 0) {
  if (!field_) throw InvalidArgument("matrix requires a field");
}

Mat Mat::identity(Field field, std::size_t n) {
  Mat m(std::move(field), n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Mat Mat::unit(Field field, std::size_t rows, std::size_t cols, std::size_t r, std::size_t c) {
  if (r >= rows || c >= cols) throw InvalidArgument("matrix unit index out of range");
  Mat m(std::move(field), rows, cols);
  m(r, c) = 1;
  return m;
}

Mat Mat::from_rows(Field field, const std::vector<std::vector<long long>>& rows) {
  const std::size_t nr = rows.size();
  const std::size_t nc = nr == 0 ? 0 : rows.front().size();
  Mat m(field, nr, nc);
  for (std::size_t r = 0; r < nr; ++r) {
    if (rows[r].size() != nc) {
      throw DimensionMismatch("row " + std::to_string(r) + " has " +
                              std::to_string(rows[r].size()) + " entries, expected " +
                              std::to_string(nc));
    }
    for (std::size_t c = 0; c < nc; ++c) {
      const long long v = rows[r][c];
      if (v < 0 || !field->valid(static_cast<std::uint32_t>(v))) {
        throw InvalidArgument("entry (" + std::to_string(r) + "," + std::to_string(c) + ") = " +
                              std::to_string(v) + " is not an element of GF(" +
                              std::to_string(field->q()) + ")");
      }
      m(r, c) = static_cast<Elem>(v);
    }
  }
  return m;
}

bool Mat::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](Elem e) { return e == 0; });
}

std::vector<std::vector<long long>> Mat::to_rows() const {
  std::vector<std::vector<long long>> out(rows_, std::vector<long long>(cols_));
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out[r][c] = (*this)(r, c);
  return out;
}

bool operator==(const Mat& a, const Mat& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
  if (a.field_ && b.field_ && !same_field(a.field_, b.field_)) return false;
  return a.data_ == b.data_;
}

std::size_t BlockSpec::rows() const {
  return std::accumulate(row_parts.begin(), row_parts.end(), std::size_t{0});
}
std::size_t BlockSpec::cols() const {
  return std::accumulate(col_parts.begin(), col_parts.end(), std::size_t{0});
}
std::size_t BlockSpec::row_offset(std::size_t block) const {
  return std::accumulate(row_parts.begin(), row_parts.begin() + static_cast<std::ptrdiff_t>(block),
                         std::size_t{0});
}
std::size_t BlockSpec::col_offset(std::size_t block) const {
  return std::accumulate(col_parts.begin(), col_parts.begin() + static_cast<std::ptrdiff_t>(block),
                         std::size_t{0});
}

Mat add(const Mat& a, const Mat& b) {
  Mat out = a;
  add_inplace(out, b);
  return out;
}

void add_inplace(Mat& acc, const Mat& b) {
  require_same_shape(acc, b, "add");
  const FieldCtx& f = acc.ctx();
  auto d = acc.data();
  auto s = b.data();
  if (f.p() == 2) {
    for (std::size_t i = 0; i < d.size(); ++i) d[i] ^= s[i];
  } else {
    for (std::size_t i = 0; i < d.size(); ++i) d[i] = f.add(d[i], s[i]);
  }
}

void add_scaled_inplace(Mat& acc, Elem s, const Mat& b) {
  require_same_shape(acc, b, "add_scaled");
  const FieldCtx& f = acc.ctx();
  auto d = acc.data();
  auto src = b.data();
  for (std::size_t i = 0; i < d.size(); ++i) d[i] = f.add(d[i], f.mul(s, src[i]));
}

Mat neg(const Mat& a) {
  require_field(a);
  Mat out = a;
  const FieldCtx& f = a.ctx();
  for (Elem& e : out.data()) e = f.neg(e);
  return out;
}

Mat sub(const Mat& a, const Mat& b) {
  require_same_shape(a, b, "sub");
  return add(a, neg(b));
}

Mat scale(Elem s, const Mat& a) {
  require_field(a);
  if (!a.ctx().valid(s)) throw InvalidArgument("scalar is not a field element");
  Mat out = a;
  const FieldCtx& f = a.ctx();
  for (Elem& e : out.data()) e = f.mul(s, e);
  return out;
}

Mat mul_generic(const Mat& a, const Mat& b) {
  require_same_field(a, b);
  if (a.cols() != b.rows()) {
    throw DimensionMismatch("mul: " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                            " times " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  }
  const FieldCtx& f = a.ctx();
  Mat out(a.field(), a.rows(), b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Elem x = a(r, k);
      if (x == 0) continue;
      for (std::size_t c = 0; c < b.cols(); ++c) {
        out(r, c) = f.add(out(r, c), f.mul(x, b(k, c)));
      }
    }
  }
  return out;
}

Mat mul(const Mat& a, const Mat& b) {
  require_same_field(a, b);
  if (a.ctx().is_gf2() && a.cols() == b.rows() && a.cols() >= 16) {
    return gf2::mul(gf2::PackedMat::from(a), gf2::PackedMat::from(b)).to_mat();
  }
  return mul_generic(a, b);
}

Mat pow(const Mat& a, std::uint64_t e) {
  require_field(a);
  require_square(a, "pow");
  Mat result = Mat::identity(a.field(), a.rows());
  Mat base = a;
  while (e > 0) {
    if (e & 1u) result = mul(result, base);
    e >>= 1u;
    if (e > 0) base = mul(base, base);
  }
  return result;
}

Mat commutator(const Mat& a, const Mat& b) {
  require_same_field(a, b);
  require_square(a, "commutator");
  require_square(b, "commutator");
  return sub(mul(a, b), mul(b, a));
}

Mat transpose(const Mat& a) {
  require_field(a);
  Mat out(a.field(), a.cols(), a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out(c, r) = a(r, c);
  return out;
}

RankKernel rank_kernel_generic(const Mat& m) {
  require_field(m);
  Mat a = m;
  const std::vector<std::size_t> pivots = rref(a);
  const FieldCtx& f = m.ctx();
  RankKernel out;
  out.rank = pivots.size();
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : pivots) is_pivot[c] = true;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Mat v(m.field(), m.cols(), 1);
    v(free, 0) = 1;
    for (std::size_t k = 0; k < pivots.size(); ++k) v(pivots[k], 0) = f.neg(a(k, free));
    out.kernel.push_back(std::move(v));
  }
  return out;
}

RankKernel rank_kernel(const Mat& m) {
  require_field(m);
  if (!m.ctx().is_gf2()) return rank_kernel_generic(m);
  const gf2::PackedRankKernel packed = gf2::rank_kernel(gf2::PackedMat::from(m));
  RankKernel out;
  out.rank = packed.rank;
  for (const auto& bits : packed.kernel) {
    Mat v(m.field(), m.cols(), 1);
    for (std::size_t i = 0; i < bits.size(); ++i) v(i, 0) = bits[i] ? 1 : 0;
    out.kernel.push_back(std::move(v));
  }
  return out;
}

std::size_t rank(const Mat& m) { return rank_kernel(m).rank; }

Mat column_space(const Mat& m) {
  require_field(m);
  Mat a = m;
  const std::vector<std::size_t> pivots = rref(a);
  Mat out(m.field(), m.rows(), pivots.size());
  for (std::size_t k = 0; k < pivots.size(); ++k)
    for (std::size_t r = 0; r < m.rows(); ++r) out(r, k) = m(r, pivots[k]);
  return out;
}

Mat hstack(const std::vector<Mat>& columns, const Field& field, std::size_t height) {
  std::size_t width = 0;
  for (const Mat& c : columns) {
    if (c.rows() != height) throw DimensionMismatch("hstack: height mismatch");
    width += c.cols();
  }
  Mat out(field, height, width);
  std::size_t at = 0;
  for (const Mat& c : columns) {
    set_submatrix(out, 0, at, c);
    at += c.cols();
  }
  return out;
}

Mat inverse(const Mat& g) {
  require_field(g);
  require_square(g, "inverse");
  const std::size_t n = g.rows();
  Mat aug(g.field(), n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = g(r, c);
    aug(r, n + r) = 1;
  }
  const std::vector<std::size_t> pivots = rref(aug);
  if (pivots.size() < n || pivots[n - 1] != n - 1) throw DomainError("matrix is singular");
  return submatrix(aug, 0, n, n, n);
}

bool is_invertible(const Mat& g) { return g.square() && rank(g) == g.rows(); }

bool solve(const Mat& a, const Mat& b, Mat& x) {
  require_same_field(a, b);
  if (b.rows() != a.rows()) throw DimensionMismatch("solve: bad right-hand side");
  Mat aug(a.field(), a.rows(), a.cols() + b.cols());
  set_submatrix(aug, 0, 0, a);
  set_submatrix(aug, 0, a.cols(), b);
  const std::vector<std::size_t> pivots = rref(aug);
  if (!pivots.empty() && pivots.back() >= a.cols()) return false;
  x = Mat(a.field(), a.cols(), b.cols());
  for (std::size_t k = 0; k < pivots.size(); ++k)
    for (std::size_t c = 0; c < b.cols(); ++c) x(pivots[k], c) = aug(k, a.cols() + c);
  return true;
}

Mat pth_power(const Mat& m) {
  require_field(m);
  require_square(m, "pth_power");
  Mat out = m;
  for (int i = 1; i < m.ctx().p(); ++i) out = mul(out, m);
  return out;
}

bool is_restricted_nilpotent(const Mat& m) { return pth_power(m).is_zero(); }

bool pth_power_is_zero(const Mat& m) {
  const FieldCtx& f = m.ctx();
  const std::size_t n = m.rows();
  const Elem* a = m.data().data();
  if (f.p() == 2) {
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) {
        Elem acc = 0;
        for (std::size_t k = 0; k < n; ++k) acc ^= f.mul(a[r * n + k], a[k * n + c]);
        if (acc != 0) return false;
      }
    }
    return true;
  }
  // m^{p-1} in full, then (m^{p-1} m) entry by entry.
  const Mat left = pow(m, static_cast<std::uint64_t>(f.p() - 1));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      Elem acc = 0;
      for (std::size_t k = 0; k < n; ++k) acc = f.add(acc, f.mul(left(r, k), a[k * n + c]));
      if (acc != 0) return false;
    }
  }
  return true;
}

Mat conjugate(const Mat& g, const Mat& x) {
  require_same_field(g, x);
  require_square(x, "conjugate");
  if (g.rows() != x.rows()) throw DimensionMismatch("conjugate: sizes differ");
  return mul(mul(g, x), inverse(g));
}

Mat theta_dual(const Mat& x) {
  require_field(x);
  require_square(x, "theta_dual");
  const std::size_t n = x.rows();
  const FieldCtx& f = x.ctx();
  Mat out(x.field(), n, n);
  // (J x^T J)_{ab} = x_{n-1-b, n-1-a}
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) out(a, b) = f.neg(x(n - 1 - b, n - 1 - a));
  return out;
}

Mat submatrix(const Mat& m, std::size_t r0, std::size_t c0, std::size_t rows, std::size_t cols) {
  if (r0 + rows > m.rows() || c0 + cols > m.cols()) throw DimensionMismatch("submatrix out of range");
  Mat out(m.field(), rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) out(r, c) = m(r0 + r, c0 + c);
  return out;
}

void set_submatrix(Mat& m, std::size_t r0, std::size_t c0, const Mat& block) {
  if (r0 + block.rows() > m.rows() || c0 + block.cols() > m.cols()) {
    throw DimensionMismatch("set_submatrix out of range");
  }
  if (block.rows() * block.cols() > 0) require_same_field(m, block);
  for (std::size_t r = 0; r < block.rows(); ++r)
    for (std::size_t c = 0; c < block.cols(); ++c) m(r0 + r, c0 + c) = block(r, c);
}

Mat block(const Mat& m, const BlockSpec& spec, std::size_t bi, std::size_t bj) {
  if (spec.rows() != m.rows() || spec.cols() != m.cols()) {
    throw DimensionMismatch("block spec does not match matrix shape");
  }
  return submatrix(m, spec.row_offset(bi), spec.col_offset(bj), spec.row_parts.at(bi),
                   spec.col_parts.at(bj));
}

void set_block(Mat& m, const BlockSpec& spec, std::size_t bi, std::size_t bj, const Mat& value) {
  if (spec.rows() != m.rows() || spec.cols() != m.cols()) {
    throw DimensionMismatch("block spec does not match matrix shape");
  }
  if (value.rows() != spec.row_parts.at(bi) || value.cols() != spec.col_parts.at(bj)) {
    throw DimensionMismatch("block value has the wrong shape");
  }
  set_submatrix(m, spec.row_offset(bi), spec.col_offset(bj), value);
}

Mat direct_sum(const Mat& a, const Mat& b) {
  const Field& f = a.field() ? a.field() : b.field();
  Mat out(f, a.rows() + b.rows(), a.cols() + b.cols());
  set_submatrix(out, 0, 0, a);
  set_submatrix(out, a.rows(), a.cols(), b);
  return out;
}

Mat vec(const Mat& m) {
  Mat out(m.field(), m.rows() * m.cols(), 1);
  std::copy(m.data().begin(), m.data().end(), out.data().begin());
  return out;
}

Mat unvec(const Mat& v, std::size_t rows, std::size_t cols) {
  if (v.rows() * v.cols() != rows * cols) throw DimensionMismatch("unvec: size mismatch");
  Mat out(v.field(), rows, cols);
  std::copy(v.data().begin(), v.data().end(), out.data().begin());
  return out;
}

Mat jordan_block(const Field& field, std::size_t n) {
  Mat out(field, n, n);
  for (std::size_t i = 0; i + 1 < n; ++i) out(i, i + 1) = 1;
  return out;
}

Mat permutation_matrix(const Field& field, const std::vector<std::size_t>& perm) {
  Mat out(field, perm.size(), perm.size());
  for (std::size_t j = 0; j < perm.size(); ++j) out(perm.at(j), j) = 1;
  return out;
}

}  // namespace nilcomm
