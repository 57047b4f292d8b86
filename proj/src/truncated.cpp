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


#include "nilcomm/truncated.hpp"

namespace nilcomm {

TruncMat::TruncMat(Field field, int m) : field_(std::move(field)) {
  if (m < 1) throw InvalidArgument("TruncMat: truncation order must be positive");
  coeffs_.assign(static_cast<std::size_t>(m), Mat(field_, 2, 2));
}

TruncMat::TruncMat(Field field, std::vector<Mat> coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw InvalidArgument("TruncMat: truncation order must be positive");
  for (const Mat& c : coeffs_) {
    if (c.rows() != 2 || c.cols() != 2) throw DimensionMismatch("TruncMat: coefficients are 2x2");
    if (!same_field(c.field(), field_)) throw FieldMismatch("TruncMat: coefficient field");
  }
}

bool TruncMat::is_zero() const {
  for (const Mat& c : coeffs_)
    if (!c.is_zero()) return false;
  return true;
}

TruncMat operator*(const TruncMat& x, const TruncMat& y) {
  if (x.m() != y.m()) throw DimensionMismatch("TruncMat: truncation orders differ");
  TruncMat out(x.field(), x.m());
  for (int i = 0; i < x.m(); ++i) {
    if (x.coeff(i).is_zero()) continue;
    for (int j = 0; i + j < x.m(); ++j) add_inplace(out.coeff(i + j), mul(x.coeff(i), y.coeff(j)));
  }
  return out;
}

TruncMat truncated_pow(const TruncMat& x, std::uint64_t e) {
  TruncMat result(x.field(), x.m());
  result.coeff(0) = Mat::identity(x.field(), 2);
  TruncMat base = x;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

TruncMat remark7_seventh_power(const TruncMat& a) {
  if (a.field()->p() != 7 || a.field()->k() != 1 || a.m() != 7) {
    throw InvalidArgument("remark7_seventh_power: needs GF(7) and truncation order 7");
  }
  return truncated_pow(a, 7);
}

bool remark7_predicate(const TruncMat& a) {
  const FieldCtx& f = *a.field();
  const Mat& a1 = a.coeff(1);
  const Elem s = a.coeff(2)(1, 0);
  const Elem diff = f.sub(a1(0, 0), a1(1, 1));
  return a1(1, 0) == 0 && f.add(s, f.mul(2, f.mul(diff, diff))) == 0;
}

BranchReport remark7_branch_check(std::uint64_t samples, std::uint64_t seed) {
  if (samples < 1) throw InvalidArgument("remark7_branch_check: samples must be positive");
  const Field f7 = make_field(7, 1);
  Rng rng(seed);
  BranchReport report;
  report.samples = samples;
  for (std::uint64_t t = 0; t < samples; ++t) {
    TruncMat a(f7, 7);
    for (int k = 1; k < 7; ++k) a.coeff(k) = random_mat(f7, 2, 2, rng);
    if (!remark7_seventh_power(a).is_zero()) ++report.zero_lead_violations;

    a.coeff(0) = Mat::unit(f7, 2, 2, 0, 1);
    const bool nil = remark7_seventh_power(a).is_zero();
    if (nil) ++report.branch_nilpotent;
    if (nil != remark7_predicate(a)) ++report.branch_violations;
  }
  return report;
}

}  // namespace nilcomm
