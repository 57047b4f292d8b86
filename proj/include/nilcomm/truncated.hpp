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


// 2x2 matrices over GF(p)[t]/(t^m), stored as coefficient matrices.

#pragma once

#include <cstdint>
#include <vector>

#include "nilcomm/mat.hpp"
#include "nilcomm/random.hpp"

namespace nilcomm {

class TruncMat {
 public:
  TruncMat(Field field, int m);  // zero
  TruncMat(Field field, std::vector<Mat> coeffs);

  const Field& field() const { return field_; }
  int m() const { return static_cast<int>(coeffs_.size()); }
  const Mat& coeff(int k) const { return coeffs_.at(static_cast<std::size_t>(k)); }
  Mat& coeff(int k) { return coeffs_.at(static_cast<std::size_t>(k)); }
  bool is_zero() const;

  friend TruncMat operator*(const TruncMat& x, const TruncMat& y);
  friend bool operator==(const TruncMat&, const TruncMat&) = default;

 private:
  Field field_;
  std::vector<Mat> coeffs_;
};

TruncMat truncated_pow(const TruncMat& x, std::uint64_t e);

// Requires p = m = 7.
TruncMat remark7_seventh_power(const TruncMat& a);

struct BranchReport {
  std::uint64_t samples = 0;
  std::uint64_t zero_lead_violations = 0;  // A_0 = 0 but A^7 != 0
  std::uint64_t branch_violations = 0;     // A_0 = e12, predicate disagrees with A^7 = 0
  std::uint64_t branch_nilpotent = 0;      // A_0 = e12 samples with A^7 = 0
  std::uint64_t violations() const { return zero_lead_violations + branch_violations; }
};

// For A_0 = e12: A^7 = 0 iff A_1 is upper triangular and s + 2(a - d)^2 = 0,
// with a, d the diagonal of A_1 and s the lower-left entry of A_2.
bool remark7_predicate(const TruncMat& a);

BranchReport remark7_branch_check(std::uint64_t samples, std::uint64_t seed);

}  // namespace nilcomm
