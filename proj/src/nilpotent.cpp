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

#include "nilcomm/nilpotent.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace nilcomm {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_) {
    if (p <= 0) throw InvalidArgument("partition parts must be positive");
  }
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
}

int Partition::n() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

Partition Partition::transpose() const {
  std::vector<int> t;
  if (parts_.empty()) return Partition(t);
  for (int j = 1; j <= parts_.front(); ++j) {
    t.push_back(static_cast<int>(
        std::count_if(parts_.begin(), parts_.end(), [j](int p) { return p >= j; })));
  }
  return Partition(t);
}

std::string Partition::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < parts_.size();) {
    std::size_t j = i;
    while (j < parts_.size() && parts_[j] == parts_[i]) ++j;
    if (!out.empty()) out += ".";
    out += std::to_string(parts_[i]);
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  return out.empty() ? "()" : out;
}

Partition square_zero_type(int n, int i) {
  if (i < 0 || 2 * i > n) throw InvalidArgument("need 0 <= i <= n/2");
  std::vector<int> parts(static_cast<std::size_t>(i), 2);
  parts.insert(parts.end(), static_cast<std::size_t>(n - 2 * i), 1);
  return Partition(parts);
}

BlockSpec canonical_blocks(int n, int i) {
  if (n < 1 || i < 0 || 2 * i > n) {
    throw InvalidArgument("canonical layout needs n >= 1 and 0 <= i <= [n/2], got n=" +
                          std::to_string(n) + ", i=" + std::to_string(i));
  }
  const auto ii = static_cast<std::size_t>(i);
  return BlockSpec::symmetric({ii, static_cast<std::size_t>(n - 2 * i), ii});
}

CanonicalNilpotent canonical_e(const Field& field, int n, int i) {
  const BlockSpec spec = canonical_blocks(n, i);
  Mat e(field, static_cast<std::size_t>(n), static_cast<std::size_t>(n));
  set_block(e, spec, 0, 2, Mat::identity(field, static_cast<std::size_t>(i)));
  return {n, i, std::move(e)};
}

Mat jordan_matrix(const Field& field, const Partition& type) {
  Mat out(field, static_cast<std::size_t>(type.n()), static_cast<std::size_t>(type.n()));
  std::size_t at = 0;
  for (int s : type.parts()) {
    set_submatrix(out, at, at, jordan_block(field, static_cast<std::size_t>(s)));
    at += static_cast<std::size_t>(s);
  }
  return out;
}

Partition jordan_type(const Mat& x) {
  if (!x.square()) throw DimensionMismatch("jordan_type: matrix is not square");
  const std::size_t n = x.rows();
  std::vector<std::size_t> r{n};
  Mat power = Mat::identity(x.field(), n);
  while (r.back() != 0) {
    if (r.size() > n + 1) throw DomainError("jordan_type: matrix is not nilpotent");
    power = mul(power, x);
    const std::size_t rk = rank(power);
    if (rk == r.back() && rk != 0) throw DomainError("jordan_type: matrix is not nilpotent");
    r.push_back(rk);
  }
  r.push_back(0);
  std::vector<int> parts;
  for (std::size_t k = 1; k + 1 < r.size(); ++k) {
    const long long mult = static_cast<long long>(r[k - 1]) - 2 * static_cast<long long>(r[k]) +
                           static_cast<long long>(r[k + 1]);
    parts.insert(parts.end(), static_cast<std::size_t>(mult), static_cast<int>(k));
  }
  return Partition(parts);
}

std::vector<Mat> centralizer_basis(const Mat& x) {
  if (!x.square()) throw DimensionMismatch("centralizer_basis: matrix is not square");
  const std::size_t n = x.rows();
  const FieldCtx& f = x.ctx();
  Mat lin(x.field(), n * n, n * n);
  // (zx - xz)_{rc} = sum_k z_{rk} x_{kc} - sum_k x_{rk} z_{kc}
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      const std::size_t row = r * n + c;
      for (std::size_t k = 0; k < n; ++k) {
        lin(row, r * n + k) = f.add(lin(row, r * n + k), x(k, c));
        lin(row, k * n + c) = f.sub(lin(row, k * n + c), x(r, k));
      }
    }
  }
  std::vector<Mat> basis;
  for (const Mat& v : rank_kernel(lin).kernel) basis.push_back(unvec(v, n, n));
  return basis;
}

int dim_centralizer(const Partition& type) {
  const Partition t = type.transpose();
  int d = 0;
  for (int c : t.parts()) d += c * c;
  return d;
}

BigInt gl_order(int n, std::uint64_t q) {
  if (n < 0) throw InvalidArgument("gl_order: negative n");
  BigInt qq = q;
  BigInt out = boost::multiprecision::pow(qq, static_cast<unsigned>(n * (n - 1) / 2));
  for (int i = 1; i <= n; ++i) out *= boost::multiprecision::pow(qq, static_cast<unsigned>(i)) - 1;
  return out;
}

BigInt centralizer_group_order(int n, int i, std::uint64_t q) {
  if (i < 0 || 2 * i > n) throw InvalidArgument("centralizer_group_order: need 0 <= i <= [n/2]");
  const int d = (n - i) * (n - i) + i * i;
  const int m1 = n - 2 * i;
  const int m2 = i;
  BigInt out = boost::multiprecision::pow(BigInt(q), static_cast<unsigned>(d - m1 * m1 - m2 * m2));
  return out * gl_order(m1, q) * gl_order(m2, q);
}

BigInt orbit_size(int n, int i, std::uint64_t q) {
  const BigInt g = gl_order(n, q);
  const BigInt z = centralizer_group_order(n, i, q);
  if (g % z != 0) throw DomainError("orbit_size: centralizer order does not divide |GL(n,q)|");
  return g / z;
}

std::vector<int> cocharacter_weights(const Partition& type) {
  std::vector<int> w;
  for (int s : type.parts())
    for (int k = 0; k < s; ++k) w.push_back(s - 1 - 2 * k);
  return w;
}

}  // namespace nilcomm
