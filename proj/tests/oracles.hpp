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


// Brute-force reference counts written with plain integers. Nothing here
// uses the library, so agreement is an independent check.

#pragma once

#include <cstdint>
#include <vector>

namespace oracle {

// GF(2) n x n matrices (n <= 8) as bitmasks: row r occupies bits 8r..8r+7.
using Bits = std::uint64_t;

inline bool entry(Bits a, int r, int c) { return (a >> (8 * r + c)) & 1u; }

inline Bits from_index(std::uint64_t idx, int n) {
  Bits a = 0;
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c)
      if ((idx >> (r * n + c)) & 1u) a |= Bits{1} << (8 * r + c);
  return a;
}

inline Bits mul(Bits a, Bits b, int n) {
  Bits out = 0;
  for (int r = 0; r < n; ++r) {
    std::uint64_t row = 0;
    for (int k = 0; k < n; ++k)
      if (entry(a, r, k)) row ^= (b >> (8 * k)) & 0xffu;
    out |= row << (8 * r);
  }
  return out;
}

inline int rank(Bits a, int n) {
  std::uint8_t rows[8];
  for (int r = 0; r < n; ++r) rows[r] = static_cast<std::uint8_t>((a >> (8 * r)) & 0xffu);
  int rk = 0;
  for (int c = 0; c < n; ++c) {
    int piv = -1;
    for (int r = rk; r < n; ++r)
      if ((rows[r] >> c) & 1u) piv = r;
    if (piv < 0) continue;
    std::swap(rows[rk], rows[piv]);
    for (int r = 0; r < n; ++r)
      if (r != rk && ((rows[r] >> c) & 1u)) rows[r] ^= rows[rk];
    ++rk;
  }
  return rk;
}

// All pairs (x, y) of n x n GF(2) matrices with x^2 = y^2 = xy - yx = 0.
inline std::uint64_t count_pairs_exhaustive(int n) {
  const std::uint64_t total = std::uint64_t{1} << (n * n);
  std::uint64_t count = 0;
  for (std::uint64_t i = 0; i < total; ++i) {
    const Bits x = from_index(i, n);
    for (std::uint64_t j = 0; j < total; ++j) {
      const Bits y = from_index(j, n);
      if (mul(x, x, n) == 0 && mul(y, y, n) == 0 && mul(x, y, n) == mul(y, x, n)) ++count;
    }
  }
  return count;
}

inline std::vector<Bits> square_zero(int n) {
  std::vector<Bits> out;
  const std::uint64_t total = std::uint64_t{1} << (n * n);
  for (std::uint64_t i = 0; i < total; ++i) {
    const Bits x = from_index(i, n);
    if (mul(x, x, n) == 0) out.push_back(x);
  }
  return out;
}

// Square-zero x first, then every y.
inline std::uint64_t count_pairs_by_x(int n) {
  const std::vector<Bits> sz = square_zero(n);
  const std::uint64_t total = std::uint64_t{1} << (n * n);
  std::uint64_t count = 0;
  for (Bits x : sz) {
    for (std::uint64_t j = 0; j < total; ++j) {
      const Bits y = from_index(j, n);
      if (mul(y, y, n) == 0 && mul(x, y, n) == mul(y, x, n)) ++count;
    }
  }
  return count;
}

inline std::uint64_t count_square_zero_of_rank(int n, int rk) {
  std::uint64_t count = 0;
  for (Bits x : square_zero(n))
    if (rank(x, n) == rk) ++count;
  return count;
}

inline std::uint64_t count_invertible(int n) {
  std::uint64_t count = 0;
  const std::uint64_t total = std::uint64_t{1} << (n * n);
  for (std::uint64_t i = 0; i < total; ++i)
    if (rank(from_index(i, n), n) == n) ++count;
  return count;
}

inline std::uint64_t count_invertible_commuting(Bits x, int n) {
  std::uint64_t count = 0;
  const std::uint64_t total = std::uint64_t{1} << (n * n);
  for (std::uint64_t i = 0; i < total; ++i) {
    const Bits g = from_index(i, n);
    if (mul(g, x, n) == mul(x, g, n) && rank(g, n) == n) ++count;
  }
  return count;
}

// x = sum_{k < i} e_{k, n-i+k}: identity in the top-right i x i corner.
inline Bits corner_identity(int n, int i) {
  Bits x = 0;
  for (int k = 0; k < i; ++k) x |= Bits{1} << (8 * k + (n - i + k));
  return x;
}

// Small fields with their own encoding: prime fields mod p, and GF(2^k) as
// bit polynomials modulo x^2+x+1 or x^3+x+1.
struct SmallField {
  int p;
  int k;
  int q;
  int poly;

  static SmallField prime(int p) { return {p, 1, p, 0}; }
  static SmallField binary(int k) {
    return {2, k, 1 << k, k == 1 ? 0b10 : k == 2 ? 0b111 : 0b1011};
  }

  int add(int a, int b) const { return p == 2 ? (a ^ b) : (a + b) % p; }
  int mul(int a, int b) const {
    if (k == 1) return (a * b) % p;
    int r = 0;
    for (int bit = 0; bit < k; ++bit)
      if ((b >> bit) & 1) r ^= a << bit;
    for (int bit = 2 * k - 2; bit >= k; --bit)
      if ((r >> bit) & 1) r ^= poly << (bit - k);
    return r;
  }
};

using IntMat = std::vector<int>;

inline IntMat mat_mul(const SmallField& f, const IntMat& a, const IntMat& b, int n) {
  IntMat out(static_cast<std::size_t>(n * n), 0);
  for (int r = 0; r < n; ++r)
    for (int k = 0; k < n; ++k) {
      const int v = a[static_cast<std::size_t>(r * n + k)];
      if (v == 0) continue;
      for (int c = 0; c < n; ++c) {
        int& o = out[static_cast<std::size_t>(r * n + c)];
        o = f.add(o, f.mul(v, b[static_cast<std::size_t>(k * n + c)]));
      }
    }
  return out;
}

inline bool pth_power_zero(const SmallField& f, const IntMat& y, int n) {
  IntMat acc = y;
  for (int k = 1; k < f.p; ++k) acc = mat_mul(f, acc, y, n);
  for (int v : acc)
    if (v != 0) return false;
  return true;
}

// Every y commuting with the corner identity e (blocks i, n-2i, i) has the
// shape [[A, B, C], [0, E, F], [0, 0, A]]. Counts those with y^p = 0 by
// running over all block entries.
inline std::uint64_t count_cent_nil(int n, int i, const SmallField& f) {
  const int r = n - 2 * i;
  struct Slot {
    int row, col, twin_row, twin_col;
  };
  std::vector<Slot> slots;
  for (int a = 0; a < i; ++a)
    for (int b = 0; b < i; ++b) slots.push_back({a, b, i + r + a, i + r + b});  // A
  for (int a = 0; a < i; ++a)
    for (int b = 0; b < r; ++b) slots.push_back({a, i + b, -1, -1});  // B
  for (int a = 0; a < i; ++a)
    for (int b = 0; b < i; ++b) slots.push_back({a, i + r + b, -1, -1});  // C
  for (int a = 0; a < r; ++a)
    for (int b = 0; b < r; ++b) slots.push_back({i + a, i + b, -1, -1});  // E
  for (int a = 0; a < r; ++a)
    for (int b = 0; b < i; ++b) slots.push_back({i + a, i + r + b, -1, -1});  // F

  std::vector<int> coeff(slots.size(), 0);
  std::uint64_t count = 0;
  for (;;) {
    IntMat y(static_cast<std::size_t>(n * n), 0);
    for (std::size_t s = 0; s < slots.size(); ++s) {
      y[static_cast<std::size_t>(slots[s].row * n + slots[s].col)] = coeff[s];
      if (slots[s].twin_row >= 0) y[static_cast<std::size_t>(slots[s].twin_row * n + slots[s].twin_col)] = coeff[s];
    }
    if (pth_power_zero(f, y, n)) ++count;
    std::size_t s = 0;
    while (s < coeff.size() && ++coeff[s] == f.q) coeff[s++] = 0;
    if (s == coeff.size()) break;
  }
  return count;
}

inline std::uint64_t ipow(std::uint64_t b, int e) {
  std::uint64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

// Gaussian binomial [n choose k]_q.
inline std::uint64_t gauss_binomial(int n, int k, std::uint64_t q) {
  std::uint64_t num = 1, den = 1;
  for (int j = 0; j < k; ++j) {
    num *= ipow(q, n - j) - 1;
    den *= ipow(q, j + 1) - 1;
  }
  return num / den;
}

inline std::uint64_t gl_count(int n, std::uint64_t q) {
  std::uint64_t r = 1;
  for (int j = 0; j < n; ++j) r *= ipow(q, n) - ipow(q, j);
  return r;
}

// Square-zero rank-i matrices: a kernel K of dim n-i, an image inside K of
// dim i, and an isomorphism from F^n/K onto the image.
inline std::uint64_t square_zero_rank_count(int n, int i, std::uint64_t q) {
  return gauss_binomial(n, n - i, q) * gauss_binomial(n - i, i, q) * gl_count(i, q);
}

}  // namespace oracle
