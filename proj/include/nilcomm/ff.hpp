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

// Small finite fields GF(p^k), table driven.
//
// An element is encoded as the integer sum c_i p^i where sum c_i t^i is its
// representative polynomial modulo the field's defining polynomial. The
// defining polynomial is the lexicographically smallest monic irreducible of
// degree k, coefficients compared from the constant term upwards, so the
// encoding is identical on every platform and every run.

#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "nilcomm/error.hpp"

namespace nilcomm {

using Elem = std::uint16_t;

inline constexpr std::uint32_t kMaxFieldSize = 1u << 16;
inline constexpr std::uint32_t kFullTableLimit = 256;

class FieldCtx {
 public:
  FieldCtx(const FieldCtx&) = delete;
  FieldCtx& operator=(const FieldCtx&) = delete;

  int p() const { return p_; }
  int k() const { return k_; }
  std::uint32_t q() const { return q_; }
  bool is_gf2() const { return q_ == 2; }

  // Coefficients c_0..c_k (c_k = 1) of the defining polynomial. For k = 1
  // this is t, which is never used for arithmetic.
  const std::vector<int>& modulus() const { return modulus_; }

  // A generator of the multiplicative group, chosen as the smallest encoding.
  Elem primitive() const { return primitive_; }

  bool valid(std::uint32_t a) const { return a < q_; }

  Elem add(Elem a, Elem b) const {
    if (p_ == 2) return static_cast<Elem>(a ^ b);
    if (!add_.empty()) return add_[static_cast<std::size_t>(a) * q_ + b];
    return add_digits(a, b);
  }
  Elem neg(Elem a) const {
    if (p_ == 2) return a;
    return neg_[a];
  }
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }

  Elem mul(Elem a, Elem b) const {
    if (!mul_.empty()) return mul_[static_cast<std::size_t>(a) * q_ + b];
    if (a == 0 || b == 0) return 0;
    return exp_[static_cast<std::size_t>(log_[a]) + log_[b]];
  }

  // Throws DomainError for a == 0.
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, std::uint64_t e) const;

  // Image of an integer in the prime subfield.
  Elem from_int(long long v) const;

  // Digits c_0..c_{k-1} of an encoding.
  std::vector<int> digits(Elem a) const;

 private:
  friend std::shared_ptr<const FieldCtx> make_field(int p, int k);
  FieldCtx(int p, int k);

  Elem add_digits(Elem a, Elem b) const;
  Elem mul_poly(Elem a, Elem b) const;

  int p_;
  int k_;
  std::uint32_t q_;
  std::vector<int> modulus_;
  Elem primitive_ = 1;
  std::vector<Elem> add_;  // only for odd p and q <= kFullTableLimit
  std::vector<Elem> neg_;
  std::vector<Elem> mul_;  // only for q <= kFullTableLimit
  std::vector<Elem> exp_;  // length 2(q-1), so exp_[log a + log b] needs no mod
  std::vector<std::uint32_t> log_;
  std::vector<Elem> inv_;
};

using Field = std::shared_ptr<const FieldCtx>;

// Builds GF(p^k). Supported primes are 2, 3, 5 and 7, and p^k <= 2^16.
// Contexts are cached, so the same (p, k) always yields the same object.
Field make_field(int p, int k);

// Parses a field size q = p^k; throws InvalidArgument if q is not a
// supported prime power.
Field field_of_size(std::uint32_t q);

bool same_field(const FieldCtx& a, const FieldCtx& b);
inline bool same_field(const Field& a, const Field& b) {
  return a && b && same_field(*a, *b);
}

}  // namespace nilcomm
