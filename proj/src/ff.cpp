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

#include "nilcomm/ff.hpp"

#include <map>
#include <mutex>
#include <string>
#include <utility>

namespace nilcomm {
namespace {

using Poly = std::vector<int>;  // low degree first, over GF(p)

bool supported_prime(int p) { return p == 2 || p == 3 || p == 5 || p == 7; }

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo the monic polynomial m.
Poly poly_mod(Poly a, const Poly& m, int p) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  while (a.size() > dm) {
    const int lead = a.back();
    const std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i) {
      a[shift + i] = ((a[shift + i] - lead * m[i]) % p + p) % p;
    }
    trim(a);
  }
  return a;
}

// Monic polynomial of degree d whose lower coefficients are the base-p
// digits of idx.
Poly monic_from_index(std::uint32_t idx, int d, int p) {
  Poly f(static_cast<std::size_t>(d) + 1, 0);
  for (int i = 0; i < d; ++i) {
    f[static_cast<std::size_t>(i)] = static_cast<int>(idx % static_cast<std::uint32_t>(p));
    idx /= static_cast<std::uint32_t>(p);
  }
  f[static_cast<std::size_t>(d)] = 1;
  return f;
}

std::uint32_t ipow(std::uint32_t b, int e) {
  std::uint32_t r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

bool irreducible(const Poly& f, int p) {
  const int deg = static_cast<int>(f.size()) - 1;
  for (int d = 1; 2 * d <= deg; ++d) {
    const std::uint32_t count = ipow(static_cast<std::uint32_t>(p), d);
    for (std::uint32_t idx = 0; idx < count; ++idx) {
      if (poly_mod(f, monic_from_index(idx, d, p), p).empty()) return false;
    }
  }
  return true;
}

// Lexicographically smallest monic irreducible of degree k, comparing
// (c_0, c_1, ..., c_{k-1}) from the constant term.
Poly smallest_irreducible(int p, int k) {
  if (k == 1) return {0, 1};
  const std::uint32_t count = ipow(static_cast<std::uint32_t>(p), k);
  for (std::uint32_t rank = 0; rank < count; ++rank) {
    // rank enumerates coefficient tuples with c_0 most significant.
    Poly f(static_cast<std::size_t>(k) + 1, 0);
    std::uint32_t r = rank;
    for (int i = k - 1; i >= 0; --i) {
      f[static_cast<std::size_t>(i)] = static_cast<int>(r % static_cast<std::uint32_t>(p));
      r /= static_cast<std::uint32_t>(p);
    }
    f[static_cast<std::size_t>(k)] = 1;
    if (f[0] != 0 && irreducible(f, p)) return f;
  }
  throw DomainError("no irreducible polynomial found");  // unreachable
}

}  // namespace

FieldCtx::FieldCtx(int p, int k) : p_(p), k_(k), q_(ipow(static_cast<std::uint32_t>(p), k)) {
  modulus_ = smallest_irreducible(p, k);

  if (p_ != 2) {
    neg_.resize(q_);
    for (std::uint32_t a = 0; a < q_; ++a) {
      std::vector<int> d = digits(static_cast<Elem>(a));
      std::uint32_t v = 0;
      for (int i = k_ - 1; i >= 0; --i) {
        v = v * static_cast<std::uint32_t>(p_) +
            static_cast<std::uint32_t>((p_ - d[static_cast<std::size_t>(i)]) % p_);
      }
      neg_[a] = static_cast<Elem>(v);
    }
    if (q_ <= kFullTableLimit) {
      add_.resize(static_cast<std::size_t>(q_) * q_);
      for (std::uint32_t a = 0; a < q_; ++a)
        for (std::uint32_t b = 0; b < q_; ++b)
          add_[a * q_ + b] = add_digits(static_cast<Elem>(a), static_cast<Elem>(b));
    }
  }

  // Multiplicative group: find the smallest generator, then exp/log tables.
  const std::uint32_t order = q_ - 1;
  std::vector<Elem> powers(order);
  for (std::uint32_t g = 1; g < q_; ++g) {
    Elem x = 1;
    bool generator = true;
    for (std::uint32_t e = 0; e < order; ++e) {
      if (e > 0 && x == 1) {
        generator = false;
        break;
      }
      powers[e] = x;
      x = mul_poly(x, static_cast<Elem>(g));
    }
    if (generator) {
      primitive_ = static_cast<Elem>(g);
      break;
    }
  }
  exp_.resize(2 * static_cast<std::size_t>(order) + 1);
  log_.assign(q_, 0);
  for (std::uint32_t e = 0; e < order; ++e) {
    exp_[e] = powers[e];
    exp_[e + order] = powers[e];
    log_[powers[e]] = e;
  }
  exp_[2 * static_cast<std::size_t>(order)] = powers[0];

  inv_.assign(q_, 0);
  for (std::uint32_t a = 1; a < q_; ++a) {
    inv_[a] = exp_[(order - log_[a]) % order];
  }

  if (q_ <= kFullTableLimit) {
    std::vector<Elem> table(static_cast<std::size_t>(q_) * q_, 0);
    for (std::uint32_t a = 1; a < q_; ++a)
      for (std::uint32_t b = 1; b < q_; ++b)
        table[a * q_ + b] = exp_[static_cast<std::size_t>(log_[a]) + log_[b]];
    mul_ = std::move(table);
  }
}

std::vector<int> FieldCtx::digits(Elem a) const {
  std::vector<int> d(static_cast<std::size_t>(k_), 0);
  std::uint32_t v = a;
  for (int i = 0; i < k_; ++i) {
    d[static_cast<std::size_t>(i)] = static_cast<int>(v % static_cast<std::uint32_t>(p_));
    v /= static_cast<std::uint32_t>(p_);
  }
  return d;
}

Elem FieldCtx::add_digits(Elem a, Elem b) const {
  std::uint32_t x = a, y = b, out = 0, place = 1;
  const auto pp = static_cast<std::uint32_t>(p_);
  for (int i = 0; i < k_; ++i) {
    out += ((x % pp + y % pp) % pp) * place;
    x /= pp;
    y /= pp;
    place *= pp;
  }
  return static_cast<Elem>(out);
}

Elem FieldCtx::mul_poly(Elem a, Elem b) const {
  if (k_ == 1) return static_cast<Elem>((static_cast<std::uint32_t>(a) * b) % q_);
  const std::vector<int> da = digits(a), db = digits(b);
  Poly prod(static_cast<std::size_t>(2 * k_), 0);
  for (std::size_t i = 0; i < da.size(); ++i)
    for (std::size_t j = 0; j < db.size(); ++j)
      prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
  const Poly r = poly_mod(prod, modulus_, p_);
  std::uint32_t out = 0;
  for (std::size_t i = r.size(); i-- > 0;) {
    out = out * static_cast<std::uint32_t>(p_) + static_cast<std::uint32_t>(r[i]);
  }
  return static_cast<Elem>(out);
}

Elem FieldCtx::inv(Elem a) const {
  if (a == 0) throw DomainError("inverse of zero");
  return inv_[a];
}

Elem FieldCtx::pow(Elem a, std::uint64_t e) const {
  Elem result = 1;
  Elem base = a;
  while (e > 0) {
    if (e & 1u) result = mul(result, base);
    base = mul(base, base);
    e >>= 1u;
  }
  return result;
}

Elem FieldCtx::from_int(long long v) const {
  long long r = v % p_;
  if (r < 0) r += p_;
  return static_cast<Elem>(r);
}

Field make_field(int p, int k) {
  if (!supported_prime(p)) {
    throw InvalidArgument("unsupported characteristic " + std::to_string(p) +
                          " (supported: 2, 3, 5, 7)");
  }
  if (k < 1) throw InvalidArgument("extension degree must be >= 1");
  std::uint64_t q = 1;
  for (int i = 0; i < k; ++i) {
    q *= static_cast<std::uint64_t>(p);
    if (q > kMaxFieldSize) {
      throw InvalidArgument("field size " + std::to_string(p) + "^" + std::to_string(k) +
                            " exceeds 2^16");
    }
  }

  static std::mutex mutex;
  static std::map<std::pair<int, int>, Field> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find({p, k});
  if (it != cache.end()) return it->second;
  Field f(new FieldCtx(p, k));
  cache.emplace(std::make_pair(p, k), f);
  return f;
}

Field field_of_size(std::uint32_t q) {
  for (int p : {2, 3, 5, 7}) {
    std::uint32_t v = q;
    int k = 0;
    while (v > 1 && v % static_cast<std::uint32_t>(p) == 0) {
      v /= static_cast<std::uint32_t>(p);
      ++k;
    }
    if (v == 1 && k >= 1) return make_field(p, k);
  }
  throw InvalidArgument("field size " + std::to_string(q) +
                        " is not a power of 2, 3, 5 or 7");
}

bool same_field(const FieldCtx& a, const FieldCtx& b) {
  return &a == &b || (a.p() == b.p() && a.k() == b.k());
}

}  // namespace nilcomm
