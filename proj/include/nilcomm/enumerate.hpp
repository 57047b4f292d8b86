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

// Exhaustive enumeration of the F_q-span of a list of matrices.
//
// Points are visited in lexicographic order of their coefficient vectors
// (c_0, ..., c_{d-1}) with c_0 varying fastest; point number t has
// c_k = floor(t / q^k) mod q. Consecutive points differ in a few
// coordinates only, so the current matrix is updated in place instead of
// being rebuilt.
//
// A visitor is a commutative, associative aggregator: it is copied once per
// worker, each copy sees a contiguous index range, and the copies are merged
// in range order. The result therefore does not depend on the worker count.

#pragma once

#include <algorithm>
#include <concepts>
#include <cstdint>
#include <map>
#include <span>
#include <thread>
#include <vector>

#include "nilcomm/mat.hpp"

namespace nilcomm {

inline constexpr std::uint64_t kDefaultBudget = std::uint64_t{1} << 34;

struct EnumerationOptions {
  std::uint64_t budget = kDefaultBudget;
  unsigned workers = 1;
};

// q^d, or BudgetExceeded when it is larger than `budget`.
std::uint64_t enumeration_size(std::uint32_t q, std::size_t d, std::uint64_t budget,
                               const char* what = "enumeration");

template <class V>
concept AffineVisitor = std::copy_constructible<V> && requires(V v, const V& other, const Mat& m) {
  v(m);
  v.merge(other);
};

namespace detail {

// Unchecked acc += b; shapes and fields are validated once up front.
inline void raw_add(Mat& acc, const Mat& b) {
  const FieldCtx& f = acc.ctx();
  Elem* d = acc.data().data();
  const Elem* s = b.data().data();
  const std::size_t len = acc.data().size();
  if (f.p() == 2) {
    for (std::size_t i = 0; i < len; ++i) d[i] ^= s[i];
  } else {
    for (std::size_t i = 0; i < len; ++i) d[i] = f.add(d[i], s[i]);
  }
}

// Visits points first .. first+count-1 of the span of `basis`.
template <AffineVisitor V>
void enumerate_range(std::span<const Mat> basis, std::uint64_t first, std::uint64_t count,
                     V& visitor) {
  if (count == 0) return;
  const Mat& shape = basis.front();
  const FieldCtx& f = shape.ctx();
  const std::uint32_t q = f.q();
  const std::size_t d = basis.size();

  // Scaled copies s * basis[k] for every step scalar s = (c+1) - c and the
  // wrap scalar 0 - (q-1). There are only a handful of distinct values.
  std::map<Elem, std::vector<Mat>> scaled;
  auto scaled_basis = [&](Elem s) -> const std::vector<Mat>& {
    auto it = scaled.find(s);
    if (it != scaled.end()) return it->second;
    std::vector<Mat> v;
    v.reserve(d);
    for (const Mat& b : basis) v.push_back(scale(s, b));
    return scaled.emplace(s, std::move(v)).first->second;
  };
  std::vector<const std::vector<Mat>*> step(q);
  for (std::uint32_t c = 0; c + 1 < q; ++c) {
    step[c] = &scaled_basis(f.sub(static_cast<Elem>(c + 1), static_cast<Elem>(c)));
  }
  const std::vector<Mat>& wrap = scaled_basis(f.sub(0, static_cast<Elem>(q - 1)));

  std::vector<std::uint32_t> digit(d, 0);
  Mat current(shape.field(), shape.rows(), shape.cols());
  std::uint64_t t = first;
  for (std::size_t k = 0; k < d; ++k) {
    digit[k] = static_cast<std::uint32_t>(t % q);
    t /= q;
    if (digit[k] != 0) add_scaled_inplace(current, static_cast<Elem>(digit[k]), basis[k]);
  }

  for (std::uint64_t visited = 0;;) {
    visitor(static_cast<const Mat&>(current));
    if (++visited == count) break;
    for (std::size_t k = 0; k < d; ++k) {
      const std::uint32_t c = digit[k];
      if (c + 1 < q) {
        digit[k] = c + 1;
        raw_add(current, (*step[c])[k]);
        break;
      }
      digit[k] = 0;
      raw_add(current, wrap[k]);
    }
  }
}

}  // namespace detail

// Invokes `visitor` on every F_q-linear combination of `basis` exactly once
// and returns the merged aggregate. The basis must be non-empty and its
// elements must share shape and field.
template <AffineVisitor V>
V enumerate_affine(std::span<const Mat> basis, V visitor, const EnumerationOptions& opts = {}) {
  if (basis.empty()) throw InvalidArgument("enumerate_affine: empty basis");
  for (const Mat& b : basis) {
    if (b.rows() != basis.front().rows() || b.cols() != basis.front().cols()) {
      throw DimensionMismatch("enumerate_affine: basis elements differ in shape");
    }
    if (!same_field(b.field(), basis.front().field())) {
      throw FieldMismatch("enumerate_affine: basis elements over different fields");
    }
  }
  const std::uint64_t total =
      enumeration_size(basis.front().ctx().q(), basis.size(), opts.budget, "enumerate_affine");

  const std::uint64_t workers =
      std::max<std::uint64_t>(1, std::min<std::uint64_t>(opts.workers, total));
  if (workers == 1) {
    detail::enumerate_range(basis, 0, total, visitor);
    return visitor;
  }
  std::vector<V> parts(workers, visitor);
  std::vector<std::thread> threads;
  const std::uint64_t chunk = total / workers;
  const std::uint64_t extra = total % workers;
  std::uint64_t first = 0;
  for (std::uint64_t w = 0; w < workers; ++w) {
    const std::uint64_t count = chunk + (w < extra ? 1 : 0);
    threads.emplace_back([&, w, first, count] {
      detail::enumerate_range(basis, first, count, parts[w]);
    });
    first += count;
  }
  for (auto& th : threads) th.join();
  V result = parts.front();
  for (std::uint64_t w = 1; w < workers; ++w) result.merge(parts[w]);
  return result;
}

// Visits only points first .. first+count-1; used to resume or shard a run.
template <AffineVisitor V>
V enumerate_affine_range(std::span<const Mat> basis, std::uint64_t first, std::uint64_t count,
                         V visitor) {
  if (basis.empty()) throw InvalidArgument("enumerate_affine: empty basis");
  detail::enumerate_range(basis, first, count, visitor);
  return visitor;
}

// Aggregators used throughout the library.

struct CountAll {
  std::uint64_t count = 0;
  void operator()(const Mat&) { ++count; }
  void merge(const CountAll& o) { count += o.count; }
};

// Counts points whose p-th power vanishes.
struct CountRestrictedNilpotent {
  std::uint64_t count = 0;
  void operator()(const Mat& m) {
    if (pth_power_is_zero(m)) ++count;
  }
  void merge(const CountRestrictedNilpotent& o) { count += o.count; }
};

// Counts invertible points.
struct CountInvertible {
  std::uint64_t count = 0;
  void operator()(const Mat& m) {
    if (is_invertible(m)) ++count;
  }
  void merge(const CountInvertible& o) { count += o.count; }
};

}  // namespace nilcomm
