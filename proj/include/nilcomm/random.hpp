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

// Seeded randomness. Only raw mt19937_64 output is used (no standard
// distributions), so a seed reproduces the same stream on every platform.

#pragma once

#include <cstdint>
#include <random>

#include "nilcomm/mat.hpp"

namespace nilcomm {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  // Uniform in [0, n), n >= 1.
  std::uint64_t below(std::uint64_t n) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return x % n;
  }

  bool coin() { return (engine_() >> 63) != 0; }

  Elem element(const FieldCtx& f) { return static_cast<Elem>(below(f.q())); }
  Elem nonzero_element(const FieldCtx& f) { return static_cast<Elem>(1 + below(f.q() - 1)); }

  // Seed for a derived stream (per trial, per worker).
  std::uint64_t fork() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

Mat random_mat(const Field& field, std::size_t rows, std::size_t cols, Rng& rng);
Mat random_invertible(const Field& field, std::size_t n, Rng& rng);

}  // namespace nilcomm
