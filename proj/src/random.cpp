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

#include "nilcomm/random.hpp"

namespace nilcomm {

Mat random_mat(const Field& field, std::size_t rows, std::size_t cols, Rng& rng) {
  Mat m(field, rows, cols);
  for (Elem& e : m.data()) e = rng.element(*field);
  return m;
}

Mat random_invertible(const Field& field, std::size_t n, Rng& rng) {
  // Rejection sampling; over GF(2) roughly 29% of matrices are invertible.
  for (;;) {
    Mat g = random_mat(field, n, n, rng);
    if (is_invertible(g)) return g;
  }
}

}  // namespace nilcomm
