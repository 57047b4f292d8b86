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

#include "nilcomm/enumerate.hpp"

#include <string>

namespace nilcomm {

std::uint64_t enumeration_size(std::uint32_t q, std::size_t d, std::uint64_t budget,
                               const char* what) {
  std::uint64_t total = 1;
  long double requested = 1;
  bool over = false;
  for (std::size_t i = 0; i < d; ++i) {
    requested *= q;
    if (!over && total > budget / q) over = true;
    if (!over) total *= q;
  }
  if (over || total > budget) {
    throw BudgetExceeded(std::string(what) + ": " + std::to_string(q) + "^" + std::to_string(d) +
                             " points exceed the budget of " + std::to_string(budget),
                         requested, budget);
  }
  return total;
}

}  // namespace nilcomm
