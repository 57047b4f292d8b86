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


#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "nilcomm/enumerate.hpp"
#include "nilcomm/io.hpp"

namespace nilcomm {

struct SuiteConfig {
  std::uint64_t budget = kDefaultBudget;
  std::uint64_t samples = 10000;
  std::uint64_t seed = 42;
  unsigned workers = 1;
};

struct CheckResult {
  std::string name;
  bool pass = false;
  Json detail;  // exact counts, estimates, tolerances
};

struct SuiteReport {
  std::string name;
  std::vector<CheckResult> checks;

  bool pass() const;
  Json to_json(const SuiteConfig& config) const;
};

const std::vector<std::string>& suite_names();

// Throws InvalidArgument for an unknown name; BudgetExceeded propagates.
SuiteReport run_suite(const std::string& name, const SuiteConfig& config);

}  // namespace nilcomm
