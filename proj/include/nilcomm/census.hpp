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
#include <optional>
#include <string>
#include <vector>

#include "nilcomm/io.hpp"
#include "nilcomm/variety.hpp"

namespace nilcomm {

struct CensusRecord {
  int n = 0;
  std::optional<int> i;  // nullopt: whole variety
  std::uint64_t q = 0;
  BigInt count;
  std::uint64_t budget_used = 0;  // enumeration visits
  double elapsed = 0;             // seconds
};

struct CensusReport {
  std::vector<CensusRecord> records;       // increasing q
  std::optional<DimEstimate> estimate;     // from the two largest q
};

// Counts |C(F_q)| (i unset) or the centralizer nullcone of e_i for each q.
CensusReport run_census(int n, std::vector<std::uint64_t> qs, std::optional<int> i,
                        const EnumerationOptions& opts = {});

Json dim_estimate_to_json(const DimEstimate& est);
Json census_to_json(const CensusReport& report, bool timing = false);
// Columns n,i,q,count,dim_est,lead_est; the estimate columns hold the fit
// through that row (empty on the first).
std::string census_to_csv(const CensusReport& report);

}  // namespace nilcomm
