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
#include <map>
#include <vector>

#include "nilcomm/mat.hpp"
#include "nilcomm/nilpotent.hpp"

namespace nilcomm {

// Centralizer of a Jordan matrix split by the weights of its associated
// cocharacter. Every piece has a homogeneous basis.
struct GradedCentralizer {
  Mat e;
  std::vector<int> weights;
  std::map<int, std::vector<Mat>> pieces;  // degree -> basis
};

GradedCentralizer graded_centralizer(const Field& field, const Partition& type);

struct GradingReport {
  Partition type;
  int p = 0;
  int dim_centralizer = 0;
  std::map<int, int> dims;  // degree -> dimension
  int dim_degree0 = 0;
  bool degree0_commutative = false;
  bool degree0_toral = false;
  int dim_degree1 = 0;
  std::uint64_t samples = 0;
  std::uint64_t positive_violations = 0;  // positive-degree samples with y^[p] != 0
};

GradingReport grading_check(const Partition& type, int p, std::uint64_t samples = 1000,
                            std::uint64_t seed = 0);

}  // namespace nilcomm
