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


// JSON interchange. Field elements are written as their integer encodings.

#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "nilcomm/modvar.hpp"
#include "nilcomm/nilpotent.hpp"
#include "nilcomm/variety.hpp"

namespace nilcomm {

using Json = nlohmann::ordered_json;

// Parse failures throw InvalidArgument naming the offending field.
Json mat_to_json(const Mat& m);
Mat mat_from_json(const Json& j);

Json comm_pair_to_json(const CommPair& pair);
// Rejects pairs violating the defining equations (DomainError naming it).
CommPair comm_pair_from_json(const Json& j);

Json partition_to_json(const Partition& type);
Partition partition_from_json(const Json& j);

// Integers that fit in 64 bits become JSON numbers, larger ones strings.
Json bigint_to_json(const BigInt& v);

Json fingerprint_to_json(const Fingerprint& fp);

// List of {dim, class_tag, parameter, certified, fingerprint}.
Json decomposition_report(const std::vector<Summand>& summands);

Json read_json_file(const std::string& path);

}  // namespace nilcomm
