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


#include "nilcomm/io.hpp"

#include <fstream>
#include <limits>

namespace nilcomm {
namespace {

const Json& field_of(const Json& j, const char* key) {
  if (!j.is_object()) throw InvalidArgument("expected a JSON object");
  auto it = j.find(key);
  if (it == j.end()) throw InvalidArgument(std::string("missing field '") + key + "'");
  return *it;
}

long long int_field(const Json& j, const char* key) {
  const Json& v = field_of(j, key);
  if (!v.is_number_integer()) throw InvalidArgument(std::string("field '") + key + "' must be an integer");
  return v.get<long long>();
}

Field field_from_json(const Json& j) {
  const long long p = int_field(j, "p");
  const long long k = int_field(j, "k");
  if (p < 2 || p > 1000 || k < 1 || k > 64) throw InvalidArgument("fields 'p','k': unsupported field");
  return make_field(static_cast<int>(p), static_cast<int>(k));
}

Mat entries_from_json(const Json& rows, const Field& field, const char* key) {
  if (!rows.is_array()) throw InvalidArgument(std::string("field '") + key + "' must be an array of rows");
  std::vector<std::vector<long long>> out;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (!rows[r].is_array()) {
      throw InvalidArgument(std::string("field '") + key + "': row " + std::to_string(r) + " is not an array");
    }
    std::vector<long long> row;
    for (const Json& v : rows[r]) {
      if (!v.is_number_integer()) {
        throw InvalidArgument(std::string("field '") + key + "': row " + std::to_string(r) +
                              " has a non-integer entry");
      }
      row.push_back(v.get<long long>());
    }
    out.push_back(std::move(row));
  }
  try {
    return Mat::from_rows(field, out);
  } catch (const Error& e) {
    throw InvalidArgument(std::string("field '") + key + "': " + e.what());
  }
}

Json rows_json(const Mat& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

Json mat_to_json(const Mat& m) {
  return Json{{"p", m.ctx().p()}, {"k", m.ctx().k()}, {"n_rows", m.rows()}, {"n_cols", m.cols()},
              {"entries", rows_json(m)}};
}

Mat mat_from_json(const Json& j) {
  const Field field = field_from_json(j);
  const long long nr = int_field(j, "n_rows");
  const long long nc = int_field(j, "n_cols");
  Mat m = entries_from_json(field_of(j, "entries"), field, "entries");
  if (static_cast<long long>(m.rows()) != nr) throw InvalidArgument("field 'n_rows' disagrees with 'entries'");
  if (nr > 0 && static_cast<long long>(m.cols()) != nc) {
    throw InvalidArgument("field 'n_cols' disagrees with 'entries'");
  }
  return nr == 0 ? Mat(field, 0, static_cast<std::size_t>(nc)) : m;
}

Json comm_pair_to_json(const CommPair& pair) {
  return Json{{"p", pair.field()->p()}, {"k", pair.field()->k()}, {"n", pair.n()},
              {"A", rows_json(pair.a())}, {"B", rows_json(pair.b())}};
}

CommPair comm_pair_from_json(const Json& j) {
  const Field field = field_from_json(j);
  const long long n = int_field(j, "n");
  const Mat a = entries_from_json(field_of(j, "A"), field, "A");
  const Mat b = entries_from_json(field_of(j, "B"), field, "B");
  auto check = [n](const Mat& m, const char* key) {
    if (static_cast<long long>(m.rows()) != n || static_cast<long long>(m.cols()) != n) {
      throw InvalidArgument(std::string("field '") + key + "' must be " + std::to_string(n) + "x" +
                            std::to_string(n));
    }
  };
  check(a, "A");
  check(b, "B");
  return CommPair(a, b);
}

Json partition_to_json(const Partition& type) { return Json(type.parts()); }

Partition partition_from_json(const Json& j) {
  if (!j.is_array()) throw InvalidArgument("partition must be an array of parts");
  std::vector<int> parts;
  for (const Json& v : j) {
    if (!v.is_number_integer()) throw InvalidArgument("partition parts must be integers");
    parts.push_back(v.get<int>());
  }
  return Partition(std::move(parts));
}

Json bigint_to_json(const BigInt& v) {
  if (v >= 0 && v <= std::numeric_limits<std::uint64_t>::max()) {
    return Json(static_cast<std::uint64_t>(v));
  }
  return Json(v.str());
}

Json fingerprint_to_json(const Fingerprint& fp) {
  return Json{{"dim", fp.dim},         {"rkX", fp.rk_x},
              {"rkY", fp.rk_y},        {"rkXY", fp.rk_xy},
              {"rkXplusY", fp.rk_x_plus_y}, {"dimRad", fp.dim_rad},
              {"dimSoc", fp.dim_soc},  {"loewyLength", fp.loewy_length},
              {"endDim", fp.end_dim}};
}

Json decomposition_report(const std::vector<Summand>& summands) {
  Json out = Json::array();
  for (const Summand& s : summands) {
    Json entry;
    entry["dim"] = s.module.dim();
    if (s.certified) {
      const IndecClass c = classify_indec(s);
      entry["class_tag"] = tag_name(c.tag);
      entry["parameter"] = c.param ? Json::array({c.param->first, c.param->second}) : Json(nullptr);
      entry["certified"] = true;
      entry["fingerprint"] = fingerprint_to_json(c.fp);
    } else {
      entry["class_tag"] = nullptr;
      entry["parameter"] = nullptr;
      entry["certified"] = false;
      entry["fingerprint"] = fingerprint_to_json(fingerprint(s.module));
    }
    out.push_back(std::move(entry));
  }
  return out;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw InvalidArgument(path + ": " + e.what());
  }
}

}  // namespace nilcomm
