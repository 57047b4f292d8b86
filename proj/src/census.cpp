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


#include "nilcomm/census.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>

namespace nilcomm {
namespace {

std::string fixed(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

std::vector<std::pair<std::uint64_t, BigInt>> samples_upto(const CensusReport& r, std::size_t last) {
  std::vector<std::pair<std::uint64_t, BigInt>> s;
  for (std::size_t k = 0; k <= last; ++k) s.emplace_back(r.records[k].q, r.records[k].count);
  return s;
}

}  // namespace

CensusReport run_census(int n, std::vector<std::uint64_t> qs, std::optional<int> i,
                        const EnumerationOptions& opts) {
  if (qs.empty()) throw InvalidArgument("census: no field sizes given");
  std::sort(qs.begin(), qs.end());
  if (std::adjacent_find(qs.begin(), qs.end()) != qs.end()) {
    throw InvalidArgument("census: repeated field size");
  }
  std::vector<Field> fields;
  for (std::uint64_t q : qs) fields.push_back(field_of_size(q));

  // Fail on budget before doing any work.
  for (const Field& f : fields) {
    if (i) {
      const std::size_t dim = centralizer_basis(canonical_e(f, n, *i).matrix).size();
      enumeration_size(f->q(), dim, opts.budget, "census");
    } else if (f->p() != 2) {
      throw InvalidArgument("census: whole-variety counts need characteristic 2");
    }
  }

  CensusReport report;
  for (const Field& f : fields) {
    const auto start = std::chrono::steady_clock::now();
    CensusRecord rec;
    rec.n = n;
    rec.i = i;
    rec.q = f->q();
    if (i) {
      rec.count = count_cent_nil(n, *i, f, opts);
      rec.budget_used = enumeration_size(
          f->q(), centralizer_basis(canonical_e(f, n, *i).matrix).size(), opts.budget);
    } else {
      const VarietyCount vc = count_C_detailed(n, f, opts);
      rec.count = vc.total;
      rec.budget_used = vc.visits;
    }
    rec.elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    report.records.push_back(std::move(rec));
  }
  if (report.records.size() >= 2 &&
      std::all_of(report.records.begin(), report.records.end(), [](const CensusRecord& r) { return r.count > 0; })) {
    report.estimate = estimate_dim(samples_upto(report, report.records.size() - 1));
  }
  return report;
}

Json dim_estimate_to_json(const DimEstimate& est) {
  return Json{{"q_lo", est.q_lo},
              {"q_hi", est.q_hi},
              {"ratio", est.ratio},
              {"dim_estimate", est.dim},
              {"dim_rounded", est.dim_rounded},
              {"leading_coeff_estimate", est.leading},
              {"leading_rounded", est.leading_rounded}};
}

Json census_to_json(const CensusReport& report, bool timing) {
  Json records = Json::array();
  for (const CensusRecord& r : report.records) {
    Json rec{{"n", r.n}, {"i", r.i ? Json(*r.i) : Json("full")}, {"q", r.q},
             {"exact_count", bigint_to_json(r.count)}, {"budget_used", r.budget_used}};
    if (timing) rec["elapsed"] = r.elapsed;
    records.push_back(std::move(rec));
  }
  Json out{{"records", std::move(records)}};
  if (report.estimate) out["estimate"] = dim_estimate_to_json(*report.estimate);
  return out;
}

std::string census_to_csv(const CensusReport& report) {
  std::string out = "n,i,q,count,dim_est,lead_est\n";
  for (std::size_t k = 0; k < report.records.size(); ++k) {
    const CensusRecord& r = report.records[k];
    out += std::to_string(r.n) + "," + (r.i ? std::to_string(*r.i) : "full") + "," +
           std::to_string(r.q) + "," + r.count.str() + ",";
    if (k > 0 && r.count > 0 && report.records[k - 1].count > 0) {
      const DimEstimate est = estimate_dim(samples_upto(report, k));
      out += fixed(est.dim) + "," + fixed(est.leading);
    } else {
      out += ",";
    }
    out += "\n";
  }
  return out;
}

}  // namespace nilcomm
