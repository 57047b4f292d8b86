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


#include "nilcomm/suites.hpp"

#include <cmath>
#include <functional>
#include <map>

#include "nilcomm/grading.hpp"
#include "nilcomm/modvar.hpp"
#include "nilcomm/truncated.hpp"
#include "nilcomm/variety.hpp"

namespace nilcomm {
namespace {

// Values computed once by enumeration and frozen.
const std::map<std::pair<int, std::uint64_t>, BigInt> kPinnedC = {
    {{2, 2}, 10}, {{3, 2}, 148}, {{4, 2}, 10816}, {{4, 4}, 38711296}, {{4, 8}, BigInt("147083493376")}};
const std::map<std::tuple<int, int, std::uint64_t>, std::uint64_t> kPinnedCentNil = {
    {{4, 2, 2}, 28},    {{4, 2, 4}, 496}, {{4, 2, 8}, 8128}, {{5, 2, 2}, 160},
    {{5, 2, 4}, 11776}, {{6, 3, 2}, 1184}, {{5, 2, 3}, 16281}};

class Runner {
 public:
  explicit Runner(const SuiteConfig& config) : config_(config) {
    opts_.budget = config.budget;
    opts_.workers = config.workers;
  }

  void check(std::string name, bool pass, Json detail = Json::object()) {
    report.checks.push_back({std::move(name), pass, std::move(detail)});
  }

  BigInt count_full(int n, std::uint64_t q) {
    const BigInt got = count_C(n, field_of_size(q), opts_);
    const BigInt& want = kPinnedC.at({n, q});
    check("count_C(" + std::to_string(n) + "," + std::to_string(q) + ")", got == want,
          {{"count", bigint_to_json(got)}, {"pinned", bigint_to_json(want)}});
    return got;
  }

  BigInt count_cn(int n, int i, std::uint64_t q) {
    const std::uint64_t got = count_cent_nil(n, i, field_of_size(q), opts_);
    const std::uint64_t want = kPinnedCentNil.at({n, i, q});
    check("count_cent_nil(" + std::to_string(n) + "," + std::to_string(i) + "," + std::to_string(q) + ")",
          got == want, {{"count", got}, {"pinned", want}});
    return got;
  }

  void fit(const std::string& label, const std::vector<std::pair<std::uint64_t, BigInt>>& samples,
           double dim, double tol, long long leading) {
    const DimEstimate est = estimate_dim(samples);
    check(label + " dimension", std::abs(est.dim - dim) <= tol,
          {{"dim_estimate", est.dim}, {"ratio", est.ratio}, {"expected", dim}, {"tolerance", tol}});
    check(label + " leading coefficient", est.leading_rounded == leading,
          {{"leading_coeff_estimate", est.leading},
           {"rounded", est.leading_rounded},
           {"expected", leading}});
  }

  void main_theorem() {
    count_full(2, 2);
    count_full(3, 2);
    std::vector<std::pair<std::uint64_t, BigInt>> samples;
    for (std::uint64_t q : {2, 4, 8}) samples.emplace_back(q, count_full(4, q));
    fit("C(gl4)", samples, 12, 0.35, 2);
  }

  void equid2() {
    std::vector<std::pair<std::uint64_t, BigInt>> s42;
    for (std::uint64_t q : {2, 4, 8}) s42.emplace_back(q, count_cn(4, 2, q));
    fit("z(e_2) nullcone, n=4", s42, 4, 0.35, 2);
    std::vector<std::pair<std::uint64_t, BigInt>> s52;
    for (std::uint64_t q : {2, 4}) s52.emplace_back(q, count_cn(5, 2, q));
    fit("z(e_2) nullcone, n=5", s52, 6, 0.6, 3);
    count_cn(6, 3, 2);
    // Run twice with different worker counts: the count must not move.
    const std::uint64_t again =
        count_cent_nil(6, 3, make_field(2, 1), {.budget = config_.budget, .workers = config_.workers + 1});
    check("count_cent_nil(6,3,2) worker independence", again == kPinnedCentNil.at({6, 3, 2}),
          {{"count", again}});

    const Field f2 = make_field(2, 1);
    for (int n = 2; n <= 5; ++n) {
      for (int i = 0; 2 * i <= n; ++i) {
        const std::size_t r = max_rank_second(n, i, f2, opts_);
        const bool top = i == n / 2;
        check("max_rank_second(" + std::to_string(n) + "," + std::to_string(i) + ",2)",
              top ? r == static_cast<std::size_t>(i) : r > static_cast<std::size_t>(i),
              {{"max_rank", r}, {"i", i}, {"expected", top ? "== i" : "> i"}});
      }
    }
  }

  void decomposition(const std::string& label, const LambdaModule& m,
                     const std::vector<std::string>& want, std::optional<int> end_dim = {}) {
    const std::vector<Summand> parts = decompose(m, {.seed = config_.seed});
    std::vector<std::string> got;
    bool certified = true;
    for (const Summand& s : parts) {
      certified = certified && s.certified;
      got.push_back(s.certified ? classify_indec(s).name() : "uncertified");
    }
    std::vector<std::string> got_sorted = got, want_sorted = want;
    std::sort(got_sorted.begin(), got_sorted.end());
    std::sort(want_sorted.begin(), want_sorted.end());
    bool pass = certified && got_sorted == want_sorted;
    Json detail{{"summands", decomposition_report(parts)}, {"expected", want}};
    if (end_dim) {
      const int e = fingerprint(m).end_dim;
      pass = pass && e == *end_dim;
      detail["endDim"] = e;
      detail["expected_endDim"] = *end_dim;
    }
    check(label, pass, std::move(detail));
  }

  void components() {
    const Field f2 = make_field(2, 1);
    const LambdaModule w(w_pair(f2));
    const Fingerprint wfp = fingerprint(w);
    const Fingerprint wwant{4, 2, 2, 1, wfp.rk_x_plus_y, 3, 1, wfp.loewy_length, 4};
    decomposition("W pair indecomposable", w, {"W"});
    check("W fingerprint", wfp == wwant, {{"fingerprint", fingerprint_to_json(wfp)}});
    decomposition("generic X_0, n=4", LambdaModule(generic_component_rep({4, ComponentKind::X, 0}, f2)),
                  {"U(1:0)", "U(1:1)"});
    const LambdaModule zplus(generic_component_rep({5, ComponentKind::XPlus, 0}, f2));
    decomposition("generic X_0^+, n=5", zplus, {"ZPLUS(5)"}, 7);
    decomposition("dual of generic X_0^+, n=5", dualize(zplus), {"ZMINUS(5)"});
    decomposition("X_half, n=5", LambdaModule(generic_component_rep({5, ComponentKind::XHalf, 1}, f2)),
                  {"W", "TRIV"});

    // Every generic representative lies over the dense orbit and has no
    // unexpected summand.
    std::uint64_t others = 0, bad_type = 0, reps = 0;
    for (int n = 2; n <= 6; ++n) {
      const Field f = n / 2 <= 2 ? f2 : make_field(2, 2);
      const Partition dense = square_zero_type(n, n / 2);
      for (const ComponentId& id : list_components(n)) {
        const CommPair rep = generic_component_rep(id, f);
        ++reps;
        if (!(jordan_type(rep.a()) == dense)) ++bad_type;
        for (const Summand& s : decompose(LambdaModule(rep), {.seed = config_.seed}))
          if (!s.certified || classify_indec(s).tag == IndecTag::Other) ++others;
      }
    }
    check("generic reps over the dense orbit", bad_type == 0, {{"reps", reps}, {"violations", bad_type}});
    check("no OTHER summands in generic reps", others == 0, {{"reps", reps}, {"other", others}});

    Rng rng(config_.seed);
    for (int n = 2; n <= 6; ++n) {
      for (int k : {1, 2}) {
        const Field f = make_field(2, k);
        const FieldCtx& fc = *f;
        std::uint64_t violations = 0;
        for (std::uint64_t t = 0; t < config_.samples; ++t) {
          const CommPair p = random_comm_pair(f, n, rng);
          Elem a, b, c, d;
          do {
            a = rng.element(fc), b = rng.element(fc), c = rng.element(fc), d = rng.element(fc);
          } while (fc.sub(fc.mul(a, d), fc.mul(b, c)) == 0);
          if (!is_comm_pair(add(scale(a, p.a()), scale(b, p.b())), add(scale(c, p.a()), scale(d, p.b()))))
            ++violations;
        }
        check("GL(2) closure n=" + std::to_string(n) + " q=" + std::to_string(fc.q()), violations == 0,
              {{"trials", config_.samples}, {"violations", violations}});
      }
    }
  }

  void remark_p7() {
    const BranchReport b = remark7_branch_check(config_.samples, config_.seed);
    check("A_0 = 0 implies A^7 = 0", b.zero_lead_violations == 0,
          {{"samples", b.samples}, {"violations", b.zero_lead_violations}});
    check("A_0 = e12 branch equivalence", b.branch_violations == 0,
          {{"samples", b.samples}, {"violations", b.branch_violations}, {"nilpotent_hits", b.branch_nilpotent}});
    const std::uint64_t grading_samples = std::max<std::uint64_t>(1, config_.samples / 10);
    const GradingReport g = grading_check(Partition({7, 5, 2}), 7, grading_samples, config_.seed);
    Json detail{{"dim_degree0", g.dim_degree0}, {"toral", g.degree0_toral}, {"dim_degree1", g.dim_degree1},
                {"samples", g.samples}, {"positive_violations", g.positive_violations}};
    check("grading (7,5,2) at p=7",
          g.dim_degree0 == 3 && g.degree0_toral && g.dim_degree1 == 0 && g.positive_violations == 0,
          std::move(detail));
  }

  void gl5_p3() {
    const BigInt c = count_cn(5, 2, 3);
    const double ratio = c.convert_to<double>() / std::pow(3.0, 8);
    check("count_cent_nil(5,2,3) / 3^8 in [1,9]", ratio >= 1.0 && ratio <= 9.0,
          {{"ratio", ratio}, {"lower", 1.0}, {"upper", 9.0}});
  }

  SuiteReport report;

 private:
  SuiteConfig config_;
  EnumerationOptions opts_;
};

}  // namespace

bool SuiteReport::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

Json SuiteReport::to_json(const SuiteConfig& config) const {
  Json list = Json::array();
  for (const CheckResult& c : checks) {
    Json entry{{"name", c.name}, {"pass", c.pass}};
    for (auto it = c.detail.begin(); it != c.detail.end(); ++it) entry[it.key()] = it.value();
    list.push_back(std::move(entry));
  }
  return Json{{"suite", name},
              {"pass", pass()},
              {"config", {{"budget", config.budget}, {"samples", config.samples}, {"seed", config.seed}}},
              {"checks", std::move(list)}};
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"main-theorem", "equid2", "components", "remark-p7",
                                                 "gl5-p3", "all"};
  return names;
}

SuiteReport run_suite(const std::string& name, const SuiteConfig& config) {
  const std::map<std::string, void (Runner::*)()> table = {
      {"main-theorem", &Runner::main_theorem}, {"equid2", &Runner::equid2},
      {"components", &Runner::components},     {"remark-p7", &Runner::remark_p7},
      {"gl5-p3", &Runner::gl5_p3}};
  Runner runner(config);
  runner.report.name = name;
  if (name == "all") {
    for (const auto& n : suite_names())
      if (n != "all") (runner.*table.at(n))();
  } else {
    auto it = table.find(name);
    if (it == table.end()) throw InvalidArgument("unknown suite '" + name + "'");
    (runner.*(it->second))();
  }
  return runner.report;
}

}  // namespace nilcomm
