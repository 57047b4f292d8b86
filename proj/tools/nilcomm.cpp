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


#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "nilcomm/census.hpp"
#include "nilcomm/io.hpp"
#include "nilcomm/modvar.hpp"
#include "nilcomm/suites.hpp"
#include "nilcomm/variety.hpp"

namespace {

using namespace nilcomm;

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

struct RunConfig {
  std::uint64_t budget = kDefaultBudget;
  std::uint64_t seed = 42;
  std::uint64_t samples = 10000;
  unsigned workers = 1;
  std::string out;
  std::string format = "json";
  bool timing = false;
};

unsigned env_workers() {
  if (const char* v = std::getenv("NILCOMM_WORKERS")) {
    try {
      const long n = std::stol(v);
      if (n >= 1) return static_cast<unsigned>(n);
    } catch (const std::exception&) {
    }
    throw InvalidArgument("NILCOMM_WORKERS must be a positive integer");
  }
  return 1;
}

void add_common(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--budget", cfg.budget, "Maximum enumeration visits")->check(CLI::PositiveNumber);
  cmd->add_option("--seed", cfg.seed, "Seed for randomized checks");
  cmd->add_option("--samples", cfg.samples, "Randomized-check count")->check(CLI::PositiveNumber);
  cmd->add_option("--workers", cfg.workers, "Worker threads (default $NILCOMM_WORKERS or 1)")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--out", cfg.out, "Write the report here instead of stdout");
  cmd->add_option("--format", cfg.format, "Report format")->check(CLI::IsMember({"json", "csv"}));
}

void emit(const RunConfig& cfg, const std::string& text) {
  if (cfg.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(cfg.out);
  if (!f) throw InvalidArgument("cannot write " + cfg.out);
  f << text;
}

void require_json(const RunConfig& cfg, const char* cmd) {
  if (cfg.format != "json") throw InvalidArgument(std::string(cmd) + ": CSV is only available for census tables");
}

EnumerationOptions enum_opts(const RunConfig& cfg) { return {.budget = cfg.budget, .workers = cfg.workers}; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Point counts and module decompositions for restricted nilpotent commuting varieties"};
  app.require_subcommand(1);
  RunConfig cfg;

  int n = 0;
  std::optional<int> i;
  std::uint64_t q = 0;
  std::vector<std::uint64_t> qs;
  std::string what, in_path, suite;

  auto* census = app.add_subcommand("census", "Exact counts over several fields with a dimension fit");
  census->add_option("--n", n)->required();
  census->add_option("--qs", qs)->required()->delimiter(',');
  census->add_option("--i", i, "Count the centralizer nullcone of e_i instead of the whole variety");
  census->add_flag("--timing", cfg.timing, "Include elapsed seconds in the report");
  add_common(census, cfg);

  auto* count = app.add_subcommand("count", "One exact count");
  count->add_option("what", what)->required()->check(CLI::IsMember({"full", "cent-nil"}));
  count->add_option("--n", n)->required();
  count->add_option("--q", q)->required();
  count->add_option("--i", i);
  add_common(count, cfg);

  auto* dim = app.add_subcommand("dim-est", "Dimension and leading-coefficient estimates");
  dim->add_option("--n", n)->required();
  dim->add_option("--i", i);
  dim->add_option("--qs", qs)->required()->delimiter(',');
  add_common(dim, cfg);

  auto* dec = app.add_subcommand("decompose", "Decompose the module of a commuting pair");
  dec->add_option("--in", in_path, "CommPair JSON file")->required();
  add_common(dec, cfg);

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("--suite", suite)->required();
  add_common(verify, cfg);

  try {
    cfg.workers = env_workers();
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (census->parsed() || dim->parsed()) {
      if (dim->parsed() && qs.size() < 2) throw InvalidArgument("dim-est: need at least two field sizes");
      const CensusReport report = run_census(n, qs, i, enum_opts(cfg));
      emit(cfg, cfg.format == "csv" ? census_to_csv(report) : census_to_json(report, cfg.timing).dump(2) + "\n");
      return 0;
    }
    if (count->parsed()) {
      require_json(cfg, "count");
      const Field field = field_of_size(q);
      if (what == "full") {
        if (i) throw InvalidArgument("count full: --i does not apply");
        emit(cfg, count_C(n, field, enum_opts(cfg)).str() + "\n");
      } else {
        if (!i) throw InvalidArgument("count cent-nil: --i is required");
        emit(cfg, std::to_string(count_cent_nil(n, *i, field, enum_opts(cfg))) + "\n");
      }
      return 0;
    }
    if (dec->parsed()) {
      require_json(cfg, "decompose");
      const LambdaModule m(comm_pair_from_json(read_json_file(in_path)));
      DecomposeOptions opts;
      opts.idempotent_budget = std::min(opts.idempotent_budget, cfg.budget);
      opts.seed = cfg.seed;
      emit(cfg, decomposition_report(decompose(m, opts)).dump(2) + "\n");
      return 0;
    }
    require_json(cfg, "verify");
    const SuiteConfig sc{.budget = cfg.budget, .samples = cfg.samples, .seed = cfg.seed, .workers = cfg.workers};
    const SuiteReport report = run_suite(suite, sc);
    emit(cfg, report.to_json(sc).dump(2) + "\n");
    for (const CheckResult& c : report.checks)
      if (!c.pass) std::cerr << "FAIL " << c.name << "\n";
    return report.pass() ? 0 : kExitFail;
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return kExitBudget;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
