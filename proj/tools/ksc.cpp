// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//
// ksc - k-submodular cover toolkit command line.
//
//   ksc run       run configured solver cells, emit a CSV of records
//   ksc calibrate greedy maximization values at support budgets
//   ksc verify    property-check an oracle (k-submodularity & friends)
//   ksc brute     exact minimum-support cover on a small instance
//   ksc gen-data  materialize a dataset into a reloadable dump file
//
// Exit codes: 0 success; 1 completed-but-degraded (a run record was flagged
// threshold_not_reached, a property check found violations, or brute found
// the threshold infeasible); 2 usage, config, or runtime errors.

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "harness.hpp"
#include "ksc/algorithms.hpp"
#include "ksc/coverage.hpp"
#include "ksc/dataset.hpp"
#include "ksc/format.hpp"
#include "ksc/oracle.hpp"
#include "ksc/revenue.hpp"
#include "ksc/rng.hpp"
#include "ksc/verify.hpp"

namespace {

using ksc::tools::ConfigError;

// Binds `path` to a stream: "-" (or empty) means stdout, anything else a
// fresh file. The ofstream member keeps the file alive for the caller.
struct OutputTarget {
  explicit OutputTarget(const std::string& path) {
    if (path.empty() || path == "-") {
      stream = &std::cout;
      return;
    }
    file.open(path);
    if (!file) throw ConfigError("cannot open output file " + path);
    stream = &file;
  }
  std::ofstream file;
  std::ostream* stream = nullptr;
};

struct RunCli {
  std::string config_path;
  std::string output = "-";
  std::optional<int> trials;
  std::optional<std::uint64_t> seed;
  std::optional<double> epsilon;
  std::optional<double> delta;
  std::optional<std::string> select;
  std::optional<int> sgopt_v;
  bool stop_at_cap = false;
  bool full_sweep = false;
  bool force_exhaustive = false;
};

int do_run(const RunCli& cli) {
  ksc::tools::ExperimentConfig cfg = ksc::tools::load_config(cli.config_path);
  if (cli.trials) cfg.trials = *cli.trials;
  if (cli.seed) cfg.seed = *cli.seed;
  if (cli.epsilon) cfg.epsilon = *cli.epsilon;
  if (cli.delta) cfg.delta = *cli.delta;
  if (cli.sgopt_v) cfg.sgopt_v = *cli.sgopt_v;
  if (cli.select) {
    if (*cli.select == "prose") {
      cfg.solver.selection = ksc::SelectionRule::prose;
    } else if (*cli.select == "pseudocode") {
      cfg.solver.selection = ksc::SelectionRule::pseudocode;
    } else {
      throw ConfigError("--select: expected prose or pseudocode");
    }
  }
  if (cli.stop_at_cap) cfg.solver.stop_at_cap = true;
  if (cli.full_sweep) cfg.solver.full_sweep = true;
  if (cli.force_exhaustive) cfg.solver.force_exhaustive = true;

  OutputTarget out(cli.output);
  const ksc::tools::RunOutcome outcome =
      ksc::tools::run_experiment(cfg, *out.stream, std::cerr);
  out.stream->flush();
  return outcome.any_threshold_not_reached ? 1 : 0;
}

struct CalibrateCli {
  std::string config_path;
  std::string output = "-";
  std::vector<int> budgets;
};

int do_calibrate(const CalibrateCli& cli) {
  const ksc::tools::ExperimentConfig cfg =
      ksc::tools::load_config(cli.config_path);
  OutputTarget out(cli.output);
  ksc::tools::run_calibrate(cfg, cli.budgets, *out.stream, std::cerr);
  out.stream->flush();
  return 0;
}

struct VerifyCli {
  std::string oracle = "revenue";
  std::string config_path;
  int n = 4;
  int k = 2;
  std::string mode = "auto";
  long long budget = 2000;
  std::uint64_t seed = 1;
  std::vector<std::string> checks;
  bool allow_large = false;
  std::string records;
};

long long state_count(int n, int k) {
  long long total = 1;
  for (int e = 0; e < n; ++e) {
    if (total > (1LL << 40)) return 1LL << 40;
    total *= k + 1;
  }
  return total;
}

// Builds the oracle under test plus whatever data it must outlive.
struct OracleUnderTest {
  std::optional<ksc::InstanceData> data;
  std::unique_ptr<ksc::ValueOracle> owned;
  const ksc::ValueOracle* oracle = nullptr;
  int n = 0;
  int k = 0;
};

OracleUnderTest make_oracle(const VerifyCli& cli) {
  OracleUnderTest out;
  if (cli.oracle == "revenue") {
    ksc::DatasetSpec spec;
    if (!cli.config_path.empty()) {
      spec = ksc::tools::load_config(cli.config_path).dataset;
    } else {
      spec.source = ksc::DatasetSpec::Source::er;
      spec.n = cli.n;
      spec.p = 0.6;  // dense enough that small instances have edges
      spec.k = cli.k;
      spec.seed = cli.seed;
    }
    out.data = ksc::build_instance_data(spec);
    out.owned = std::make_unique<ksc::RevenueOracle>(out.data->graph,
                                                     out.data->alpha);
    out.n = out.data->graph.n();
    out.k = out.data->alpha.k();
  } else if (cli.oracle == "coverage") {
    ksc::RngStream rng(cli.seed);
    out.owned = std::make_unique<ksc::SumCoverageOracle>(
        ksc::SumCoverageOracle::random(cli.n, cli.k, 2 * cli.n, 0.3, rng));
    out.n = cli.n;
    out.k = cli.k;
  } else if (cli.oracle == "modular") {
    out.owned = std::make_unique<ksc::SumCoverageOracle>(
        ksc::SumCoverageOracle::modular(cli.n, cli.k));
    out.n = cli.n;
    out.k = cli.k;
  } else if (cli.oracle == "support-squared") {
    out.owned = std::make_unique<ksc::SupportSquaredOracle>(cli.n, cli.k);
    out.n = cli.n;
    out.k = cli.k;
  } else {
    throw ConfigError(
        "--oracle: expected revenue, coverage, modular, or support-squared");
  }
  out.oracle = out.owned.get();
  return out;
}

int do_verify(const VerifyCli& cli) {
  const OracleUnderTest target = make_oracle(cli);

  ksc::CheckMode mode;
  if (cli.mode == "exhaustive") {
    mode = ksc::CheckMode::exhaustive;
  } else if (cli.mode == "randomized") {
    mode = ksc::CheckMode::randomized;
  } else if (cli.mode == "auto") {
    mode = state_count(target.n, target.k) <= ksc::kExhaustiveGuard
               ? ksc::CheckMode::exhaustive
               : ksc::CheckMode::randomized;
  } else {
    throw ConfigError("--mode: expected auto, exhaustive, or randomized");
  }

  std::vector<std::string> checks = cli.checks;
  if (checks.empty())
    checks = {"ksubmodular", "orthant", "pairwise", "monotone", "normalized"};

  ksc::RngStream rng(cli.seed);
  std::vector<ksc::PropertyReport> reports;
  for (const std::string& name : checks) {
    ksc::RngStream check_rng = rng.child(reports.size());
    if (name == "ksubmodular") {
      reports.push_back(ksc::check_ksubmodular(*target.oracle, target.n,
                                               target.k, mode, cli.budget,
                                               check_rng, cli.allow_large));
    } else if (name == "orthant") {
      reports.push_back(ksc::check_orthant_submodular(
          *target.oracle, target.n, target.k, mode, cli.budget, check_rng,
          cli.allow_large));
    } else if (name == "pairwise") {
      reports.push_back(ksc::check_pairwise_monotone(*target.oracle, target.n,
                                                     target.k, mode,
                                                     cli.budget, check_rng,
                                                     cli.allow_large));
    } else if (name == "monotone") {
      reports.push_back(ksc::check_monotone(*target.oracle, target.n, target.k,
                                            mode, cli.budget, check_rng,
                                            cli.allow_large));
    } else if (name == "normalized") {
      reports.push_back(ksc::check_normalized(*target.oracle, target.n,
                                              target.k));
    } else {
      throw ConfigError("--checks: unknown check '" + name +
                        "' (expected ksubmodular, orthant, pairwise, "
                        "monotone, normalized)");
    }
  }

  // With --records -, the JSONL stream owns stdout and the table moves to
  // stderr so machine consumers see clean records.
  if (!cli.records.empty()) {
    OutputTarget rec_out(cli.records);
    *rec_out.stream << ksc::render_report_jsonl(reports);
    rec_out.stream->flush();
    (cli.records == "-" ? std::cerr : std::cout)
        << ksc::render_report_table(reports);
  } else {
    std::cout << ksc::render_report_table(reports);
  }

  for (const ksc::PropertyReport& report : reports)
    if (!report.passed()) return 1;
  return 0;
}

struct BruteCli {
  std::string config_path;
  double threshold = 0.0;
  int limit_n = 10;
  double cap = 1e7;
};

int do_brute(const BruteCli& cli) {
  const ksc::tools::ExperimentConfig cfg =
      ksc::tools::load_config(cli.config_path);
  const ksc::InstanceData data = ksc::build_instance_data(cfg.dataset);
  const ksc::RevenueOracle oracle(data.graph, data.alpha);
  const ksc::Instance inst{oracle.n(), oracle.k(), &oracle, cli.threshold};
  const ksc::BruteResult result =
      ksc::brute_force_opt(inst, cli.limit_n, cli.cap);

  std::cout << "dataset: " << data.spec.label() << "\n"
            << "threshold: " << ksc::format_double(cli.threshold) << "\n"
            << "enumerated: " << result.enumerated << "\n"
            << "queries: " << oracle.query_count() << "\n";
  if (result.feasible) {
    std::cout << "feasible: yes\n"
              << "opt_support: " << result.opt << "\n"
              << "solution: " << result.solution->to_string() << "\n"
              << "f_value: "
              << ksc::format_double(oracle.peek(*result.solution)) << "\n";
    return 0;
  }
  std::cout << "feasible: no\n";
  return 1;
}

struct GenDataCli {
  std::string config_path;
  std::string output;
};

int do_gen_data(const GenDataCli& cli) {
  const ksc::tools::ExperimentConfig cfg =
      ksc::tools::load_config(cli.config_path);
  const ksc::InstanceData data = ksc::build_instance_data(cfg.dataset);
  ksc::write_instance_dump(cli.output, data);
  std::cerr << "wrote " << cli.output << ": " << data.spec.label()
            << " (n=" << data.graph.n() << ", edges=" << data.graph.edge_count()
            << ", k=" << data.alpha.k() << ")\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"k-submodular cover toolkit"};
  app.require_subcommand(1);

  RunCli run_cli;
  CLI::App* run = app.add_subcommand("run", "run solver cells, emit CSV");
  run->add_option("-c,--config", run_cli.config_path, "experiment config JSON")
      ->required();
  run->add_option("-o,--output", run_cli.output, "CSV path ('-' = stdout)");
  run->add_option("--trials", run_cli.trials, "override trials");
  run->add_option("--seed", run_cli.seed, "override master seed");
  run->add_option("--epsilon", run_cli.epsilon, "override epsilon");
  run->add_option("--delta", run_cli.delta, "override delta");
  run->add_option("--select", run_cli.select,
                  "candidate selection rule (prose|pseudocode)");
  run->add_option("--sgopt-v", run_cli.sgopt_v, "support guess for sgopt rows");
  run->add_flag("--stop-at-cap", run_cli.stop_at_cap,
                "stop sgopt iterations once the cap T/2 is reached");
  run->add_flag("--full-sweep", run_cli.full_sweep,
                "disable the fastsg sweep early exit");
  run->add_flag("--force-exhaustive", run_cli.force_exhaustive,
                "sample the whole pool every iteration");

  CalibrateCli cal_cli;
  CLI::App* cal =
      app.add_subcommand("calibrate", "greedy value profile at budgets");
  cal->add_option("-c,--config", cal_cli.config_path, "experiment config JSON")
      ->required();
  cal->add_option("-o,--output", cal_cli.output, "CSV path ('-' = stdout)");
  cal->add_option("--budgets", cal_cli.budgets, "support budgets")
      ->required()
      ->delimiter(',');

  VerifyCli ver_cli;
  CLI::App* ver = app.add_subcommand("verify", "property-check an oracle");
  ver->add_option("--oracle", ver_cli.oracle,
                  "revenue|coverage|modular|support-squared");
  ver->add_option("-c,--config", ver_cli.config_path,
                  "build the revenue oracle from this config's dataset");
  ver->add_option("-n", ver_cli.n, "ground set size for synthetic oracles");
  ver->add_option("-k", ver_cli.k, "positions for synthetic oracles");
  ver->add_option("--mode", ver_cli.mode, "auto|exhaustive|randomized");
  ver->add_option("--budget", ver_cli.budget, "randomized cases per check");
  ver->add_option("--seed", ver_cli.seed, "check RNG seed");
  ver->add_option("--checks", ver_cli.checks,
                  "subset of ksubmodular,orthant,pairwise,monotone,normalized")
      ->delimiter(',');
  ver->add_flag("--allow-large", ver_cli.allow_large,
                "lift the exhaustive enumeration guard");
  ver->add_option("--records", ver_cli.records,
                  "write JSONL reports here ('-' = stdout)");

  BruteCli brute_cli;
  CLI::App* brute = app.add_subcommand("brute", "exact cover via enumeration");
  brute->add_option("-c,--config", brute_cli.config_path,
                    "experiment config JSON")
      ->required();
  brute->add_option("-T,--threshold", brute_cli.threshold, "cover threshold")
      ->required();
  brute->add_option("--limit-n", brute_cli.limit_n, "refuse n above this");
  brute->add_option("--cap", brute_cli.cap, "refuse (k+1)^n above this");

  GenDataCli gen_cli;
  CLI::App* gen = app.add_subcommand("gen-data", "write an instance dump");
  gen->add_option("-c,--config", gen_cli.config_path, "experiment config JSON")
      ->required();
  gen->add_option("-o,--output", gen_cli.output, "dump file path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (run->parsed()) return do_run(run_cli);
    if (cal->parsed()) return do_calibrate(cal_cli);
    if (ver->parsed()) return do_verify(ver_cli);
    if (brute->parsed()) return do_brute(brute_cli);
    if (gen->parsed()) return do_gen_data(gen_cli);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;  // unreachable with require_subcommand(1)
}
