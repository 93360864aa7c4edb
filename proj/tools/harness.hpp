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

#ifndef KSC_TOOLS_HARNESS_HPP_
#define KSC_TOOLS_HARNESS_HPP_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ksc/algorithms.hpp"
#include "ksc/dataset.hpp"

namespace ksc::tools {

// A config or CLI problem; the message names the failing field.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ExperimentConfig {
  DatasetSpec dataset;
  std::vector<std::string> algorithms;  // fastsg | greedy | sgopt
  // Exactly one of thresholds / threshold_fractions is non-empty; fractions
  // are resolved against the greedy max-profile value at reference_budget
  // (default n).
  std::vector<double> thresholds;
  std::vector<double> threshold_fractions;
  int reference_budget = -1;
  double epsilon = 0.1;
  double delta = 0.1;
  std::uint64_t seed = 0;
  int trials = 1;
  SolverOptions solver;
  std::optional<int> sgopt_v;  // required when "sgopt" is listed
};

ExperimentConfig parse_config(const std::string& json_text);
ExperimentConfig load_config(const std::string& path);
void validate_config(const ExperimentConfig& cfg);

inline constexpr char kCsvHeader[] =
    "algorithm,dataset,n,k,T,epsilon,delta,trial,seed,f_value,support_size,"
    "queries,wall_ms,flags";

// The semicolon-joined flags field of a CSV row (never contains commas).
std::string flags_string(const RunRecord& rec, const SolverOptions& opts);

struct RunOutcome {
  int rows = 0;
  bool any_threshold_not_reached = false;
};

// Builds the dataset once, resolves the threshold grid, and runs every
// (threshold, algorithm, trial) cell in config order with a seed derived
// from (seed, threshold index, algorithm index, trial). CSV goes to csv_out
// (header + one row per cell, deterministic modulo the wall_ms column); a
// human summary goes to log.
RunOutcome run_experiment(const ExperimentConfig& cfg, std::ostream& csv_out,
                          std::ostream& log);

// Greedy maximization values at the requested budgets ("budget,f_value" CSV).
// Budgets beyond n are clamped with a warning on log.
void run_calibrate(const ExperimentConfig& cfg, const std::vector<int>& budgets,
                   std::ostream& out, std::ostream& log);

}  // namespace ksc::tools

#endif  // KSC_TOOLS_HARNESS_HPP_
