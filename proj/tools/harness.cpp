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

#include "harness.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <utility>

#include <json.hpp>

#include "ksc/format.hpp"
#include "ksc/revenue.hpp"
#include "ksc/rng.hpp"

namespace ksc::tools {
namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& field, const std::string& what) {
  throw ConfigError("config." + field + ": " + what);
}

void require_keys(const json& obj, const std::string& where,
                  std::initializer_list<const char*> allowed) {
  for (const auto& item : obj.items()) {
    bool known = false;
    for (const char* key : allowed) {
      if (item.key() == key) {
        known = true;
        break;
      }
    }
    if (!known) {
      const std::string path = where.empty() ? item.key() : where + "." + item.key();
      fail(path, "unknown key");
    }
  }
}

template <typename T>
T get_as(const json& obj, const std::string& where, const char* key, T fallback) {
  if (!obj.contains(key)) return fallback;
  try {
    return obj.at(key).get<T>();
  } catch (const json::exception&) {
    const std::string path = where.empty() ? key : where + "." + key;
    fail(path, "wrong type");
  }
}

DatasetSpec parse_dataset(const json& obj) {
  require_keys(obj, "dataset",
               {"source", "n", "p", "path", "weight_dist", "k", "alpha_low",
                "alpha_high", "seed"});
  DatasetSpec spec;
  const std::string source = get_as<std::string>(obj, "dataset", "source", "er");
  if (source == "er") {
    spec.source = DatasetSpec::Source::er;
  } else if (source == "edge_list") {
    spec.source = DatasetSpec::Source::edge_list;
  } else if (source == "dump") {
    spec.source = DatasetSpec::Source::dump;
  } else {
    fail("dataset.source", "expected one of er, edge_list, dump");
  }
  spec.n = get_as<int>(obj, "dataset", "n", spec.n);
  spec.p = get_as<double>(obj, "dataset", "p", spec.p);
  spec.path = get_as<std::string>(obj, "dataset", "path", spec.path);
  const std::string dist = get_as<std::string>(
      obj, "dataset", "weight_dist", to_string(spec.weight_dist));
  try {
    spec.weight_dist = weight_dist_from_string(dist);
  } catch (const std::invalid_argument&) {
    fail("dataset.weight_dist", "expected unit or uniform01");
  }
  spec.k = get_as<int>(obj, "dataset", "k", spec.k);
  spec.alpha_low = get_as<double>(obj, "dataset", "alpha_low", spec.alpha_low);
  spec.alpha_high = get_as<double>(obj, "dataset", "alpha_high", spec.alpha_high);
  spec.seed = get_as<std::uint64_t>(obj, "dataset", "seed", spec.seed);
  return spec;
}

void parse_flags(const json& obj, ExperimentConfig& cfg) {
  require_keys(obj, "flags",
               {"stop_at_cap", "force_exhaustive", "select", "full_sweep",
                "sgopt_v"});
  cfg.solver.stop_at_cap =
      get_as<bool>(obj, "flags", "stop_at_cap", cfg.solver.stop_at_cap);
  cfg.solver.force_exhaustive = get_as<bool>(obj, "flags", "force_exhaustive",
                                             cfg.solver.force_exhaustive);
  cfg.solver.full_sweep =
      get_as<bool>(obj, "flags", "full_sweep", cfg.solver.full_sweep);
  const std::string select = get_as<std::string>(obj, "flags", "select", "prose");
  if (select == "prose") {
    cfg.solver.selection = SelectionRule::prose;
  } else if (select == "pseudocode") {
    cfg.solver.selection = SelectionRule::pseudocode;
  } else {
    fail("flags.select", "expected prose or pseudocode");
  }
  if (obj.contains("sgopt_v")) {
    cfg.sgopt_v = get_as<int>(obj, "flags", "sgopt_v", 0);
  }
}

double median(std::vector<double> values) {
  std::sort(values.begin(), values.end());
  const std::size_t m = values.size();
  if (m == 0) return 0.0;
  if (m % 2 == 1) return values[m / 2];
  return 0.5 * (values[m / 2 - 1] + values[m / 2]);
}

}  // namespace

ExperimentConfig parse_config(const std::string& json_text) {
  json root;
  try {
    root = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config: invalid JSON: ") + e.what());
  }
  if (!root.is_object()) throw ConfigError("config: top level must be an object");
  require_keys(root, "",
               {"dataset", "algorithms", "thresholds", "threshold_fractions",
                "reference_budget", "epsilon", "delta", "seed", "trials",
                "flags"});

  ExperimentConfig cfg;
  if (root.contains("dataset")) {
    if (!root.at("dataset").is_object()) fail("dataset", "must be an object");
    cfg.dataset = parse_dataset(root.at("dataset"));
  }
  cfg.algorithms =
      get_as<std::vector<std::string>>(root, "", "algorithms", {"fastsg"});
  cfg.thresholds = get_as<std::vector<double>>(root, "", "thresholds", {});
  cfg.threshold_fractions =
      get_as<std::vector<double>>(root, "", "threshold_fractions", {});
  cfg.reference_budget =
      get_as<int>(root, "", "reference_budget", cfg.reference_budget);
  cfg.epsilon = get_as<double>(root, "", "epsilon", cfg.epsilon);
  cfg.delta = get_as<double>(root, "", "delta", cfg.delta);
  cfg.seed = get_as<std::uint64_t>(root, "", "seed", cfg.seed);
  cfg.trials = get_as<int>(root, "", "trials", cfg.trials);
  if (root.contains("flags")) {
    if (!root.at("flags").is_object()) fail("flags", "must be an object");
    parse_flags(root.at("flags"), cfg);
  }
  return cfg;
}

ExperimentConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config: cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

void validate_config(const ExperimentConfig& cfg) {
  const DatasetSpec& ds = cfg.dataset;
  if (ds.source == DatasetSpec::Source::er) {
    if (ds.n < 1) fail("dataset.n", "must be >= 1");
    if (!(ds.p > 0.0 && ds.p <= 1.0)) fail("dataset.p", "must lie in (0, 1]");
  } else if (ds.path.empty()) {
    fail("dataset.path", "required for edge_list and dump sources");
  }
  if (ds.k < 2) fail("dataset.k", "must be >= 2");
  if (!(ds.alpha_low > 0.0 && ds.alpha_low < ds.alpha_high && ds.alpha_high < 1.0))
    fail("dataset.alpha_low/alpha_high", "need 0 < low < high < 1");

  if (cfg.algorithms.empty()) fail("algorithms", "must list at least one");
  bool wants_sgopt = false;
  for (const std::string& name : cfg.algorithms) {
    if (name == "sgopt") {
      wants_sgopt = true;
    } else if (name != "fastsg" && name != "greedy") {
      fail("algorithms", "unknown algorithm '" + name +
                             "' (expected fastsg, greedy, or sgopt)");
    }
  }
  if (wants_sgopt && !cfg.sgopt_v)
    fail("flags.sgopt_v", "required when algorithms include sgopt");
  if (cfg.sgopt_v && *cfg.sgopt_v < 1) fail("flags.sgopt_v", "must be >= 1");

  const bool has_abs = !cfg.thresholds.empty();
  const bool has_frac = !cfg.threshold_fractions.empty();
  if (has_abs == has_frac)
    fail("thresholds", "provide exactly one of thresholds / threshold_fractions");
  for (double t : cfg.thresholds)
    if (!(t > 0.0)) fail("thresholds", "values must be > 0");
  for (double fr : cfg.threshold_fractions)
    if (!(fr > 0.0)) fail("threshold_fractions", "values must be > 0");
  if (cfg.reference_budget != -1 && cfg.reference_budget < 1)
    fail("reference_budget", "must be >= 1 (or -1 for n)");

  if (!(cfg.epsilon > 0.0 && cfg.epsilon < 0.5))
    fail("epsilon", "must lie in (0, 0.5)");
  if (!(cfg.delta > 0.0 && cfg.delta < 1.0)) fail("delta", "must lie in (0, 1)");
  if (cfg.trials < 1) fail("trials", "must be >= 1");
}

std::string flags_string(const RunRecord& rec, const SolverOptions& opts) {
  std::string out = "select=";
  out += opts.selection == SelectionRule::prose ? "prose" : "pseudocode";
  if (opts.stop_at_cap) out += ";stop_at_cap";
  if (opts.force_exhaustive) out += ";force_exhaustive";
  if (opts.full_sweep) out += ";full_sweep";
  if (rec.v >= 0) out += ";v=" + std::to_string(rec.v);
  if (rec.threshold_not_reached) out += ";threshold_not_reached";
  return out;
}

namespace {

RunRecord run_cell(const Instance& inst, const std::string& algorithm,
                   const ExperimentConfig& cfg, RngStream rng) {
  if (algorithm == "greedy") {
    RunRecord rec = greedy_cover(inst);
    rec.seed = rng.seed();  // greedy is deterministic; echo the cell seed anyway
    return rec;
  }
  if (algorithm == "sgopt")
    return sgopt(inst, *cfg.sgopt_v, cfg.epsilon, cfg.delta, rng, cfg.solver);
  return fastsg(inst, cfg.epsilon, cfg.delta, rng, cfg.solver);
}

void write_row(std::ostream& out, const RunRecord& rec,
               const ExperimentConfig& cfg, const std::string& dataset_label,
               int n, int k, double threshold, int trial) {
  out << rec.algorithm << ',' << dataset_label << ',' << n << ',' << k << ','
      << format_double(threshold) << ',' << format_double(cfg.epsilon) << ','
      << format_double(cfg.delta) << ',' << trial << ',' << rec.seed << ','
      << format_double(rec.f_value) << ',' << rec.support_size << ','
      << rec.queries << ',' << format_double(rec.wall_ms) << ','
      << flags_string(rec, cfg.solver) << '\n';
}

}  // namespace

RunOutcome run_experiment(const ExperimentConfig& cfg, std::ostream& csv_out,
                          std::ostream& log) {
  validate_config(cfg);
  const InstanceData data = build_instance_data(cfg.dataset);
  const RevenueOracle oracle(data.graph, data.alpha);
  const int n = oracle.n();
  const int k = oracle.k();

  std::vector<double> thresholds = cfg.thresholds;
  if (thresholds.empty()) {
    int budget = cfg.reference_budget == -1 ? n : cfg.reference_budget;
    if (budget > n) {
      log << "note: reference_budget " << budget << " clamped to n=" << n << "\n";
      budget = n;
    }
    const std::vector<double> profile = greedy_max_profile(oracle, n, k, budget);
    const double reference = profile[static_cast<std::size_t>(budget)];
    if (!(reference > 0.0))
      throw ConfigError(
          "config.threshold_fractions: greedy reference value is 0; "
          "the instance has no positive-value assignment");
    for (double fr : cfg.threshold_fractions) thresholds.push_back(fr * reference);
    log << "note: resolved fractions against greedy reference f="
        << format_double(reference) << " at budget " << budget << "\n";
  }

  const std::string label = data.spec.label();
  RunOutcome outcome;
  csv_out << kCsvHeader << '\n';

  struct CellStats {
    std::vector<double> f, supp, queries;
  };
  std::vector<std::pair<std::string, CellStats>> summary;

  RngStream root(cfg.seed);
  for (std::size_t ti = 0; ti < thresholds.size(); ++ti) {
    const double threshold = thresholds[ti];
    const Instance inst{n, k, &oracle, threshold};
    RngStream per_threshold = root.child(static_cast<std::uint64_t>(ti));
    for (std::size_t ai = 0; ai < cfg.algorithms.size(); ++ai) {
      const std::string& algorithm = cfg.algorithms[ai];
      RngStream per_alg = per_threshold.child(static_cast<std::uint64_t>(ai));
      CellStats stats;
      for (int trial = 0; trial < cfg.trials; ++trial) {
        RngStream cell = per_alg.child(static_cast<std::uint64_t>(trial));
        const RunRecord rec = run_cell(inst, algorithm, cfg, cell);
        write_row(csv_out, rec, cfg, label, n, k, threshold, trial);
        outcome.rows += 1;
        outcome.any_threshold_not_reached |= rec.threshold_not_reached;
        stats.f.push_back(rec.f_value);
        stats.supp.push_back(static_cast<double>(rec.support_size));
        stats.queries.push_back(static_cast<double>(rec.queries));
      }
      std::ostringstream key;
      key << algorithm << " T=" << format_double(threshold);
      summary.emplace_back(key.str(), std::move(stats));
    }
  }

  log << "dataset: " << label << " (n=" << n << ", k=" << k << ")\n";
  log << std::left << std::setw(28) << "cell" << std::right << std::setw(14)
      << "median_f" << std::setw(14) << "median_supp" << std::setw(16)
      << "median_queries" << "\n";
  for (const auto& [key, stats] : summary) {
    log << std::left << std::setw(28) << key << std::right << std::setw(14)
        << format_double(median(stats.f)) << std::setw(14)
        << format_double(median(stats.supp)) << std::setw(16)
        << format_double(median(stats.queries)) << "\n";
  }
  return outcome;
}

void run_calibrate(const ExperimentConfig& cfg, const std::vector<int>& budgets,
                   std::ostream& out, std::ostream& log) {
  if (budgets.empty()) throw ConfigError("calibrate: need at least one budget");
  const InstanceData data = build_instance_data(cfg.dataset);
  const RevenueOracle oracle(data.graph, data.alpha);
  const int n = oracle.n();
  int max_budget = 0;
  for (int b : budgets) {
    if (b < 0) throw ConfigError("calibrate: budgets must be >= 0");
    if (b > n) log << "note: budget " << b << " clamped to n=" << n << "\n";
    max_budget = std::max(max_budget, std::min(b, n));
  }
  const std::vector<double> profile =
      greedy_max_profile(oracle, n, oracle.k(), max_budget);
  out << "budget,f_value\n";
  for (int b : budgets) {
    const int clamped = std::min(b, n);
    out << b << ',' << format_double(profile[static_cast<std::size_t>(clamped)])
        << '\n';
  }
}

}  // namespace ksc::tools
