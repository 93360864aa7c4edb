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

#ifndef KSC_ALGORITHMS_HPP_
#define KSC_ALGORITHMS_HPP_

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ksc/kset.hpp"
#include "ksc/oracle.hpp"
#include "ksc/rng.hpp"

namespace ksc {

// A k-submodular cover instance: find a minimum-support k-set x with
// f(x) >= threshold. The oracle is non-owning; keeping threshold <= max f is
// the caller's responsibility (runs on unreachable thresholds return
// best-effort solutions flagged threshold_not_reached).
struct Instance {
  int n = 0;
  int k = 0;
  const ValueOracle* oracle = nullptr;
  double threshold = 0.0;
};

// Which rule picks the returned candidate among a fastsg sweep's per-guess
// solutions.
enum class SelectionRule {
  // Minimum support among candidates whose truncated value reaches
  // (1 - delta) * T/2; ties by larger truncated value, then smaller guess.
  // Falls back to the maximum-value candidate (flagged) when none qualifies.
  prose,
  // Maximum truncated value among candidates with support <=
  // ceil(v * ln(1/eps)) for their own guess v; same fallback.
  pseudocode,
};

struct SolverOptions {
  // Stop an sgopt run as soon as the truncated value reaches the cap T/2,
  // instead of running all iterations (off by default: the pinned behavior
  // inserts on every iteration, zero-gain insertions included).
  bool stop_at_cap = false;
  // Force Upsilon = |remaining| in every iteration (exhaustive sampling);
  // turns sgopt into deterministic greedy selection over the full pool.
  bool force_exhaustive = false;
  SelectionRule selection = SelectionRule::prose;
  // Run every guess in the grid even when later guesses provably cannot be
  // selected. Early exit is only ever applied under the prose rule without
  // stop_at_cap, where skipped children cannot change the selection.
  bool full_sweep = false;
};

// The outcome of one solver run. f_value is the raw oracle value of the
// solution (obtained via peek, so it does not disturb query accounting);
// f_truncated is the algorithm's own capped view min(f, T/2).
struct RunRecord {
  std::string algorithm;
  KSet solution;
  double f_value = 0.0;
  double f_truncated = 0.0;
  int support_size = 0;
  long long queries = 0;
  double wall_ms = 0.0;
  std::uint64_t seed = 0;
  double epsilon = std::numeric_limits<double>::quiet_NaN();
  double delta = std::numeric_limits<double>::quiet_NaN();
  // The guess v (sgopt) or the selected guess (fastsg); -1 when not
  // applicable (greedy).
  int v = -1;
  bool threshold_not_reached = false;
};

// Per-iteration record of an sgopt run, for instrumented tests.
struct SgoptIterationTrace {
  int j = 0;        // 1-based iteration index
  int upsilon = 0;  // sample size used this iteration
  std::vector<ElementId> sampled;  // R^j, ascending
  ElementId inserted_element = -1;
  Position inserted_position = 0;
  double gain = 0.0;         // truncated gain of the insertion
  double value_after = 0.0;  // truncated value after the insertion
};

struct SgoptTrace {
  std::vector<SgoptIterationTrace> iterations;
  std::vector<std::pair<ElementId, Position>> trajectory() const;
};

struct GreedyTrace {
  std::vector<std::pair<ElementId, Position>> trajectory;
};

struct FastsgTrace {
  std::vector<int> grid;
  std::vector<RunRecord> children;  // one per guess actually run, sweep order
  int selected_child = -1;
  bool early_exit = false;
};

// Lemma-style sample size for iteration j (1-based) of a run with guess v:
//   Upsilon = min(remaining, ceil(((n-j+1)/(v-j+1)) * ln(n/delta)))
// when v-j+1 >= 1, and Upsilon = remaining otherwise (exhaustive tail).
// Always 0 <= Upsilon <= remaining. Natural log.
int sample_size(int n, int v, int j, double delta, int remaining);

// Number of sgopt iterations for guess v: ceil((v/2) * ln(1/delta)) + 1
// (the pseudocode loop runs j = 0..ceil((v/2) ln(1/delta)) inclusive).
int iteration_limit(int v, double delta);

// The geometric guess grid { min(n, ceil((1+eps)^i)) : (1+eps)^i <= n },
// deduplicated ascending, with n appended when absent.
std::vector<int> guess_grid(int n, double eps);

// Stochastic greedy subroutine for a fixed support guess v (1 <= v <= n).
// Runs iteration_limit(v, delta) iterations on the truncated oracle
// min(f, T/2); each iteration samples R^j of size sample_size(...) uniformly
// without replacement from the unassigned pool and inserts the
// tie-broken argmax of the truncated marginal gain over e in R^j, i in [k] —
// unconditionally, zero-gain insertions included. Terminates early only when
// the pool empties (or, with options.stop_at_cap, once the cap is reached).
// Queries consumed: exactly sum_j k * Upsilon_j.
RunRecord sgopt(const Instance& inst, int v, double epsilon, double delta,
                RngStream& rng, const SolverOptions& options = {},
                SgoptTrace* trace = nullptr);

// Full algorithm: sweeps sgopt over guess_grid(n, eps) ascending, each guess
// with the child stream rng.child(v), then picks one candidate per
// options.selection. Total queries = sum over the sgopt calls performed.
RunRecord fastsg(const Instance& inst, double epsilon, double delta,
                 RngStream& rng, const SolverOptions& options = {},
                 FastsgTrace* trace = nullptr);

// Deterministic greedy baseline on the truncated oracle: repeatedly inserts
// the global argmax of the truncated marginal gain over all unassigned
// elements and positions; stops once the truncated value reaches T/2, no
// strictly positive gain remains, or the ground set is exhausted. Each
// iteration costs k * |unassigned| queries.
RunRecord greedy_cover(const Instance& inst, GreedyTrace* trace = nullptr);

// Untruncated greedy maximization profile: profile[b] = greedy f value at
// support size b, for b = 0..max_budget (padded with the final value once
// the ground set is exhausted). The calibration backend for threshold grids.
std::vector<double> greedy_max_profile(const ValueOracle& oracle, int n,
                                       int k, int max_budget);

struct BruteResult {
  bool feasible = false;
  int opt = -1;  // -1 when no k-set reaches the threshold
  std::optional<KSet> solution;
  long long enumerated = 0;  // k-sets visited
};

// Exact minimum-support cover by enumerating all (k+1)^n k-sets against the
// *raw* oracle (f(x) >= threshold). Ties broken by lexicographically
// smallest pair list. Guarded: refuses n > limit_n or (k+1)^n >
// enumeration_cap.
BruteResult brute_force_opt(const Instance& inst, int limit_n = 10,
                            double enumeration_cap = 1e7);

}  // namespace ksc

#endif  // KSC_ALGORITHMS_HPP_
