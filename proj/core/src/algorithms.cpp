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

#include "ksc/algorithms.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <stdexcept>
#include <string>

namespace ksc {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start)
      .count();
}

void validate_instance(const Instance& inst) {
  if (inst.oracle == nullptr) {
    throw std::invalid_argument("instance has no oracle");
  }
  if (inst.n < 1) throw std::invalid_argument("instance requires n >= 1");
  if (inst.k < 2) throw std::invalid_argument("instance requires k >= 2");
}

void validate_delta(double delta) {
  if (!(delta > 0.0 && delta < 1.0)) {
    throw std::invalid_argument("delta must lie in (0,1), got " +
                                std::to_string(delta));
  }
}

void validate_epsilon(double epsilon) {
  if (!(epsilon > 0.0 && epsilon < 0.5)) {
    throw std::invalid_argument("epsilon must lie in (0,1/2), got " +
                                std::to_string(epsilon));
  }
}

struct Selected {
  ElementId e = -1;
  Position i = 0;
  double gain = -std::numeric_limits<double>::infinity();
};

// Tie-broken argmax of ev.gain over (e in candidates, i in 1..k): candidates
// must be ascending; strict improvement keeps the smallest element id, then
// the smallest position. Charges exactly k * |candidates| queries.
Selected select_best(GainEvaluator& ev, const std::vector<ElementId>& candidates,
                     int k) {
  Selected best;
  for (ElementId e : candidates) {
    for (Position i = 1; i <= k; ++i) {
      double g = ev.gain(e, i);
      if (g > best.gain) best = Selected{e, i, g};
    }
  }
  return best;
}

}  // namespace

std::vector<std::pair<ElementId, Position>> SgoptTrace::trajectory() const {
  std::vector<std::pair<ElementId, Position>> out;
  out.reserve(iterations.size());
  for (const auto& it : iterations) {
    out.emplace_back(it.inserted_element, it.inserted_position);
  }
  return out;
}

int sample_size(int n, int v, int j, double delta, int remaining) {
  if (n < 1) throw std::invalid_argument("sample_size requires n >= 1");
  if (v < 1 || v > n) {
    throw std::invalid_argument("sample_size requires 1 <= v <= n");
  }
  if (j < 1) throw std::invalid_argument("sample_size requires j >= 1");
  validate_delta(delta);
  if (remaining < 0) {
    throw std::invalid_argument("sample_size requires remaining >= 0");
  }
  if (remaining == 0) return 0;
  if (v - j + 1 < 1) return remaining;  // exhaustive tail
  const double raw = (static_cast<double>(n - j + 1) /
                      static_cast<double>(v - j + 1)) *
                     std::log(static_cast<double>(n) / delta);
  const auto size = static_cast<long long>(std::ceil(raw));
  return static_cast<int>(std::min<long long>(remaining, std::max<long long>(size, 0)));
}

int iteration_limit(int v, double delta) {
  if (v < 1) throw std::invalid_argument("iteration_limit requires v >= 1");
  validate_delta(delta);
  return static_cast<int>(
             std::ceil(static_cast<double>(v) / 2.0 * std::log(1.0 / delta))) +
         1;
}

std::vector<int> guess_grid(int n, double eps) {
  if (n < 1) throw std::invalid_argument("guess_grid requires n >= 1");
  validate_epsilon(eps);
  std::vector<int> grid;
  double val = 1.0;  // (1 + eps)^0
  while (val <= static_cast<double>(n)) {
    int g = std::min(n, static_cast<int>(std::ceil(val)));
    if (grid.empty() || grid.back() != g) grid.push_back(g);
    val *= 1.0 + eps;
  }
  if (grid.empty() || grid.back() != n) grid.push_back(n);
  return grid;
}

RunRecord sgopt(const Instance& inst, int v, double epsilon, double delta,
                RngStream& rng, const SolverOptions& options,
                SgoptTrace* trace) {
  const auto start = Clock::now();
  validate_instance(inst);
  if (v < 1 || v > inst.n) {
    throw std::invalid_argument("sgopt guess v must lie in [1, n], got " +
                                std::to_string(v));
  }
  validate_delta(delta);
  if (!std::isnan(epsilon)) validate_epsilon(epsilon);

  TruncatedOracle truncated(*inst.oracle, inst.threshold);
  auto ev = truncated.make_evaluator(KSet(inst.n, inst.k));
  const long long queries_before = inst.oracle->query_count();
  const int iterations = iteration_limit(v, delta);

  for (int j = 1; j <= iterations; ++j) {
    std::vector<ElementId> pool = ev->base().unassigned_elements();
    if (pool.empty()) break;  // the only unconditional early termination
    const int remaining = static_cast<int>(pool.size());
    const int upsilon = options.force_exhaustive
                            ? remaining
                            : sample_size(inst.n, v, j, delta, remaining);
    std::vector<ElementId> sample;
    if (upsilon >= remaining) {
      sample = std::move(pool);  // already ascending; no draws consumed
    } else {
      rng.partial_shuffle(pool, static_cast<std::size_t>(upsilon));
      sample.assign(pool.begin(), pool.begin() + upsilon);
      std::sort(sample.begin(), sample.end());
    }
    Selected best = select_best(*ev, sample, inst.k);
    // Unconditional insertion: the best sampled candidate goes in even at
    // zero (or negative) gain.
    ev->commit(best.e, best.i);
    if (trace != nullptr) {
      trace->iterations.push_back(SgoptIterationTrace{
          j, static_cast<int>(sample.size()), std::move(sample), best.e,
          best.i, best.gain, ev->base_value()});
    }
    if (options.stop_at_cap && ev->base_value() >= truncated.cap()) break;
  }

  RunRecord rec{
      .algorithm = "sgopt",
      .solution = ev->base(),
      .f_value = inst.oracle->peek(ev->base()),
      .f_truncated = ev->base_value(),
      .support_size = ev->base().support_size(),
      .queries = inst.oracle->query_count() - queries_before,
      .wall_ms = elapsed_ms(start),
      .seed = rng.seed(),
      .epsilon = epsilon,
      .delta = delta,
      .v = v,
      .threshold_not_reached = ev->base_value() < truncated.cap(),
  };
  return rec;
}

namespace {

bool prose_better(const RunRecord& a, const RunRecord& b) {
  // Smaller support; ties by larger truncated value. Sweep order (ascending
  // guess) settles the final tie in favor of the smaller guess because
  // replacement requires strict improvement.
  if (a.support_size != b.support_size) return a.support_size < b.support_size;
  return a.f_truncated > b.f_truncated;
}

bool fallback_better(const RunRecord& a, const RunRecord& b) {
  // Larger truncated value; ties by smaller support, then smaller guess via
  // sweep order.
  if (a.f_truncated != b.f_truncated) return a.f_truncated > b.f_truncated;
  return a.support_size < b.support_size;
}

}  // namespace

RunRecord fastsg(const Instance& inst, double epsilon, double delta,
                 RngStream& rng, const SolverOptions& options,
                 FastsgTrace* trace) {
  const auto start = Clock::now();
  validate_instance(inst);
  validate_epsilon(epsilon);
  validate_delta(delta);

  const TruncatedOracle truncated(*inst.oracle, inst.threshold);
  const double bar = (1.0 - delta) * truncated.cap();
  const std::vector<int> grid = guess_grid(inst.n, epsilon);
  const long long queries_before = inst.oracle->query_count();

  // Early exit is sound only under the prose rule without stop_at_cap: there
  // every run's support is forced to min(n, iteration_limit(v, delta)), which
  // is non-decreasing in v, so once a feasible candidate exists no guess
  // whose forced support strictly exceeds it can ever be selected.
  const bool may_exit_early = options.selection == SelectionRule::prose &&
                              !options.stop_at_cap && !options.full_sweep;

  std::vector<RunRecord> children;
  children.reserve(grid.size());
  bool early_exit = false;
  int best_feasible_support = -1;
  for (std::size_t gi = 0; gi < grid.size(); ++gi) {
    const int v = grid[gi];
    RngStream child_rng = rng.child(static_cast<std::uint64_t>(v));
    children.push_back(sgopt(inst, v, epsilon, delta, child_rng, options));
    const RunRecord& rec = children.back();
    if (may_exit_early) {
      if (rec.f_truncated >= bar &&
          (best_feasible_support < 0 || rec.support_size < best_feasible_support)) {
        best_feasible_support = rec.support_size;
      }
      if (best_feasible_support >= 0 && gi + 1 < grid.size()) {
        const int next_forced =
            std::min(inst.n, iteration_limit(grid[gi + 1], delta));
        if (next_forced > best_feasible_support) {
          early_exit = true;
          break;
        }
      }
    }
  }

  // Selection over the candidates actually run.
  int selected = -1;
  bool fallback = false;
  if (options.selection == SelectionRule::prose) {
    for (std::size_t ci = 0; ci < children.size(); ++ci) {
      if (children[ci].f_truncated < bar) continue;
      if (selected < 0 || prose_better(children[ci],
                                       children[static_cast<std::size_t>(selected)])) {
        selected = static_cast<int>(ci);
      }
    }
  } else {
    const double size_factor = std::log(1.0 / epsilon);
    for (std::size_t ci = 0; ci < children.size(); ++ci) {
      const int size_cap = static_cast<int>(
          std::ceil(static_cast<double>(children[ci].v) * size_factor));
      if (children[ci].support_size > size_cap) continue;
      if (selected < 0 ||
          fallback_better(children[ci],
                          children[static_cast<std::size_t>(selected)])) {
        selected = static_cast<int>(ci);
      }
    }
  }
  if (selected < 0) {
    // No candidate qualifies: return the best-effort candidate, flagged.
    fallback = true;
    for (std::size_t ci = 0; ci < children.size(); ++ci) {
      if (selected < 0 ||
          fallback_better(children[ci],
                          children[static_cast<std::size_t>(selected)])) {
        selected = static_cast<int>(ci);
      }
    }
  }

  RunRecord out = children[static_cast<std::size_t>(selected)];
  out.algorithm = "fastsg";
  out.seed = rng.seed();
  out.epsilon = epsilon;
  out.delta = delta;
  out.queries = inst.oracle->query_count() - queries_before;
  out.threshold_not_reached = fallback;
  out.wall_ms = elapsed_ms(start);
  if (trace != nullptr) {
    trace->grid = grid;
    trace->selected_child = selected;
    trace->early_exit = early_exit;
    trace->children = std::move(children);
  }
  return out;
}

RunRecord greedy_cover(const Instance& inst, GreedyTrace* trace) {
  const auto start = Clock::now();
  validate_instance(inst);

  TruncatedOracle truncated(*inst.oracle, inst.threshold);
  auto ev = truncated.make_evaluator(KSet(inst.n, inst.k));
  const long long queries_before = inst.oracle->query_count();

  while (ev->base_value() < truncated.cap()) {
    std::vector<ElementId> pool = ev->base().unassigned_elements();
    if (pool.empty()) break;  // supp = V
    Selected best = select_best(*ev, pool, inst.k);
    if (!(best.gain > 0.0)) break;  // no strictly positive gain left
    ev->commit(best.e, best.i);
    if (trace != nullptr) trace->trajectory.emplace_back(best.e, best.i);
  }

  RunRecord rec{
      .algorithm = "greedy",
      .solution = ev->base(),
      .f_value = inst.oracle->peek(ev->base()),
      .f_truncated = ev->base_value(),
      .support_size = ev->base().support_size(),
      .queries = inst.oracle->query_count() - queries_before,
      .wall_ms = elapsed_ms(start),
      .threshold_not_reached = ev->base_value() < truncated.cap(),
  };
  return rec;
}

std::vector<double> greedy_max_profile(const ValueOracle& oracle, int n,
                                       int k, int max_budget) {
  if (n < 1 || k < 2) {
    throw std::invalid_argument("greedy_max_profile requires n >= 1, k >= 2");
  }
  if (max_budget < 0) {
    throw std::invalid_argument("greedy_max_profile requires max_budget >= 0");
  }
  auto ev = oracle.make_evaluator(KSet(n, k));
  std::vector<double> profile;
  profile.reserve(static_cast<std::size_t>(max_budget) + 1);
  profile.push_back(ev->base_value());
  for (int b = 1; b <= max_budget; ++b) {
    std::vector<ElementId> pool = ev->base().unassigned_elements();
    if (pool.empty()) break;
    Selected best = select_best(*ev, pool, k);
    ev->commit(best.e, best.i);
    profile.push_back(ev->base_value());
  }
  // Budgets beyond n hold the exhausted value.
  while (profile.size() < static_cast<std::size_t>(max_budget) + 1) {
    profile.push_back(profile.back());
  }
  return profile;
}

BruteResult brute_force_opt(const Instance& inst, int limit_n,
                            double enumeration_cap) {
  validate_instance(inst);
  if (inst.n > limit_n) {
    throw std::domain_error("brute force refused: n = " +
                            std::to_string(inst.n) + " exceeds limit " +
                            std::to_string(limit_n));
  }
  const double total = std::pow(static_cast<double>(inst.k + 1),
                                static_cast<double>(inst.n));
  if (total > enumeration_cap) {
    throw std::domain_error("brute force refused: (k+1)^n = " +
                            std::to_string(total) + " exceeds cap " +
                            std::to_string(enumeration_cap));
  }

  BruteResult result;
  std::vector<Position> digits(static_cast<std::size_t>(inst.n), 0);
  std::vector<std::pair<ElementId, Position>> best_pairs;
  while (true) {
    KSet x(inst.n, inst.k);
    int support = 0;
    for (ElementId e = 0; e < inst.n; ++e) {
      Position p = digits[static_cast<std::size_t>(e)];
      if (p != 0) {
        x.insert_in_place(e, p);
        ++support;
      }
    }
    ++result.enumerated;
    const double value = inst.oracle->evaluate(x);
    if (value >= inst.threshold) {
      auto pairs = x.pairs();
      if (!result.feasible || support < result.opt ||
          (support == result.opt && pairs < best_pairs)) {
        result.feasible = true;
        result.opt = support;
        result.solution = x;
        best_pairs = std::move(pairs);
      }
    }
    // Odometer over base-(k+1) digit vectors, element 0 fastest.
    int idx = 0;
    while (idx < inst.n) {
      auto& d = digits[static_cast<std::size_t>(idx)];
      if (d < inst.k) {
        ++d;
        break;
      }
      d = 0;
      ++idx;
    }
    if (idx == inst.n) break;
  }
  return result;
}

}  // namespace ksc
