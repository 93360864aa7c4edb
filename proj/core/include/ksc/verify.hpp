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

#ifndef KSC_VERIFY_HPP_
#define KSC_VERIFY_HPP_

#include <string>
#include <vector>

#include "ksc/kset.hpp"
#include "ksc/oracle.hpp"
#include "ksc/rng.hpp"

namespace ksc {

// Absolute slack allowed on every checked inequality (floating-point noise).
inline constexpr double kPropertyTolerance = 1e-9;

enum class CheckMode { exhaustive, randomized };

std::string to_string(CheckMode mode);

// One failed inequality: the rendered k-sets/pairs involved plus both sides.
struct Witness {
  std::string context;
  double lhs = 0.0;
  double rhs = 0.0;
};

struct PropertyReport {
  std::string property;
  CheckMode mode = CheckMode::exhaustive;
  long long cases_checked = 0;
  long long violation_count = 0;
  // The first witnesses found, capped (violation_count keeps the full tally).
  std::vector<Witness> witnesses;

  bool passed() const { return violation_count == 0; }
};

// Stored-witness cap per report.
inline constexpr std::size_t kMaxWitnesses = 32;

// Largest state count (k+1)^n exhaustive mode accepts without allow_large.
inline constexpr long long kExhaustiveGuard = 6561;  // 3^8

// Exhaustive mode enumerates every case and refuses shapes with
// (k+1)^n > kExhaustiveGuard unless allow_large; randomized mode checks
// `budget` sampled cases drawn from rng. All checks read the oracle through
// evaluate(), so query counters advance.

// f(x) + f(y) >= f(meet(x,y)) + f(join(x,y)) over pairs.
PropertyReport check_ksubmodular(const ValueOracle& oracle, int n, int k,
                                 CheckMode mode, long long budget,
                                 RngStream& rng, bool allow_large = false);

// Delta_{(e,i)} f(x) >= Delta_{(e,i)} f(y) for x below y, e unassigned in y.
PropertyReport check_orthant_submodular(const ValueOracle& oracle, int n,
                                        int k, CheckMode mode,
                                        long long budget, RngStream& rng,
                                        bool allow_large = false);

// Delta_{(e,i)} f(x) + Delta_{(e,j)} f(x) >= 0 for i != j.
PropertyReport check_pairwise_monotone(const ValueOracle& oracle, int n,
                                       int k, CheckMode mode, long long budget,
                                       RngStream& rng,
                                       bool allow_large = false);

// Delta_{(e,i)} f(x) >= 0.
PropertyReport check_monotone(const ValueOracle& oracle, int n, int k,
                              CheckMode mode, long long budget, RngStream& rng,
                              bool allow_large = false);

// f(empty) == 0.
PropertyReport check_normalized(const ValueOracle& oracle, int n, int k);

// Renders reports as an aligned human-readable table (one row per report,
// witness lines indented beneath).
std::string render_report_table(const std::vector<PropertyReport>& reports);

// One JSON object per report, newline-separated (machine-readable stream).
std::string render_report_jsonl(const std::vector<PropertyReport>& reports);

}  // namespace ksc

#endif  // KSC_VERIFY_HPP_
