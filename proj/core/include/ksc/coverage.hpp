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

#ifndef KSC_COVERAGE_HPP_
#define KSC_COVERAGE_HPP_

#include <vector>

#include "ksc/kset.hpp"
#include "ksc/oracle.hpp"
#include "ksc/rng.hpp"

namespace ksc {

// One coordinate of a sum-coverage objective: a weighted universe plus, for
// each ground-set element, the universe items it covers when assigned here.
struct CoverageCoordinate {
  std::vector<double> item_weights;        // universe item weights, >= 0
  std::vector<std::vector<int>> covers;    // covers[e] = items covered by e
};

// Sum of per-coordinate weighted coverage:
//
//   f(x) = sum_i weight( union_{e in X_i} covers_i[e] ).
//
// Each coordinate is a monotone submodular coverage function, so f is
// monotone, normalized, and k-submodular. This is the cheap synthetic
// objective used by the test suites alongside the revenue objective.
class SumCoverageOracle final : public ValueOracle {
 public:
  // coordinates.size() must equal k (>= 2); every covers list must have n
  // entries with item ids inside the coordinate's universe.
  SumCoverageOracle(int n, std::vector<CoverageCoordinate> coordinates);

  int n() const { return n_; }
  int k() const { return static_cast<int>(coordinates_.size()); }

  double peek(const KSet& x) const override;

  // The modular special case f(x) = sum_i |X_i| = |supp(x)|: element e covers
  // its own unit-weight singleton in every coordinate.
  static SumCoverageOracle modular(int n, int k);

  // Random instance: every coordinate gets a universe of `universe_size`
  // items with uniform [0,1) weights; each element covers each item
  // independently with probability `density`. Elements that would cover
  // nothing get one random item so marginals stay non-trivial.
  static SumCoverageOracle random(int n, int k, int universe_size,
                                  double density, RngStream& rng);

 private:
  int n_;
  std::vector<CoverageCoordinate> coordinates_;
};

}  // namespace ksc

#endif  // KSC_COVERAGE_HPP_
