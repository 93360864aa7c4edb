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

#ifndef KSC_REVENUE_HPP_
#define KSC_REVENUE_HPP_

#include <memory>
#include <vector>

#include "ksc/graph.hpp"
#include "ksc/kset.hpp"
#include "ksc/oracle.hpp"

namespace ksc {

// Per-(customer, product) sensitivity exponents alpha_{u,i} in (0, 1),
// row-major over u = 0..n-1, i = 1..k.
class AlphaMatrix {
 public:
  AlphaMatrix(int n, int k, std::vector<double> values);

  int n() const { return n_; }
  int k() const { return k_; }

  double at(int u, Position i) const {
    return values_[static_cast<std::size_t>(u) * static_cast<std::size_t>(k_) +
                   static_cast<std::size_t>(i - 1)];
  }

  const std::vector<double>& values() const { return values_; }

  bool operator==(const AlphaMatrix&) const = default;

 private:
  int n_;
  int k_;
  std::vector<double> values_;
};

// Concave-influence revenue over a weighted social graph:
//
//   f(x) = sum_u sum_i ( sum_{v in X_i} w_{u,v} )^{alpha_{u,i}},  0^a = 0.
//
// Monotone, normalized, k-submodular. evaluate() walks the full formula;
// make_evaluator() keeps the per-(u, i) accumulated in-weight sums of the
// base solution so one marginal costs O(deg(e)) power evaluations instead of
// O(n k) — still exactly one query.
class RevenueOracle final : public ValueOracle {
 public:
  RevenueOracle(WeightedGraph graph, AlphaMatrix alpha);

  int n() const { return graph_.n(); }
  int k() const { return alpha_.k(); }

  const WeightedGraph& graph() const { return graph_; }
  const AlphaMatrix& alpha() const { return alpha_; }

  double peek(const KSet& x) const override;
  std::unique_ptr<GainEvaluator> make_evaluator(const KSet& base) const override;

 private:
  WeightedGraph graph_;
  AlphaMatrix alpha_;
};

}  // namespace ksc

#endif  // KSC_REVENUE_HPP_
