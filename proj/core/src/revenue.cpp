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

#include "ksc/revenue.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace ksc {

namespace {

// x^a with the 0^a = 0 convention (and guarding tiny negative fp residue).
inline double powa(double x, double a) {
  return x > 0.0 ? std::pow(x, a) : 0.0;
}

}  // namespace

AlphaMatrix::AlphaMatrix(int n, int k, std::vector<double> values)
    : n_(n), k_(k), values_(std::move(values)) {
  if (n < 1 || k < 2) {
    throw std::domain_error("alpha matrix requires n >= 1, k >= 2");
  }
  if (values_.size() !=
      static_cast<std::size_t>(n) * static_cast<std::size_t>(k)) {
    throw std::domain_error("alpha matrix needs n*k entries, got " +
                            std::to_string(values_.size()));
  }
  for (double a : values_) {
    if (!(a > 0.0 && a < 1.0)) {
      throw std::domain_error("alpha exponents must lie in (0,1), got " +
                              std::to_string(a));
    }
  }
}

RevenueOracle::RevenueOracle(WeightedGraph graph, AlphaMatrix alpha)
    : graph_(std::move(graph)), alpha_(std::move(alpha)) {
  if (graph_.n() != alpha_.n()) {
    throw std::domain_error("revenue oracle: graph has " +
                            std::to_string(graph_.n()) +
                            " nodes but alpha matrix has " +
                            std::to_string(alpha_.n()) + " rows");
  }
}

double RevenueOracle::peek(const KSet& x) const {
  if (x.n() != n() || x.k() != k()) {
    throw std::domain_error("revenue oracle: k-set shape mismatch");
  }
  const int kk = k();
  // In-weight sums W[u][i] = sum_{v in X_i} w_{u,v}, accumulated by walking
  // the assigned elements' adjacency rows.
  std::vector<double> sums(
      static_cast<std::size_t>(n()) * static_cast<std::size_t>(kk), 0.0);
  for (ElementId v = 0; v < x.n(); ++v) {
    Position i = x.at(v);
    if (i == 0) continue;
    for (const auto& [u, w] : graph_.neighbors(v)) {
      sums[static_cast<std::size_t>(u) * kk + static_cast<std::size_t>(i - 1)] +=
          w;
    }
  }
  double total = 0.0;
  for (int u = 0; u < n(); ++u) {
    for (int i = 1; i <= kk; ++i) {
      double s = sums[static_cast<std::size_t>(u) * kk +
                      static_cast<std::size_t>(i - 1)];
      if (s > 0.0) total += std::pow(s, alpha_.at(u, i));
    }
  }
  return total;
}

namespace {

class RevenueGainEvaluator final : public GainEvaluator {
 public:
  RevenueGainEvaluator(const RevenueOracle& oracle, KSet base)
      : oracle_(oracle),
        base_(std::move(base)),
        sums_(static_cast<std::size_t>(oracle.n()) *
                  static_cast<std::size_t>(oracle.k()),
              0.0) {
    for (ElementId v = 0; v < base_.n(); ++v) {
      Position i = base_.at(v);
      if (i != 0) accumulate(v, i);
    }
    value_ = oracle_.peek(base_);
  }

  double gain(ElementId e, Position i) override {
    oracle_.count_query();
    return delta(e, i);
  }

  void commit(ElementId e, Position i) override {
    value_ += delta(e, i);  // bookkeeping, not a query
    accumulate(e, i);
    base_.insert_in_place(e, i);
  }

  double base_value() const override { return value_; }
  const KSet& base() const override { return base_; }

 private:
  double delta(ElementId e, Position i) const {
    const int kk = oracle_.k();
    double d = 0.0;
    for (const auto& [u, w] : oracle_.graph().neighbors(e)) {
      const double cur = sums_[static_cast<std::size_t>(u) * kk +
                               static_cast<std::size_t>(i - 1)];
      const double a = oracle_.alpha().at(u, i);
      d += powa(cur + w, a) - powa(cur, a);
    }
    return d;
  }

  void accumulate(ElementId v, Position i) {
    const int kk = oracle_.k();
    for (const auto& [u, w] : oracle_.graph().neighbors(v)) {
      sums_[static_cast<std::size_t>(u) * kk + static_cast<std::size_t>(i - 1)] +=
          w;
    }
  }

  const RevenueOracle& oracle_;
  KSet base_;
  std::vector<double> sums_;
  double value_;
};

}  // namespace

std::unique_ptr<GainEvaluator> RevenueOracle::make_evaluator(
    const KSet& base) const {
  if (base.n() != n() || base.k() != k()) {
    throw std::domain_error("revenue oracle: k-set shape mismatch");
  }
  return std::make_unique<RevenueGainEvaluator>(*this, base);
}

}  // namespace ksc
