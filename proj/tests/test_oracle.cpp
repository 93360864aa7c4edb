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

#include "ksc/oracle.hpp"

#include <doctest.h>

#include <cmath>
#include <memory>
#include <stdexcept>
#include <vector>

#include "ksc/coverage.hpp"
#include "ksc/graph.hpp"
#include "ksc/kset.hpp"
#include "ksc/revenue.hpp"
#include "ksc/rng.hpp"
#include "test_util.hpp"

using ksc::AlphaMatrix;
using ksc::ElementId;
using ksc::KSet;
using ksc::Position;
using ksc::RevenueOracle;
using ksc::RngStream;
using ksc::SumCoverageOracle;
using ksc::SupportSquaredOracle;
using ksc::TruncatedOracle;
using ksc::WeightedGraph;
using ksc::testing::kset_from;

namespace {

// V = {0, 1, 2} with w_01 = 1, w_02 = 2, w_12 = 1, all alpha = 0.5.
RevenueOracle triangle_oracle() {
  WeightedGraph g(3);
  g.add_edge(0, 1, 1.0);
  g.add_edge(0, 2, 2.0);
  g.add_edge(1, 2, 1.0);
  return RevenueOracle(std::move(g), AlphaMatrix(3, 2, std::vector<double>(6, 0.5)));
}

RevenueOracle random_revenue(int n, int k, std::uint64_t seed) {
  RngStream rng(seed);
  WeightedGraph g(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (rng.uniform01() < 0.5) g.add_edge(u, v, rng.uniform01());
    }
  }
  std::vector<double> alphas;
  for (int i = 0; i < n * k; ++i) alphas.push_back(rng.uniform(0.3, 0.9));
  return RevenueOracle(std::move(g), AlphaMatrix(n, k, std::move(alphas)));
}

KSet random_kset(int n, int k, RngStream& rng) {
  KSet x(n, k);
  for (ElementId e = 0; e < n; ++e) {
    const auto pos = static_cast<Position>(
        rng.uniform_below(static_cast<std::uint64_t>(k) + 1));
    if (pos != 0) x.insert_in_place(e, pos);
  }
  return x;
}

}  // namespace

TEST_CASE("every built-in oracle is normalized") {
  CHECK(triangle_oracle().peek(KSet(3, 2)) == 0.0);
  CHECK(SumCoverageOracle::modular(4, 2).peek(KSet(4, 2)) == 0.0);
  RngStream rng(5);
  CHECK(SumCoverageOracle::random(5, 3, 10, 0.4, rng).peek(KSet(5, 3)) == 0.0);
  const RevenueOracle rev = triangle_oracle();
  const TruncatedOracle trunc(rev, 6.0);
  CHECK(trunc.peek(KSet(3, 2)) == 0.0);
}

TEST_CASE("query accounting counts evaluate calls exactly") {
  const RevenueOracle oracle = triangle_oracle();
  CHECK(oracle.query_count() == 0);
  const KSet x = kset_from({0, 1, 0}, 2);
  for (int m = 1; m <= 5; ++m) {
    oracle.evaluate(x);
    CHECK(oracle.query_count() == m);
  }
  oracle.peek(x);  // peek never charges
  CHECK(oracle.query_count() == 5);
  oracle.reset_count();
  CHECK(oracle.query_count() == 0);
}

TEST_CASE("revenue evaluation follows the weighted-power formula") {
  // Single edge of weight 4 with alpha = 0.5: assigning one endpoint earns
  // 4^0.5 = 2 from the other endpoint, nothing else.
  WeightedGraph g(2);
  g.add_edge(0, 1, 4.0);
  const RevenueOracle oracle(std::move(g),
                             AlphaMatrix(2, 2, std::vector<double>(4, 0.5)));
  CHECK(oracle.peek(kset_from({0, 1}, 2)) == doctest::Approx(2.0));
  CHECK(oracle.peek(kset_from({1, 0}, 2)) == doctest::Approx(2.0));
  // Both endpoints in the same coordinate: each side sees the other.
  CHECK(oracle.peek(kset_from({1, 1}, 2)) == doctest::Approx(4.0));
  // Opposite coordinates: same sums, one per coordinate.
  CHECK(oracle.peek(kset_from({1, 2}, 2)) == doctest::Approx(4.0));
}

TEST_CASE("marginal_gain matches the hand-evaluated examples") {
  SUBCASE("modular coverage") {
    const SumCoverageOracle oracle = SumCoverageOracle::modular(2, 2);
    const KSet empty(2, 2);
    const double base = oracle.evaluate(empty);
    CHECK(base == 0.0);
    const long long before = oracle.query_count();
    CHECK(ksc::marginal_gain(oracle, empty, base, 0, 1) == doctest::Approx(1.0));
    CHECK(oracle.query_count() == before + 1);
  }
  SUBCASE("triangle revenue") {
    const RevenueOracle oracle = triangle_oracle();
    const KSet empty(3, 2);
    // Inserting element 1 into coordinate 1: neighbors 0 and 2 each see
    // in-weight 1, contributing 1^0.5 + 1^0.5 = 2.
    CHECK(ksc::marginal_gain(oracle, empty, 0.0, 1, 1) == doctest::Approx(2.0));
  }
  SUBCASE("precondition violations") {
    const SumCoverageOracle oracle = SumCoverageOracle::modular(2, 2);
    const KSet x = kset_from({1, 0}, 2);
    CHECK_THROWS_AS(
        static_cast<void>(ksc::marginal_gain(oracle, x, 1.0, 0, 1)),
        std::domain_error);
    CHECK_THROWS_AS(
        static_cast<void>(ksc::marginal_gain(oracle, x, 1.0, 1, 3)),
        std::domain_error);
  }
}

TEST_CASE("revenue marginals are never negative") {
  const RevenueOracle oracle = random_revenue(10, 3, 31);
  RngStream rng(32);
  for (int trial = 0; trial < 1000; ++trial) {
    KSet x = random_kset(10, 3, rng);
    const auto pool = x.unassigned_elements();
    if (pool.empty()) continue;
    const ElementId e =
        pool[rng.uniform_below(static_cast<std::uint64_t>(pool.size()))];
    const auto i = static_cast<Position>(1 + rng.uniform_below(3));
    const double base = oracle.peek(x);
    CHECK(oracle.peek(x.insert(e, i)) >= base - 1e-12);
  }
}

TEST_CASE("truncation caps values at T/2 and preserves normalization") {
  const SumCoverageOracle inner = SumCoverageOracle::modular(10, 2);
  const TruncatedOracle trunc(inner, 6.0);
  CHECK(trunc.cap() == doctest::Approx(3.0));
  KSet big(10, 2);
  for (ElementId e = 0; e < 10; ++e) big.insert_in_place(e, 1);
  CHECK(inner.peek(big) == doctest::Approx(10.0));
  CHECK(trunc.peek(big) == doctest::Approx(3.0));  // capped
  CHECK(trunc.peek(kset_from({1, 1, 0, 0, 0, 0, 0, 0, 0, 0}, 2)) ==
        doctest::Approx(2.0));  // below the cap
  CHECK(trunc.peek(KSet(10, 2)) == 0.0);
}

TEST_CASE("truncation rejects non-positive thresholds") {
  const SumCoverageOracle inner = SumCoverageOracle::modular(4, 2);
  CHECK_THROWS_AS(TruncatedOracle(inner, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(TruncatedOracle(inner, -1.0), std::invalid_argument);
  CHECK_NOTHROW(ksc::truncate(inner, 0.5));
}

TEST_CASE("truncated queries delegate to the inner counter") {
  const SumCoverageOracle inner = SumCoverageOracle::modular(4, 2);
  const TruncatedOracle trunc(inner, 4.0);
  inner.reset_count();
  trunc.evaluate(KSet(4, 2));
  trunc.evaluate(kset_from({1, 0, 0, 0}, 2));
  CHECK(inner.query_count() == 2);
  CHECK(trunc.query_count() == 2);
  trunc.reset_count();
  CHECK(inner.query_count() == 0);
}

TEST_CASE("gain evaluators charge one query per gain and none per commit") {
  const RevenueOracle oracle = random_revenue(8, 2, 41);
  oracle.reset_count();
  auto ev = oracle.make_evaluator(KSet(8, 2));
  CHECK(oracle.query_count() == 0);  // construction is free
  const double g01 = ev->gain(0, 1);
  CHECK(oracle.query_count() == 1);
  ev->gain(3, 2);
  CHECK(oracle.query_count() == 2);
  ev->commit(0, 1);
  CHECK(oracle.query_count() == 2);  // bookkeeping only
  CHECK(ev->base().at(0) == 1);
  CHECK(ev->base_value() == doctest::Approx(g01));
}

TEST_CASE("incremental revenue gains agree with naive re-evaluation") {
  const RevenueOracle oracle = random_revenue(12, 3, 57);
  RngStream rng(58);
  for (int trial = 0; trial < 50; ++trial) {
    KSet base = random_kset(12, 3, rng);
    auto ev = oracle.make_evaluator(base);
    CHECK(ev->base_value() == doctest::Approx(oracle.peek(base)).epsilon(1e-12));
    for (const ElementId e : base.unassigned_elements()) {
      for (Position i = 1; i <= 3; ++i) {
        const double incremental = ev->gain(e, i);
        const double naive = oracle.peek(base.insert(e, i)) - oracle.peek(base);
        CHECK(incremental == doctest::Approx(naive).epsilon(1e-9));
      }
    }
  }
}

TEST_CASE("evaluator commits track the moving base exactly") {
  const RevenueOracle oracle = random_revenue(10, 2, 71);
  RngStream rng(72);
  auto ev = oracle.make_evaluator(KSet(10, 2));
  KSet shadow(10, 2);
  for (int step = 0; step < 10; ++step) {
    const auto pool = shadow.unassigned_elements();
    const ElementId e =
        pool[rng.uniform_below(static_cast<std::uint64_t>(pool.size()))];
    const auto i = static_cast<Position>(1 + rng.uniform_below(2));
    ev->commit(e, i);
    shadow.insert_in_place(e, i);
    CHECK(ev->base() == shadow);
    CHECK(ev->base_value() ==
          doctest::Approx(oracle.peek(shadow)).epsilon(1e-9));
  }
}

TEST_CASE("truncated gain evaluator caps marginals against the cap") {
  const SumCoverageOracle inner = SumCoverageOracle::modular(6, 2);
  const TruncatedOracle trunc(inner, 4.0);  // cap 2
  auto ev = trunc.make_evaluator(KSet(6, 2));
  CHECK(ev->gain(0, 1) == doctest::Approx(1.0));
  ev->commit(0, 1);
  CHECK(ev->gain(1, 1) == doctest::Approx(1.0));
  ev->commit(1, 1);
  CHECK(ev->base_value() == doctest::Approx(2.0));  // at the cap
  // Every further marginal is truncated to zero gain.
  for (const ElementId e : ev->base().unassigned_elements()) {
    for (Position i = 1; i <= 2; ++i) {
      CHECK(ev->gain(e, i) == doctest::Approx(0.0));
    }
  }
}

TEST_CASE("generic evaluator backs oracles without a specialized one") {
  RngStream rng(83);
  const SumCoverageOracle oracle = SumCoverageOracle::random(8, 2, 16, 0.4, rng);
  oracle.reset_count();
  auto ev = oracle.make_evaluator(KSet(8, 2));
  const double gain = ev->gain(2, 1);
  CHECK(oracle.query_count() == 1);
  CHECK(gain ==
        doctest::Approx(oracle.peek(KSet(8, 2).insert(2, 1))).epsilon(1e-12));
  ev->commit(2, 1);
  CHECK(ev->base_value() == doctest::Approx(gain));
}

TEST_CASE("support-squared oracle is the intended bad example") {
  const SupportSquaredOracle oracle(4, 2);
  CHECK(oracle.peek(KSet(4, 2)) == 0.0);
  CHECK(oracle.peek(kset_from({1, 0, 0, 0}, 2)) == 1.0);
  CHECK(oracle.peek(kset_from({1, 2, 0, 0}, 2)) == 4.0);
  // The defining failure: two disjoint singletons join to a support of two,
  // and 1 + 1 < 0 + 4 breaks the pair inequality.
  const KSet x = kset_from({1, 0, 0, 0}, 2);
  const KSet y = kset_from({0, 1, 0, 0}, 2);
  CHECK(oracle.peek(x) + oracle.peek(y) <
        oracle.peek(meet(x, y)) + oracle.peek(join(x, y)));
}

TEST_CASE("alpha matrix validates its exponents") {
  CHECK_THROWS_AS(AlphaMatrix(2, 2, {0.5, 0.5, 0.5, 1.0}), std::domain_error);
  CHECK_THROWS_AS(AlphaMatrix(2, 2, {0.5, 0.5, 0.0, 0.5}), std::domain_error);
  CHECK_THROWS_AS(AlphaMatrix(2, 2, {0.5, 0.5, 0.5}), std::domain_error);
  const AlphaMatrix alpha(2, 2, {0.3, 0.4, 0.5, 0.6});
  CHECK(alpha.at(0, 1) == 0.3);
  CHECK(alpha.at(0, 2) == 0.4);
  CHECK(alpha.at(1, 1) == 0.5);
  CHECK(alpha.at(1, 2) == 0.6);
}

TEST_CASE("revenue oracle rejects mismatched graph and alpha shapes") {
  WeightedGraph g(3);
  CHECK_THROWS_AS(RevenueOracle(g, AlphaMatrix(2, 2, {0.5, 0.5, 0.5, 0.5})),
                  std::domain_error);
}
