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

#include "ksc/verify.hpp"

#include <doctest.h>

#include <json.hpp>
#include <stdexcept>
#include <string>
#include <vector>

#include "ksc/coverage.hpp"
#include "ksc/graph.hpp"
#include "ksc/oracle.hpp"
#include "ksc/revenue.hpp"
#include "ksc/rng.hpp"
#include "test_util.hpp"

using ksc::AlphaMatrix;
using ksc::CheckMode;
using ksc::PropertyReport;
using ksc::RevenueOracle;
using ksc::RngStream;
using ksc::SumCoverageOracle;
using ksc::SupportSquaredOracle;
using ksc::TruncatedOracle;
using ksc::WeightedGraph;

namespace {

RevenueOracle small_revenue(int n, int k, std::uint64_t seed) {
  RngStream rng(seed);
  WeightedGraph g(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (rng.uniform01() < 0.6) g.add_edge(u, v, rng.uniform01());
    }
  }
  std::vector<double> alphas;
  for (int i = 0; i < n * k; ++i) alphas.push_back(rng.uniform(0.3, 0.9));
  return RevenueOracle(std::move(g), AlphaMatrix(n, k, std::move(alphas)));
}

std::vector<PropertyReport> run_all(const ksc::ValueOracle& oracle, int n,
                                    int k, CheckMode mode, long long budget,
                                    std::uint64_t seed) {
  RngStream rng(seed);
  std::vector<PropertyReport> reports;
  RngStream r1 = rng.child(1);
  reports.push_back(ksc::check_ksubmodular(oracle, n, k, mode, budget, r1));
  RngStream r2 = rng.child(2);
  reports.push_back(
      ksc::check_orthant_submodular(oracle, n, k, mode, budget, r2));
  RngStream r3 = rng.child(3);
  reports.push_back(
      ksc::check_pairwise_monotone(oracle, n, k, mode, budget, r3));
  RngStream r4 = rng.child(4);
  reports.push_back(ksc::check_monotone(oracle, n, k, mode, budget, r4));
  reports.push_back(ksc::check_normalized(oracle, n, k));
  return reports;
}

}  // namespace

TEST_CASE("modular coverage passes every exhaustive check at n=4, k=2") {
  const SumCoverageOracle oracle = SumCoverageOracle::modular(4, 2);
  const auto reports = run_all(oracle, 4, 2, CheckMode::exhaustive, 0, 1);
  for (const PropertyReport& report : reports) {
    CAPTURE(report.property);
    CHECK(report.passed());
    CHECK(report.witnesses.empty());
  }
  // 81 states -> 6561 ordered pairs in the pair inequality check.
  CHECK(reports[0].cases_checked == 6561);
  CHECK(reports[0].property == "ksubmodular");
  CHECK(reports[4].property == "normalized");
  CHECK(reports[4].cases_checked == 1);
}

TEST_CASE("random coverage and revenue pass exhaustively on tiny shapes") {
  RngStream rng(5);
  const SumCoverageOracle coverage =
      SumCoverageOracle::random(3, 2, 6, 0.5, rng);
  for (const auto& report :
       run_all(coverage, 3, 2, CheckMode::exhaustive, 0, 2)) {
    CAPTURE(report.property);
    CHECK(report.passed());
  }
  const RevenueOracle revenue = small_revenue(3, 2, 6);
  for (const auto& report :
       run_all(revenue, 3, 2, CheckMode::exhaustive, 0, 3)) {
    CAPTURE(report.property);
    CHECK(report.passed());
  }
}

TEST_CASE("truncation preserves every property") {
  const RevenueOracle revenue = small_revenue(3, 2, 7);
  const TruncatedOracle trunc(revenue, 1.0);
  for (const auto& report : run_all(trunc, 3, 2, CheckMode::exhaustive, 0, 4)) {
    CAPTURE(report.property);
    CHECK(report.passed());
  }
}

TEST_CASE("randomized mode checks the requested budget") {
  const RevenueOracle revenue = small_revenue(12, 3, 8);
  RngStream rng(9);
  const PropertyReport report =
      ksc::check_ksubmodular(revenue, 12, 3, CheckMode::randomized, 500, rng);
  CHECK(report.mode == CheckMode::randomized);
  CHECK(report.cases_checked == 500);
  CHECK(report.passed());
}

TEST_CASE("randomized mode is deterministic in the seed") {
  const SupportSquaredOracle broken(10, 3);
  RngStream a(33);
  RngStream b(33);
  const PropertyReport ra =
      ksc::check_ksubmodular(broken, 10, 3, CheckMode::randomized, 400, a);
  const PropertyReport rb =
      ksc::check_ksubmodular(broken, 10, 3, CheckMode::randomized, 400, b);
  CHECK(ra.violation_count == rb.violation_count);
  REQUIRE(ra.witnesses.size() == rb.witnesses.size());
  for (std::size_t i = 0; i < ra.witnesses.size(); ++i) {
    CHECK(ra.witnesses[i].context == rb.witnesses[i].context);
  }
}

TEST_CASE("the support-squared oracle is caught with concrete witnesses") {
  const SupportSquaredOracle broken(4, 2);
  RngStream rng(11);
  RngStream r1 = rng.child(1);
  const PropertyReport pair =
      ksc::check_ksubmodular(broken, 4, 2, CheckMode::exhaustive, 0, r1);
  CHECK_FALSE(pair.passed());
  CHECK(pair.violation_count >= 1);
  REQUIRE_FALSE(pair.witnesses.empty());
  CHECK(pair.witnesses.size() <= ksc::kMaxWitnesses);
  CHECK_FALSE(pair.witnesses[0].context.empty());
  // Each witness records a genuinely violated inequality (lhs < rhs).
  for (const ksc::Witness& w : pair.witnesses) {
    CHECK(w.lhs < w.rhs - ksc::kPropertyTolerance);
  }

  RngStream r2 = rng.child(2);
  const PropertyReport orthant = ksc::check_orthant_submodular(
      broken, 4, 2, CheckMode::exhaustive, 0, r2);
  CHECK_FALSE(orthant.passed());

  // Growing marginals keep the function monotone and pairwise monotone.
  RngStream r3 = rng.child(3);
  CHECK(ksc::check_pairwise_monotone(broken, 4, 2, CheckMode::exhaustive, 0, r3)
            .passed());
  RngStream r4 = rng.child(4);
  CHECK(ksc::check_monotone(broken, 4, 2, CheckMode::exhaustive, 0, r4)
            .passed());
  CHECK(ksc::check_normalized(broken, 4, 2).passed());
}

TEST_CASE("exhaustive mode refuses oversized shapes unless forced") {
  const SupportSquaredOracle oracle(9, 2);  // 3^9 = 19683 states
  RngStream rng(13);
  CHECK_THROWS_AS(static_cast<void>(ksc::check_monotone(
                      oracle, 9, 2, CheckMode::exhaustive, 0, rng)),
                  std::domain_error);
  const PropertyReport forced = ksc::check_monotone(
      oracle, 9, 2, CheckMode::exhaustive, 0, rng, /*allow_large=*/true);
  CHECK(forced.passed());
}

TEST_CASE("check shapes are validated") {
  const SupportSquaredOracle oracle(4, 2);
  RngStream rng(15);
  CHECK_THROWS_AS(static_cast<void>(ksc::check_ksubmodular(
                      oracle, 0, 2, CheckMode::exhaustive, 0, rng)),
                  std::invalid_argument);
  CHECK_THROWS_AS(static_cast<void>(ksc::check_ksubmodular(
                      oracle, 4, 1, CheckMode::exhaustive, 0, rng)),
                  std::invalid_argument);
}

TEST_CASE("table rendering names every property and verdict") {
  const SupportSquaredOracle broken(4, 2);
  const auto reports = run_all(broken, 4, 2, CheckMode::exhaustive, 0, 17);
  const std::string table = ksc::render_report_table(reports);
  CHECK(table.find("ksubmodular") != std::string::npos);
  CHECK(table.find("orthant") != std::string::npos);
  CHECK(table.find("pairwise") != std::string::npos);
  CHECK(table.find("monotone") != std::string::npos);
  CHECK(table.find("normalized") != std::string::npos);
  CHECK(table.find("FAIL") != std::string::npos);
  CHECK(table.find("PASS") != std::string::npos);
}

TEST_CASE("jsonl rendering emits one parseable object per report") {
  const SupportSquaredOracle broken(4, 2);
  const auto reports = run_all(broken, 4, 2, CheckMode::exhaustive, 0, 19);
  const std::string jsonl = ksc::render_report_jsonl(reports);
  const auto lines = ksc::testing::split_lines(jsonl);
  REQUIRE(lines.size() == reports.size());
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const nlohmann::json parsed = nlohmann::json::parse(lines[i]);
    CHECK(parsed.at("property").get<std::string>() == reports[i].property);
    CHECK(parsed.at("violations").get<long long>() ==
          reports[i].violation_count);
    CHECK(parsed.at("cases").get<long long>() == reports[i].cases_checked);
    CHECK(parsed.at("passed").get<bool>() == reports[i].passed());
    CHECK(parsed.at("witnesses").is_array());
  }
}
