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
//
// Revenue oracle costs: full evaluations versus incremental gain queries.

#include <benchmark/benchmark.h>

#include <cstdint>
#include <vector>

#include "ksc/dataset.hpp"
#include "ksc/kset.hpp"
#include "ksc/oracle.hpp"
#include "ksc/revenue.hpp"
#include "ksc/rng.hpp"

namespace {

ksc::RevenueOracle make_oracle(int n) {
  ksc::DatasetSpec spec;
  spec.source = ksc::DatasetSpec::Source::er;
  spec.n = n;
  spec.p = 10.0 / n;  // mean degree ~10 at every size
  spec.k = 3;
  spec.seed = 1;
  ksc::InstanceData data = ksc::build_instance_data(spec);
  return ksc::RevenueOracle(std::move(data.graph), std::move(data.alpha));
}

ksc::KSet random_solution(int n, int k, int support, ksc::RngStream& rng) {
  std::vector<int> pool(static_cast<std::size_t>(n));
  for (int e = 0; e < n; ++e) pool[static_cast<std::size_t>(e)] = e;
  rng.partial_shuffle(pool, static_cast<std::size_t>(support));
  ksc::KSet x(n, k);
  for (int idx = 0; idx < support; ++idx) {
    const auto p = 1 + rng.uniform_below(static_cast<std::uint64_t>(k));
    x.insert_in_place(pool[static_cast<std::size_t>(idx)],
                      static_cast<ksc::Position>(p));
  }
  return x;
}

// Full formula walk: O(n * k) power evaluations per query.
void BM_RevenueEvaluate(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const ksc::RevenueOracle oracle = make_oracle(n);
  ksc::RngStream rng(2);
  const ksc::KSet x = random_solution(n, 3, n / 10, rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(oracle.peek(x));
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_RevenueEvaluate)->Arg(100)->Arg(500)->Arg(2000);

// Incremental gain through the evaluator: O(deg(e)) per query.
void BM_RevenueGain(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const ksc::RevenueOracle oracle = make_oracle(n);
  ksc::RngStream rng(2);
  const ksc::KSet base = random_solution(n, 3, n / 10, rng);
  const auto ev = oracle.make_evaluator(base);
  // Cycle through unassigned elements so each iteration queries a fresh gain.
  const std::vector<ksc::ElementId> pool = base.unassigned_elements();
  std::size_t next = 0;
  for (auto _ : state) {
    const ksc::ElementId e = pool[next];
    next = (next + 1) % pool.size();
    benchmark::DoNotOptimize(ev->gain(e, 1));
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_RevenueGain)->Arg(100)->Arg(500)->Arg(2000);

}  // namespace

BENCHMARK_MAIN();
