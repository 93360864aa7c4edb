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
// End-to-end solver costs on a shared ER revenue instance.

#include <benchmark/benchmark.h>

#include <cstdint>

#include "ksc/algorithms.hpp"
#include "ksc/dataset.hpp"
#include "ksc/revenue.hpp"
#include "ksc/rng.hpp"

namespace {

ksc::DatasetSpec make_spec(int n) {
  ksc::DatasetSpec spec;
  spec.source = ksc::DatasetSpec::Source::er;
  spec.n = n;
  spec.p = 10.0 / n;
  spec.k = 3;
  spec.seed = 1;
  return spec;
}

struct Fixture {
  explicit Fixture(int n)
      : data(ksc::build_instance_data(make_spec(n))),
        oracle(data.graph, data.alpha) {
    const auto profile = ksc::greedy_max_profile(oracle, n, 3, n / 10);
    threshold = 0.8 * profile[static_cast<std::size_t>(n / 10)];
  }
  ksc::Instance instance() const {
    return ksc::Instance{data.graph.n(), 3, &oracle, threshold};
  }
  ksc::InstanceData data;
  ksc::RevenueOracle oracle;
  double threshold = 0.0;
};

void BM_GreedyCover(benchmark::State& state) {
  const Fixture fx(static_cast<int>(state.range(0)));
  const ksc::Instance inst = fx.instance();
  for (auto _ : state) {
    benchmark::DoNotOptimize(ksc::greedy_cover(inst));
  }
}
BENCHMARK(BM_GreedyCover)->Arg(200)->Arg(500)->Unit(benchmark::kMillisecond);

void BM_Sgopt(benchmark::State& state) {
  const Fixture fx(static_cast<int>(state.range(0)));
  const ksc::Instance inst = fx.instance();
  std::uint64_t seed = 0;
  for (auto _ : state) {
    ksc::RngStream rng(++seed);
    benchmark::DoNotOptimize(
        ksc::sgopt(inst, inst.n / 10, 0.1, 0.1, rng));
  }
}
BENCHMARK(BM_Sgopt)->Arg(200)->Arg(500)->Unit(benchmark::kMillisecond);

void BM_Fastsg(benchmark::State& state) {
  const Fixture fx(static_cast<int>(state.range(0)));
  const ksc::Instance inst = fx.instance();
  std::uint64_t seed = 0;
  for (auto _ : state) {
    ksc::RngStream rng(++seed);
    benchmark::DoNotOptimize(ksc::fastsg(inst, 0.1, 0.1, rng));
  }
}
BENCHMARK(BM_Fastsg)->Arg(200)->Arg(500)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
