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

#ifndef KSC_RNG_HPP_
#define KSC_RNG_HPP_

#include <cstdint>
#include <random>
#include <vector>

namespace ksc {

// splitmix64 finalizer; used to derive child-stream seeds and per-cell seeds.
std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b);

// Deterministic random stream.
//
// Every draw is fully pinned so that a seed reproduces byte-identical runs on
// any conforming implementation:
//   * the engine is std::mt19937_64, whose output sequence the C++ standard
//     specifies exactly;
//   * bounded draws use rejection sampling on the raw 64-bit output (the
//     standard library distributions are deliberately avoided because their
//     draw sequences are implementation-defined);
//   * uniform01 maps the top 53 bits to [0, 1).
//
// child(label) derives an independent stream from the *original* seed and the
// label only, so derivation is insensitive to how many draws the parent has
// already consumed.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed) : seed_(seed), engine_(seed) {}

  std::uint64_t seed() const { return seed_; }

  std::uint64_t next_u64() { return engine_(); }

  // Uniform draw from [0, bound); bound >= 1. Unbiased via rejection.
  std::uint64_t uniform_below(std::uint64_t bound);

  // Uniform draw from [0, 1).
  double uniform01();

  // Uniform draw from [lo, hi); lo < hi.
  double uniform(double lo, double hi);

  // Independent stream derived from (seed, label).
  RngStream child(std::uint64_t label) const {
    return RngStream(mix_seed(seed_, label));
  }

  // Partial Fisher-Yates: after the call, pool[0..count) holds a uniform
  // draw of `count` distinct entries of pool, sampled without replacement.
  // count <= pool.size().
  void partial_shuffle(std::vector<int>& pool, std::size_t count);

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

}  // namespace ksc

#endif  // KSC_RNG_HPP_
