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

#include "ksc/rng.hpp"

#include <stdexcept>
#include <utility>

namespace ksc {

std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b) {
  // splitmix64 finalizer applied to the combined word; passes through two
  // rounds so nearby (seed, label) pairs land far apart.
  std::uint64_t z = a + 0x9e3779b97f4a7c15ULL * (b + 1);
  for (int round = 0; round < 2; ++round) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    z = z ^ (z >> 31);
  }
  return z;
}

std::uint64_t RngStream::uniform_below(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("uniform_below requires bound >= 1");
  // Rejection below the largest multiple of bound; expected < 2 draws.
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
  std::uint64_t r;
  do {
    r = next_u64();
  } while (r >= limit);
  return r % bound;
}

double RngStream::uniform01() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double RngStream::uniform(double lo, double hi) {
  if (!(lo < hi)) throw std::invalid_argument("uniform requires lo < hi");
  return lo + (hi - lo) * uniform01();
}

void RngStream::partial_shuffle(std::vector<int>& pool, std::size_t count) {
  if (count > pool.size()) {
    throw std::invalid_argument("partial_shuffle: count exceeds pool size");
  }
  for (std::size_t idx = 0; idx < count; ++idx) {
    std::size_t pick =
        idx + static_cast<std::size_t>(uniform_below(pool.size() - idx));
    std::swap(pool[idx], pool[pick]);
  }
}

}  // namespace ksc
