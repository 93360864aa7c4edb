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

#include "ksc/coverage.hpp"

#include <stdexcept>
#include <string>

namespace ksc {

SumCoverageOracle::SumCoverageOracle(
    int n, std::vector<CoverageCoordinate> coordinates)
    : n_(n), coordinates_(std::move(coordinates)) {
  if (n < 1) {
    throw std::domain_error("coverage oracle requires n >= 1");
  }
  if (coordinates_.size() < 2) {
    throw std::domain_error("coverage oracle requires k >= 2 coordinates");
  }
  for (const auto& coord : coordinates_) {
    if (coord.covers.size() != static_cast<std::size_t>(n)) {
      throw std::domain_error("coverage coordinate needs one cover list per element");
    }
    const int universe = static_cast<int>(coord.item_weights.size());
    for (const auto& items : coord.covers) {
      for (int item : items) {
        if (item < 0 || item >= universe) {
          throw std::domain_error("coverage item id " + std::to_string(item) +
                                  " outside universe");
        }
      }
    }
    for (double w : coord.item_weights) {
      if (w < 0.0) throw std::domain_error("coverage item weights must be >= 0");
    }
  }
}

double SumCoverageOracle::peek(const KSet& x) const {
  if (x.n() != n_ || x.k() != k()) {
    throw std::domain_error("coverage oracle: k-set shape mismatch");
  }
  double total = 0.0;
  std::vector<char> covered;
  for (int i = 1; i <= k(); ++i) {
    const auto& coord = coordinates_[static_cast<std::size_t>(i - 1)];
    covered.assign(coord.item_weights.size(), 0);
    for (ElementId e = 0; e < n_; ++e) {
      if (x.at(e) != i) continue;
      for (int item : coord.covers[static_cast<std::size_t>(e)]) {
        if (!covered[static_cast<std::size_t>(item)]) {
          covered[static_cast<std::size_t>(item)] = 1;
          total += coord.item_weights[static_cast<std::size_t>(item)];
        }
      }
    }
  }
  return total;
}

SumCoverageOracle SumCoverageOracle::modular(int n, int k) {
  if (k < 2) throw std::domain_error("modular oracle requires k >= 2");
  CoverageCoordinate coord;
  coord.item_weights.assign(static_cast<std::size_t>(n), 1.0);
  coord.covers.resize(static_cast<std::size_t>(n));
  for (int e = 0; e < n; ++e) coord.covers[static_cast<std::size_t>(e)] = {e};
  return SumCoverageOracle(
      n, std::vector<CoverageCoordinate>(static_cast<std::size_t>(k), coord));
}

SumCoverageOracle SumCoverageOracle::random(int n, int k, int universe_size,
                                             double density, RngStream& rng) {
  if (universe_size < 1) {
    throw std::invalid_argument("random coverage requires universe_size >= 1");
  }
  if (!(density > 0.0 && density <= 1.0)) {
    throw std::invalid_argument("random coverage requires density in (0,1]");
  }
  std::vector<CoverageCoordinate> coords;
  coords.reserve(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) {
    CoverageCoordinate coord;
    coord.item_weights.resize(static_cast<std::size_t>(universe_size));
    for (double& w : coord.item_weights) w = rng.uniform01();
    coord.covers.resize(static_cast<std::size_t>(n));
    for (int e = 0; e < n; ++e) {
      auto& items = coord.covers[static_cast<std::size_t>(e)];
      for (int item = 0; item < universe_size; ++item) {
        if (rng.uniform01() < density) items.push_back(item);
      }
      if (items.empty()) {
        items.push_back(static_cast<int>(rng.uniform_below(
            static_cast<std::uint64_t>(universe_size))));
      }
    }
    coords.push_back(std::move(coord));
  }
  return SumCoverageOracle(n, std::move(coords));
}

}  // namespace ksc
