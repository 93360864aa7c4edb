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

#include "ksc/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <tuple>

namespace ksc {

WeightedGraph::WeightedGraph(int n) {
  if (n < 1) {
    throw std::domain_error("graph requires n >= 1, got " + std::to_string(n));
  }
  adjacency_.resize(static_cast<std::size_t>(n));
  labels_.resize(static_cast<std::size_t>(n));
  for (int u = 0; u < n; ++u) labels_[static_cast<std::size_t>(u)] = u;
}

void WeightedGraph::check_node(int u) const {
  if (u < 0 || u >= n()) {
    throw std::domain_error("node id " + std::to_string(u) +
                            " out of range [0," + std::to_string(n()) + ")");
  }
}

namespace {

// Sorted insert keyed by neighbor id; returns false when already present.
bool insert_sorted(std::vector<std::pair<int, double>>& row, int v, double w) {
  auto it = std::lower_bound(
      row.begin(), row.end(), v,
      [](const std::pair<int, double>& a, int b) { return a.first < b; });
  if (it != row.end() && it->first == v) return false;
  row.insert(it, {v, w});
  return true;
}

}  // namespace

void WeightedGraph::add_edge(int u, int v, double w) {
  check_node(u);
  check_node(v);
  if (!insert_sorted(adjacency_[static_cast<std::size_t>(u)], v, w)) {
    throw std::domain_error("duplicate edge {" + std::to_string(u) + "," +
                            std::to_string(v) + "}");
  }
  if (u != v) {
    insert_sorted(adjacency_[static_cast<std::size_t>(v)], u, w);
  }
  ++edge_count_;
}

double WeightedGraph::weight(int u, int v) const {
  check_node(u);
  check_node(v);
  const auto& row = adjacency_[static_cast<std::size_t>(u)];
  auto it = std::lower_bound(
      row.begin(), row.end(), v,
      [](const std::pair<int, double>& a, int b) { return a.first < b; });
  if (it != row.end() && it->first == v) return it->second;
  return 0.0;
}

bool WeightedGraph::has_edge(int u, int v) const {
  check_node(u);
  check_node(v);
  const auto& row = adjacency_[static_cast<std::size_t>(u)];
  auto it = std::lower_bound(
      row.begin(), row.end(), v,
      [](const std::pair<int, double>& a, int b) { return a.first < b; });
  return it != row.end() && it->first == v;
}

const std::vector<std::pair<int, double>>& WeightedGraph::neighbors(
    int u) const {
  check_node(u);
  return adjacency_[static_cast<std::size_t>(u)];
}

std::vector<std::tuple<int, int, double>> WeightedGraph::edges() const {
  std::vector<std::tuple<int, int, double>> out;
  out.reserve(edge_count_);
  for (int u = 0; u < n(); ++u) {
    for (const auto& [v, w] : adjacency_[static_cast<std::size_t>(u)]) {
      if (v >= u) out.emplace_back(u, v, w);
    }
  }
  return out;
}

void WeightedGraph::set_labels(std::vector<std::int64_t> labels) {
  if (labels.size() != adjacency_.size()) {
    throw std::domain_error("label vector size mismatch");
  }
  labels_ = std::move(labels);
}

}  // namespace ksc
