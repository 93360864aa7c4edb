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

#ifndef KSC_GRAPH_HPP_
#define KSC_GRAPH_HPP_

#include <cstdint>
#include <utility>
#include <vector>

namespace ksc {

// Undirected weighted graph over nodes 0..n-1. Adjacency rows are kept
// sorted by neighbor id; duplicate edges are rejected. Self-loops are
// permitted (stored once, on the node's own row).
class WeightedGraph {
 public:
  explicit WeightedGraph(int n);

  int n() const { return static_cast<int>(adjacency_.size()); }
  std::size_t edge_count() const { return edge_count_; }

  // Adds undirected edge {u, v} with weight w; errors on duplicates or
  // out-of-range endpoints.
  void add_edge(int u, int v, double w);

  // Weight of {u, v}; 0 when the edge is absent.
  double weight(int u, int v) const;
  bool has_edge(int u, int v) const;

  // (neighbor, weight) pairs of u, ascending by neighbor id.
  const std::vector<std::pair<int, double>>& neighbors(int u) const;

  // Edges as (u, v, w) with u <= v, ascending lexicographically.
  std::vector<std::tuple<int, int, double>> edges() const;

  // Original node labels for graphs ingested from files (identity for
  // generated graphs): labels()[id] is the label the id was read as.
  void set_labels(std::vector<std::int64_t> labels);
  const std::vector<std::int64_t>& labels() const { return labels_; }

 private:
  void check_node(int u) const;

  std::vector<std::vector<std::pair<int, double>>> adjacency_;
  std::vector<std::int64_t> labels_;
  std::size_t edge_count_ = 0;
};

}  // namespace ksc

#endif  // KSC_GRAPH_HPP_
