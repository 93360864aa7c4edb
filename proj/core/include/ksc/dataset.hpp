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

#ifndef KSC_DATASET_HPP_
#define KSC_DATASET_HPP_

#include <cstdint>
#include <iosfwd>
#include <string>

#include "ksc/graph.hpp"
#include "ksc/revenue.hpp"

namespace ksc {

enum class WeightDist {
  unit,       // w = 1 (default for ingested edge lists)
  uniform01,  // w ~ U[0,1) (default for generated graphs)
};

std::string to_string(WeightDist dist);
WeightDist weight_dist_from_string(const std::string& name);

// Erdos-Renyi G(n, p): each unordered pair {u, v}, u < v, becomes an edge
// independently with probability p; weights drawn per present edge. Fully
// determined by (n, p, dist, seed).
WeightedGraph gen_er(int n, double p, WeightDist dist, std::uint64_t seed);

// Ingests a whitespace-separated edge list (one "u v" pair per line, '#'
// comment lines allowed). Duplicate and reversed duplicate pairs merge into
// one undirected edge, self-loops are dropped, and node labels are densely
// re-indexed in first-seen order. A malformed line raises an error naming
// the 1-based line number. Weights are drawn per unique edge in first-seen
// order (seed only matters for non-unit distributions).
WeightedGraph load_edge_list(const std::string& path, WeightDist dist,
                             std::uint64_t seed);

// n*k i.i.d. exponents alpha_{u,i} ~ U[low, high]; requires
// 0 < low < high < 1.
AlphaMatrix gen_alphas(int n, int k, double low, double high,
                       std::uint64_t seed);

// How a revenue instance was built; serialized into dumps and CSV labels.
struct DatasetSpec {
  enum class Source { er, edge_list, dump };

  Source source = Source::er;
  int n = 0;                 // er only (derived from file otherwise)
  double p = 0.0;            // er only
  std::string path;          // edge_list / dump
  WeightDist weight_dist = WeightDist::uniform01;
  int k = 2;
  double alpha_low = 0.3;
  double alpha_high = 0.9;
  std::uint64_t seed = 0;

  // Compact comma-free label for CSV rows, e.g.
  // "er;n=500;p=0.01;w=uniform01;k=3;alpha=0.3-0.9;dseed=7".
  std::string label() const;
};

struct InstanceData {
  WeightedGraph graph;
  AlphaMatrix alpha;
  DatasetSpec spec;  // provenance echoed into dumps/labels
};

// Materializes the graph + alpha matrix a DatasetSpec describes (reading the
// dump file when source == dump).
InstanceData build_instance_data(const DatasetSpec& spec);

// Self-contained textual instance dump: header (source, n, k, seed,
// distributions) + exact edge triples + exact alpha rows, doubles rendered
// shortest-round-trip so a reload reproduces evaluations bit-for-bit.
void write_instance_dump(std::ostream& os, const InstanceData& data);
void write_instance_dump(const std::string& path, const InstanceData& data);

InstanceData read_instance_dump(std::istream& is);
InstanceData read_instance_dump(const std::string& path);

}  // namespace ksc

#endif  // KSC_DATASET_HPP_
