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

#include "ksc/dataset.hpp"

#include <cctype>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <tuple>
#include <unordered_map>
#include <utility>
#include <vector>

#include "ksc/format.hpp"
#include "ksc/rng.hpp"

namespace ksc {

namespace {

// Child-stream label separating the alpha draws from the edge/weight draws
// of the same dataset seed.
constexpr std::uint64_t kAlphaStreamLabel = 0xA1FA;

bool only_whitespace_left(std::istringstream& is) {
  char c;
  while (is.get(c)) {
    if (!std::isspace(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

std::string to_string(WeightDist dist) {
  switch (dist) {
    case WeightDist::unit:
      return "unit";
    case WeightDist::uniform01:
      return "uniform01";
  }
  throw std::logic_error("unknown weight distribution");
}

WeightDist weight_dist_from_string(const std::string& name) {
  if (name == "unit") return WeightDist::unit;
  if (name == "uniform01") return WeightDist::uniform01;
  throw std::invalid_argument("unknown weight distribution '" + name +
                              "' (expected unit|uniform01)");
}

WeightedGraph gen_er(int n, double p, WeightDist dist, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("gen_er requires n >= 1");
  if (!(p > 0.0 && p <= 1.0)) {
    throw std::invalid_argument("gen_er requires p in (0,1]");
  }
  RngStream rng(seed);
  WeightedGraph graph(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (rng.uniform01() < p) {
        // Weight drawn only when the edge exists, immediately after its
        // Bernoulli draw, so the stream layout is pinned.
        double w = dist == WeightDist::unit ? 1.0 : rng.uniform01();
        graph.add_edge(u, v, w);
      }
    }
  }
  return graph;
}

WeightedGraph load_edge_list(const std::string& path, WeightDist dist,
                             std::uint64_t seed) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open edge list '" + path + "'");
  RngStream rng(seed);

  std::unordered_map<std::int64_t, int> id_of;
  std::vector<std::int64_t> labels;
  auto intern = [&](std::int64_t label) {
    auto [it, inserted] = id_of.try_emplace(label, static_cast<int>(labels.size()));
    if (inserted) labels.push_back(label);
    return it->second;
  };

  std::map<std::pair<int, int>, double> edge_weights;
  std::vector<std::pair<int, int>> edge_order;

  std::string line;
  long long lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::istringstream tokens(line);
    tokens >> std::ws;
    if (tokens.eof()) continue;           // blank line
    if (tokens.peek() == '#') continue;   // comment line
    std::int64_t a = 0, b = 0;
    if (!(tokens >> a >> b) || !only_whitespace_left(tokens)) {
      throw std::runtime_error(path + ": line " + std::to_string(lineno) +
                               ": malformed edge line (expected exactly two "
                               "integer node ids): '" +
                               line + "'");
    }
    int u = intern(a);
    int v = intern(b);
    if (u == v) continue;  // self-loops dropped
    std::pair<int, int> key = u < v ? std::make_pair(u, v) : std::make_pair(v, u);
    auto [it, inserted] = edge_weights.try_emplace(key, 0.0);
    if (inserted) {
      // Weight drawn once per unique undirected edge, in first-seen order.
      it->second = dist == WeightDist::unit ? 1.0 : rng.uniform01();
      edge_order.push_back(key);
    }
  }
  if (labels.empty()) {
    throw std::runtime_error(path + ": no nodes found");
  }

  WeightedGraph graph(static_cast<int>(labels.size()));
  for (const auto& key : edge_order) {
    graph.add_edge(key.first, key.second, edge_weights.at(key));
  }
  graph.set_labels(std::move(labels));
  return graph;
}

AlphaMatrix gen_alphas(int n, int k, double low, double high,
                       std::uint64_t seed) {
  if (n < 1 || k < 2) throw std::invalid_argument("gen_alphas requires n >= 1, k >= 2");
  if (!(0.0 < low && low < high && high < 1.0)) {
    throw std::invalid_argument("gen_alphas requires 0 < low < high < 1");
  }
  RngStream rng(seed);
  std::vector<double> values(static_cast<std::size_t>(n) *
                             static_cast<std::size_t>(k));
  for (double& a : values) a = rng.uniform(low, high);
  return AlphaMatrix(n, k, std::move(values));
}

std::string DatasetSpec::label() const {
  std::ostringstream os;
  switch (source) {
    case Source::er:
      os << "er;n=" << n << ";p=" << format_double(p);
      break;
    case Source::edge_list: {
      std::string name = std::filesystem::path(path).filename().string();
      for (char& c : name) {
        if (c == ',' || c == ';') c = '_';
      }
      os << "file;name=" << name;
      break;
    }
    case Source::dump: {
      std::string name = std::filesystem::path(path).filename().string();
      for (char& c : name) {
        if (c == ',' || c == ';') c = '_';
      }
      os << "dump;name=" << name;
      break;
    }
  }
  os << ";w=" << to_string(weight_dist) << ";k=" << k << ";alpha="
     << format_double(alpha_low) << "-" << format_double(alpha_high)
     << ";dseed=" << seed;
  return os.str();
}

InstanceData build_instance_data(const DatasetSpec& spec) {
  if (spec.source == DatasetSpec::Source::dump) {
    InstanceData data = read_instance_dump(spec.path);
    data.spec.path = spec.path;
    return data;
  }
  if (spec.k < 2) throw std::invalid_argument("dataset requires k >= 2");
  WeightedGraph graph =
      spec.source == DatasetSpec::Source::er
          ? gen_er(spec.n, spec.p, spec.weight_dist, spec.seed)
          : load_edge_list(spec.path, spec.weight_dist, spec.seed);
  AlphaMatrix alpha =
      gen_alphas(graph.n(), spec.k, spec.alpha_low, spec.alpha_high,
                 mix_seed(spec.seed, kAlphaStreamLabel));
  DatasetSpec echoed = spec;
  echoed.n = graph.n();
  return InstanceData{std::move(graph), std::move(alpha), std::move(echoed)};
}

void write_instance_dump(std::ostream& os, const InstanceData& data) {
  const WeightedGraph& g = data.graph;
  const DatasetSpec& spec = data.spec;
  os << "ksc-instance-v1\n";
  switch (spec.source) {
    case DatasetSpec::Source::er:
      os << "source er\n";
      os << "p " << format_double(spec.p) << "\n";
      break;
    case DatasetSpec::Source::edge_list:
      os << "source edge_list\n";
      os << "path " << spec.path << "\n";
      break;
    case DatasetSpec::Source::dump:
      os << "source dump\n";
      break;
  }
  os << "n " << g.n() << "\n";
  os << "k " << data.alpha.k() << "\n";
  os << "weight_dist " << to_string(spec.weight_dist) << "\n";
  os << "alpha_low " << format_double(spec.alpha_low) << "\n";
  os << "alpha_high " << format_double(spec.alpha_high) << "\n";
  os << "seed " << spec.seed << "\n";
  auto edges = g.edges();
  os << "edges " << edges.size() << "\n";
  for (const auto& [u, v, w] : edges) {
    os << u << " " << v << " " << format_double(w) << "\n";
  }
  bool custom_labels = false;
  for (int u = 0; u < g.n(); ++u) {
    if (g.labels()[static_cast<std::size_t>(u)] != u) {
      custom_labels = true;
      break;
    }
  }
  os << "labels " << (custom_labels ? 1 : 0) << "\n";
  if (custom_labels) {
    for (int u = 0; u < g.n(); ++u) {
      os << (u ? " " : "") << g.labels()[static_cast<std::size_t>(u)];
    }
    os << "\n";
  }
  os << "alphas\n";
  for (int u = 0; u < g.n(); ++u) {
    for (int i = 1; i <= data.alpha.k(); ++i) {
      os << (i > 1 ? " " : "") << format_double(data.alpha.at(u, i));
    }
    os << "\n";
  }
  os << "end\n";
}

void write_instance_dump(const std::string& path, const InstanceData& data) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write instance dump '" + path + "'");
  write_instance_dump(out, data);
}

namespace {

std::string expect_line(std::istream& is, const char* what) {
  std::string line;
  if (!std::getline(is, line)) {
    throw std::runtime_error(std::string("instance dump truncated; expected ") +
                             what);
  }
  if (!line.empty() && line.back() == '\r') line.pop_back();
  return line;
}

std::string expect_field(std::istream& is, const std::string& key) {
  std::string line = expect_line(is, key.c_str());
  if (line.rfind(key + " ", 0) != 0) {
    throw std::runtime_error("instance dump: expected '" + key +
                             " ...', got '" + line + "'");
  }
  return line.substr(key.size() + 1);
}

}  // namespace

InstanceData read_instance_dump(std::istream& is) {
  if (expect_line(is, "magic header") != "ksc-instance-v1") {
    throw std::runtime_error("not a ksc-instance-v1 dump");
  }
  DatasetSpec spec;
  std::string source = expect_field(is, "source");
  if (source == "er") {
    spec.source = DatasetSpec::Source::er;
    spec.p = std::stod(expect_field(is, "p"));
  } else if (source == "edge_list") {
    spec.source = DatasetSpec::Source::edge_list;
    spec.path = expect_field(is, "path");
  } else if (source == "dump") {
    spec.source = DatasetSpec::Source::dump;
  } else {
    throw std::runtime_error("instance dump: unknown source '" + source + "'");
  }
  int n = std::stoi(expect_field(is, "n"));
  int k = std::stoi(expect_field(is, "k"));
  spec.n = n;
  spec.k = k;
  spec.weight_dist = weight_dist_from_string(expect_field(is, "weight_dist"));
  spec.alpha_low = std::stod(expect_field(is, "alpha_low"));
  spec.alpha_high = std::stod(expect_field(is, "alpha_high"));
  spec.seed = std::stoull(expect_field(is, "seed"));

  long long edge_count = std::stoll(expect_field(is, "edges"));
  WeightedGraph graph(n);
  for (long long idx = 0; idx < edge_count; ++idx) {
    std::istringstream row(expect_line(is, "edge triple"));
    int u, v;
    double w;
    if (!(row >> u >> v >> w)) {
      throw std::runtime_error("instance dump: malformed edge triple at index " +
                               std::to_string(idx));
    }
    graph.add_edge(u, v, w);
  }

  int has_labels = std::stoi(expect_field(is, "labels"));
  if (has_labels != 0) {
    std::istringstream row(expect_line(is, "label row"));
    std::vector<std::int64_t> labels(static_cast<std::size_t>(n));
    for (int u = 0; u < n; ++u) {
      if (!(row >> labels[static_cast<std::size_t>(u)])) {
        throw std::runtime_error("instance dump: short label row");
      }
    }
    graph.set_labels(std::move(labels));
  }

  if (expect_line(is, "'alphas'") != "alphas") {
    throw std::runtime_error("instance dump: expected 'alphas' section");
  }
  std::vector<double> values(static_cast<std::size_t>(n) *
                             static_cast<std::size_t>(k));
  for (int u = 0; u < n; ++u) {
    std::istringstream row(expect_line(is, "alpha row"));
    for (int i = 0; i < k; ++i) {
      if (!(row >> values[static_cast<std::size_t>(u) * k +
                          static_cast<std::size_t>(i)])) {
        throw std::runtime_error("instance dump: short alpha row " +
                                 std::to_string(u));
      }
    }
  }
  if (expect_line(is, "'end'") != "end") {
    throw std::runtime_error("instance dump: expected trailing 'end'");
  }
  return InstanceData{std::move(graph), AlphaMatrix(n, k, std::move(values)),
                      std::move(spec)};
}

InstanceData read_instance_dump(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open instance dump '" + path + "'");
  return read_instance_dump(in);
}

}  // namespace ksc
