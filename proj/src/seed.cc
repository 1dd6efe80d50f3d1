// Copyright 2026 The SCCG Toolkit Authors
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

#include "sccg/seed.h"

#include <algorithm>
#include <charconv>
#include <vector>

#include "sccg/error.h"

namespace sccg {
namespace {

std::uint32_t Eccentricity(const Graph& graph, NodeId source) {
  auto dist = BfsDistances(graph, source);
  return static_cast<std::uint32_t>(*std::max_element(dist.begin(), dist.end()));
}

Graph Complete(NodeId n) {
  std::vector<Edge> edges;
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId v = u + 1; v < n; ++v) edges.push_back({u, v});
  }
  return BuildGraph(edges, n);
}

Graph Star(NodeId n) {
  std::vector<Edge> edges;
  for (NodeId v = 1; v < n; ++v) edges.push_back({0, v});
  return BuildGraph(edges, n);
}

Graph Path(NodeId n) {
  std::vector<Edge> edges;
  for (NodeId v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
  return BuildGraph(edges, n);
}

Graph Cycle(NodeId n) {
  std::vector<Edge> edges;
  for (NodeId v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
  edges.push_back({0, n - 1});
  return BuildGraph(edges, n);
}

std::optional<Graph> Graphlet(std::string_view name) {
  std::vector<Edge> edges;
  if (name == "g10") {
    edges = {{0, 1}, {0, 2}, {0, 3}, {3, 4}};
  } else if (name == "g12") {
    edges = {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 4}};
  } else if (name == "g13") {
    edges = {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {3, 4}};
  } else if (name == "g14") {
    edges = {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {0, 4}};
  } else if (name == "g16") {
    edges = {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {0, 4}};
  } else {
    return std::nullopt;
  }
  return BuildGraph(edges, 5);
}

}  // namespace

SeedGraph SeedGraph::FromGraph(Graph graph, std::string name) {
  if (graph.node_count() < 2) {
    throw InvalidArgument("seed graph needs at least 2 nodes");
  }
  if (!IsConnected(graph)) {
    throw InvalidArgument("seed graph must be connected");
  }
  std::uint32_t d0 = 0;
  for (NodeId v = 0; v < graph.node_count(); ++v) {
    d0 = std::max(d0, Eccentricity(graph, v));
  }
  const std::uint32_t k0_max = graph.MaxDegree();
  return SeedGraph(std::move(graph), std::move(name), d0, k0_max);
}

SeedGraph NamedSeed(std::string_view name) {
  const std::string label(name);
  if (auto graphlet = Graphlet(name)) {
    return SeedGraph::FromGraph(std::move(*graphlet), label);
  }
  if (name.size() < 2) throw InvalidArgument("unknown seed '" + label + "'");

  const char family = name.front();
  std::string_view digits = name.substr(1);
  NodeId n = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
  if (ec != std::errc() || ptr != digits.data() + digits.size()) {
    throw InvalidArgument("unknown seed '" + label + "'");
  }
  if (n > kMaxNamedSeedSize) {
    throw InvalidArgument("seed '" + label + "' exceeds " +
                          std::to_string(kMaxNamedSeedSize) + " nodes");
  }

  auto require = [&](NodeId minimum) {
    if (n < minimum) {
      throw InvalidArgument("seed '" + label + "': family '" +
                            std::string(1, family) + "' requires n >= " +
                            std::to_string(minimum));
    }
  };
  switch (family) {
    case 'k':
      require(2);
      return SeedGraph::FromGraph(Complete(n), label);
    case 's':
      require(3);
      return SeedGraph::FromGraph(Star(n), label);
    case 'c':
      require(4);
      return SeedGraph::FromGraph(Cycle(n), label);
    case 'p':
      require(2);
      return SeedGraph::FromGraph(Path(n), label);
    default:
      throw InvalidArgument("unknown seed '" + label + "'");
  }
}

}  // namespace sccg
