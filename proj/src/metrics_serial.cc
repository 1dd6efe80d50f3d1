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

#include "sccg/metrics_serial.h"

#include <algorithm>
#include <queue>

namespace sccg::metrics::serial {

DiameterResult ExactDiameter(const Graph& graph) {
  const NodeId n = graph.node_count();
  if (n == 0) return {};
  std::uint32_t best = 0;
  for (NodeId s = 0; s < n; ++s) {
    const auto dist = BfsDistances(graph, s);
    for (std::int64_t d : dist) {
      if (d == kUnreachable) return {};
      best = std::max(best, static_cast<std::uint32_t>(d));
    }
  }
  return {best, false};
}

std::vector<std::uint64_t> TrianglesPerNode(const Graph& graph) {
  std::vector<std::uint64_t> triangles(graph.node_count(), 0);
  // Each triangle u < v < w is listed once, from its lowest edge (u, v).
  for (NodeId u = 0; u < graph.node_count(); ++u) {
    const auto adj_u = graph.neighbors(u);
    for (NodeId v : adj_u) {
      if (v <= u) continue;
      const auto adj_v = graph.neighbors(v);
      auto i = std::upper_bound(adj_u.begin(), adj_u.end(), v);
      auto j = std::upper_bound(adj_v.begin(), adj_v.end(), v);
      while (i != adj_u.end() && j != adj_v.end()) {
        if (*i < *j) {
          ++i;
        } else if (*j < *i) {
          ++j;
        } else {
          ++triangles[u];
          ++triangles[v];
          ++triangles[*i];
          ++i;
          ++j;
        }
      }
    }
  }
  return triangles;
}

std::uint64_t TriangleCount(const Graph& graph) {
  std::uint64_t total = 0;
  for (std::uint64_t t : TrianglesPerNode(graph)) total += t;
  return total / 3;
}

double AverageClustering(const Graph& graph, ClusteringConvention convention) {
  const auto triangles = TrianglesPerNode(graph);
  double sum = 0.0;
  NodeId counted = 0;
  for (NodeId v = 0; v < graph.node_count(); ++v) {
    const std::uint32_t d = graph.degree(v);
    if (d < 2) {
      if (convention == ClusteringConvention::kZeroForLowDegree) ++counted;
      continue;
    }
    sum += 2.0 * static_cast<double>(triangles[v]) /
           (static_cast<double>(d) * (d - 1));
    ++counted;
  }
  return counted == 0 ? 0.0 : sum / counted;
}

}  // namespace sccg::metrics::serial
