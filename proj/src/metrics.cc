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

#include "sccg/metrics.h"

#include <algorithm>
#include <cmath>
#include <limits>

namespace sccg::metrics {
namespace {

constexpr std::uint32_t kUnseen = std::numeric_limits<std::uint32_t>::max();

// BFS with caller-owned buffers. Returns the eccentricity of `source` and the
// number of nodes reached; `farthest` receives the last node dequeued.
struct BfsScratch {
  std::vector<std::uint32_t> dist;
  std::vector<NodeId> queue;

  explicit BfsScratch(NodeId n) : dist(n, kUnseen), queue(n) {}

  std::uint32_t Eccentricity(const Graph& graph, NodeId source,
                             NodeId* reached = nullptr,
                             NodeId* farthest = nullptr) {
    std::fill(dist.begin(), dist.end(), kUnseen);
    std::size_t head = 0;
    std::size_t tail = 0;
    dist[source] = 0;
    queue[tail++] = source;
    while (head < tail) {
      const NodeId u = queue[head++];
      for (NodeId w : graph.neighbors(u)) {
        if (dist[w] == kUnseen) {
          dist[w] = dist[u] + 1;
          queue[tail++] = w;
        }
      }
    }
    const NodeId last = queue[tail - 1];
    if (reached) *reached = static_cast<NodeId>(tail);
    if (farthest) *farthest = last;
    return dist[last];
  }
};

}  // namespace

std::optional<double> Density(const Graph& graph) {
  const double n = graph.node_count();
  if (graph.node_count() < 2) return std::nullopt;
  return 2.0 * static_cast<double>(graph.edge_count()) / (n * (n - 1.0));
}

DiameterResult ExactDiameter(const Graph& graph) {
  const NodeId n = graph.node_count();
  if (n == 0) return {};
  {
    BfsScratch scratch(n);
    NodeId reached = 0;
    scratch.Eccentricity(graph, 0, &reached);
    if (reached != n) return {};
  }

  std::uint32_t best = 0;
#pragma omp parallel reduction(max : best)
  {
    BfsScratch scratch(n);
#pragma omp for schedule(dynamic, 16)
    for (std::int64_t s = 0; s < static_cast<std::int64_t>(n); ++s) {
      best = std::max(best, scratch.Eccentricity(graph, static_cast<NodeId>(s)));
    }
  }
  return {best, false};
}

DiameterResult SampledDiameter(const Graph& graph, NodeId sources) {
  const NodeId n = graph.node_count();
  if (n == 0) return {std::nullopt, true};
  BfsScratch scratch(n);
  NodeId reached = 0;
  NodeId farthest = 0;
  std::uint32_t best = scratch.Eccentricity(graph, 0, &reached, &farthest);
  if (reached != n) return {std::nullopt, true};
  best = std::max(best, scratch.Eccentricity(graph, farthest));

  const NodeId count = std::max<NodeId>(1, std::min(sources, n));
#pragma omp parallel reduction(max : best)
  {
    BfsScratch local(n);
#pragma omp for schedule(dynamic, 1)
    for (std::int64_t k = 0; k < static_cast<std::int64_t>(count); ++k) {
      const auto source = static_cast<NodeId>(
          static_cast<std::uint64_t>(k) * n / count);
      best = std::max(best, local.Eccentricity(graph, source));
    }
  }
  return {best, true};
}

std::uint64_t IntersectionSize(std::span<const NodeId> a,
                               std::span<const NodeId> b) {
  if (a.size() > b.size()) std::swap(a, b);
  std::uint64_t count = 0;
  if (a.size() * 32 < b.size()) {
    auto lo = b.begin();
    for (NodeId x : a) {
      lo = std::lower_bound(lo, b.end(), x);
      if (lo == b.end()) break;
      if (*lo == x) ++count;
    }
    return count;
  }
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      ++count;
      ++i;
      ++j;
    }
  }
  return count;
}

std::vector<std::uint64_t> TrianglesPerNode(const Graph& graph) {
  const NodeId n = graph.node_count();
  std::vector<std::uint64_t> triangles(n, 0);
#pragma omp parallel for schedule(dynamic, 64)
  for (std::int64_t i = 0; i < static_cast<std::int64_t>(n); ++i) {
    const auto v = static_cast<NodeId>(i);
    const auto adj = graph.neighbors(v);
    std::uint64_t closed = 0;
    for (NodeId u : adj) closed += IntersectionSize(adj, graph.neighbors(u));
    // Each triangle at v is seen from both of its other corners.
    triangles[v] = closed / 2;
  }
  return triangles;
}

std::uint64_t TriangleCount(const Graph& graph) {
  const auto per_node = TrianglesPerNode(graph);
  std::uint64_t total = 0;
  for (std::uint64_t t : per_node) total += t;
  return total / 3;
}

double AverageClustering(const Graph& graph, ClusteringConvention convention) {
  const NodeId n = graph.node_count();
  if (n == 0) return 0.0;
  const auto triangles = TrianglesPerNode(graph);
  double sum = 0.0;
  NodeId counted = 0;
  for (NodeId v = 0; v < n; ++v) {
    const double d = graph.degree(v);
    if (graph.degree(v) < 2) {
      if (convention == ClusteringConvention::kZeroForLowDegree) ++counted;
      continue;
    }
    sum += 2.0 * static_cast<double>(triangles[v]) / (d * (d - 1.0));
    ++counted;
  }
  return counted == 0 ? 0.0 : sum / counted;
}

std::optional<double> Assortativity(const Graph& graph) {
  const std::uint64_t m = graph.edge_count();
  if (m == 0) return std::nullopt;

  long double product = 0;
  long double mean = 0;
  long double square = 0;
  std::uint32_t first_degree = 0;
  bool varied = false;
  bool seen = false;
  for (NodeId u = 0; u < graph.node_count(); ++u) {
    const long double du = graph.degree(u);
    for (NodeId v : graph.neighbors(u)) {
      if (v < u) continue;
      const long double dv = graph.degree(v);
      product += du * dv;
      mean += 0.5L * (du + dv);
      square += 0.5L * (du * du + dv * dv);
      if (!seen) {
        first_degree = graph.degree(u);
        seen = true;
      }
      varied = varied || graph.degree(u) != first_degree ||
               graph.degree(v) != first_degree;
    }
  }
  if (!varied) return std::nullopt;
  const long double inv_m = 1.0L / static_cast<long double>(m);
  const long double mean_sq = (mean * inv_m) * (mean * inv_m);
  const long double numerator = product * inv_m - mean_sq;
  const long double denominator = square * inv_m - mean_sq;
  if (denominator <= 0) return std::nullopt;
  return static_cast<double>(numerator / denominator);
}

std::map<std::uint32_t, std::uint64_t> DegreeHistogram(const Graph& graph) {
  std::map<std::uint32_t, std::uint64_t> histogram;
  for (NodeId v = 0; v < graph.node_count(); ++v) ++histogram[graph.degree(v)];
  return histogram;
}

std::vector<CcdfPoint> DegreeCcdf(
    const Graph& graph, std::optional<std::span<const NodeId>> restrict_to) {
  std::map<std::uint32_t, std::uint64_t> histogram;
  if (restrict_to) {
    for (NodeId v : *restrict_to) ++histogram[graph.degree(v)];
  } else {
    histogram = DegreeHistogram(graph);
  }
  std::vector<CcdfPoint> ccdf;
  ccdf.reserve(histogram.size());
  std::uint64_t above = 0;
  for (auto it = histogram.rbegin(); it != histogram.rend(); ++it) {
    above += it->second;
    ccdf.push_back({it->first, above});
  }
  std::reverse(ccdf.begin(), ccdf.end());
  return ccdf;
}

std::optional<double> FitPowerLawExponent(std::span<const CcdfPoint> ccdf) {
  std::vector<std::pair<double, double>> points;
  for (const CcdfPoint& p : ccdf) {
    if (p.degree == 0 || p.count == 0) continue;
    points.emplace_back(std::log(static_cast<double>(p.degree)),
                        std::log(static_cast<double>(p.count)));
  }
  if (points.size() < 3) return std::nullopt;
  double mx = 0;
  double my = 0;
  for (const auto& [x, y] : points) {
    mx += x;
    my += y;
  }
  mx /= static_cast<double>(points.size());
  my /= static_cast<double>(points.size());
  double sxy = 0;
  double sxx = 0;
  for (const auto& [x, y] : points) {
    sxy += (x - mx) * (y - my);
    sxx += (x - mx) * (x - mx);
  }
  if (sxx == 0) return std::nullopt;
  return 1.0 - sxy / sxx;
}

std::map<std::uint32_t, double> KnnCurve(const Graph& graph) {
  std::map<std::uint32_t, std::pair<double, std::uint64_t>> sums;
  for (NodeId v = 0; v < graph.node_count(); ++v) {
    const std::uint32_t d = graph.degree(v);
    if (d == 0) continue;
    std::uint64_t neighbor_degrees = 0;
    for (NodeId u : graph.neighbors(v)) neighbor_degrees += graph.degree(u);
    auto& [sum, count] = sums[d];
    sum += static_cast<double>(neighbor_degrees) / d;
    ++count;
  }
  std::map<std::uint32_t, double> curve;
  for (const auto& [degree, entry] : sums) {
    curve[degree] = entry.first / static_cast<double>(entry.second);
  }
  return curve;
}

}  // namespace sccg::metrics
