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

#ifndef SCCG_METRICS_H_
#define SCCG_METRICS_H_

// Graph analytics. The all-sources BFS, triangle and clustering kernels fan
// out over OpenMP threads; their reductions are order-independent (integer
// max/sum, or a serial pass over per-node values), so results do not depend
// on the thread count. Serial reference versions live in metrics_serial.h.

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "sccg/graph.h"

namespace sccg::metrics {

// 2|E| / (|V| (|V| - 1)); empty when |V| < 2.
std::optional<double> Density(const Graph& graph);

struct DiameterResult {
  // Empty when the graph is disconnected.
  std::optional<std::uint32_t> value;
  // True when only a subset of sources was searched.
  bool lower_bound = false;

  friend bool operator==(const DiameterResult&, const DiameterResult&) = default;
};

// Maximum BFS eccentricity over all sources.
DiameterResult ExactDiameter(const Graph& graph);

// Maximum eccentricity over `sources` evenly spaced node ids plus one
// double-sweep endpoint. Always flagged as a lower bound.
DiameterResult SampledDiameter(const Graph& graph, NodeId sources = 64);

// Graphs at or above this node count use SampledDiameter when sampling is
// requested.
inline constexpr NodeId kSampleThreshold = 100'000;

// Number of triangles through each node.
std::vector<std::uint64_t> TrianglesPerNode(const Graph& graph);

std::uint64_t TriangleCount(const Graph& graph);

enum class ClusteringConvention : std::uint8_t {
  // Nodes of degree < 2 contribute C_v = 0 to the mean.
  kZeroForLowDegree,
  // Nodes of degree < 2 are left out of the mean.
  kSkipLowDegree,
};

double AverageClustering(
    const Graph& graph,
    ClusteringConvention convention = ClusteringConvention::kZeroForLowDegree);

// Newman's degree correlation coefficient: the Pearson correlation of the
// degrees at either end of an edge. The printed form with repeated k_i k_j
// factors is read as this standard coefficient. Empty when there are no
// edges or all edge endpoints share one degree.
std::optional<double> Assortativity(const Graph& graph);

std::map<std::uint32_t, std::uint64_t> DegreeHistogram(const Graph& graph);

struct CcdfPoint {
  std::uint32_t degree = 0;
  // Nodes (within the restriction) with degree >= `degree`.
  std::uint64_t count = 0;

  friend bool operator==(const CcdfPoint&, const CcdfPoint&) = default;
};

// Complementary cumulative degree counts, ascending by degree, over all
// nodes or only over `restrict_to`.
std::vector<CcdfPoint> DegreeCcdf(
    const Graph& graph,
    std::optional<std::span<const NodeId>> restrict_to = std::nullopt);

// Least-squares slope s of ln(count) against ln(degree); returns 1 - s.
// Points with degree 0 are ignored. Empty with fewer than 3 usable points.
std::optional<double> FitPowerLawExponent(std::span<const CcdfPoint> ccdf);

// Degree class -> mean over its nodes of the average neighbor degree.
// Isolated nodes are left out.
std::map<std::uint32_t, double> KnnCurve(const Graph& graph);

// Size of |a ∩ b| for sorted ranges; gallops when sizes are lopsided.
std::uint64_t IntersectionSize(std::span<const NodeId> a,
                               std::span<const NodeId> b);

}  // namespace sccg::metrics

#endif  // SCCG_METRICS_H_
