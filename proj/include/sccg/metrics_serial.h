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

#ifndef SCCG_METRICS_SERIAL_H_
#define SCCG_METRICS_SERIAL_H_

// Single-threaded reference kernels. They use deliberately plain algorithms
// (edge-iterator triangle listing, queue-based BFS) and serve as the
// comparison baseline for the OpenMP kernels in tests and benchmarks.

#include <cstdint>
#include <vector>

#include "sccg/graph.h"
#include "sccg/metrics.h"

namespace sccg::metrics::serial {

DiameterResult ExactDiameter(const Graph& graph);

std::vector<std::uint64_t> TrianglesPerNode(const Graph& graph);

std::uint64_t TriangleCount(const Graph& graph);

double AverageClustering(
    const Graph& graph,
    ClusteringConvention convention = ClusteringConvention::kZeroForLowDegree);

}  // namespace sccg::metrics::serial

#endif  // SCCG_METRICS_SERIAL_H_
