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

#ifndef SCCG_REPORT_H_
#define SCCG_REPORT_H_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sccg/graph.h"
#include "sccg/metrics.h"

namespace sccg {

struct MetricSelection {
  bool density = true;
  bool diameter = true;
  bool clustering = true;
  bool triangles = true;
  bool assortativity = true;
  bool histogram = true;
  bool gamma = true;
  bool knn = true;

  // Comma-separated subset of
  // density,diameter,clustering,triangles,assortativity,histogram,gamma,knn
  // or "all". Throws InvalidArgument on unknown names.
  static MetricSelection Parse(std::string_view list);
};

struct ReportOptions {
  MetricSelection selection;
  // Use SampledDiameter for graphs with at least metrics::kSampleThreshold
  // nodes.
  bool sample_diameter = false;
  // Restrict the power-law fit to these nodes (typically trace hubs).
  std::optional<std::vector<NodeId>> hubs;
  metrics::ClusteringConvention clustering =
      metrics::ClusteringConvention::kZeroForLowDegree;
};

struct MetricsReport {
  MetricSelection selection;
  NodeId node_count = 0;
  std::uint64_t edge_count = 0;
  std::optional<double> density;
  metrics::DiameterResult diameter;
  double avg_clustering = 0.0;
  std::uint64_t triangle_count = 0;
  std::optional<double> assortativity;
  std::map<std::uint32_t, std::uint64_t> degree_histogram;
  std::optional<double> fitted_gamma;
  bool gamma_from_hubs = false;
  std::map<std::uint32_t, double> knn_curve;
};

MetricsReport ComputeReport(const Graph& graph, const ReportOptions& options);

// Stable key order; undefined values are null with an explicit flag beside
// them.
std::string ReportToJson(const MetricsReport& report);
// "metric,value" rows for the scalar metrics; undefined values read "NA".
std::string ReportToCsv(const MetricsReport& report);
// "degree,count"
std::string HistogramToCsv(const std::map<std::uint32_t, std::uint64_t>& histogram);
// "degree,knn"
std::string KnnToCsv(const std::map<std::uint32_t, double>& curve);

// Shortest round-trip decimal form used in every CSV and JSON number.
std::string FormatDouble(double value);

}  // namespace sccg

#endif  // SCCG_REPORT_H_
