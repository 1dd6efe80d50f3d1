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

#include "sccg/report.h"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "json.hpp"
#include "sccg/error.h"

namespace sccg {

MetricSelection MetricSelection::Parse(std::string_view list) {
  if (list == "all") return MetricSelection{};
  MetricSelection s{false, false, false, false, false, false, false, false};
  std::size_t start = 0;
  while (start <= list.size()) {
    const std::size_t comma = std::min(list.find(',', start), list.size());
    const std::string_view name = list.substr(start, comma - start);
    if (name == "density") {
      s.density = true;
    } else if (name == "diameter") {
      s.diameter = true;
    } else if (name == "clustering") {
      s.clustering = true;
    } else if (name == "triangles") {
      s.triangles = true;
    } else if (name == "assortativity") {
      s.assortativity = true;
    } else if (name == "histogram") {
      s.histogram = true;
    } else if (name == "gamma") {
      s.gamma = true;
    } else if (name == "knn") {
      s.knn = true;
    } else {
      throw InvalidArgument("unknown metric '" + std::string(name) + "'");
    }
    start = comma + 1;
  }
  return s;
}

MetricsReport ComputeReport(const Graph& graph, const ReportOptions& options) {
  const MetricSelection& sel = options.selection;
  MetricsReport report;
  report.selection = sel;
  report.node_count = graph.node_count();
  report.edge_count = graph.edge_count();
  if (sel.density) report.density = metrics::Density(graph);
  if (sel.diameter) {
    report.diameter = options.sample_diameter &&
                              graph.node_count() >= metrics::kSampleThreshold
                          ? metrics::SampledDiameter(graph)
                          : metrics::ExactDiameter(graph);
  }
  if (sel.clustering) {
    report.avg_clustering = metrics::AverageClustering(graph, options.clustering);
  }
  if (sel.triangles) report.triangle_count = metrics::TriangleCount(graph);
  if (sel.assortativity) report.assortativity = metrics::Assortativity(graph);
  if (sel.histogram) report.degree_histogram = metrics::DegreeHistogram(graph);
  if (sel.gamma) {
    std::vector<metrics::CcdfPoint> ccdf;
    if (options.hubs) {
      for (NodeId hub : *options.hubs) {
        if (hub >= graph.node_count()) {
          throw InvalidArgument("hub id " + std::to_string(hub) +
                                " is not a node of the graph");
        }
      }
      ccdf = metrics::DegreeCcdf(graph, std::span<const NodeId>(*options.hubs));
      report.gamma_from_hubs = true;
    } else {
      ccdf = metrics::DegreeCcdf(graph);
    }
    report.fitted_gamma = metrics::FitPowerLawExponent(ccdf);
  }
  if (sel.knn) report.knn_curve = metrics::KnnCurve(graph);
  return report;
}

std::string FormatDouble(double value) {
  char buffer[64];
  auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value);
  return std::string(buffer, ptr);
}

namespace {

using Json = nlohmann::ordered_json;

Json OptionalNumber(const std::optional<double>& value) {
  return value ? Json(*value) : Json(nullptr);
}

}  // namespace

std::string ReportToJson(const MetricsReport& r) {
  Json doc;
  doc["node_count"] = r.node_count;
  doc["edge_count"] = r.edge_count;
  const MetricSelection& sel = r.selection;
  if (sel.density) {
    doc["density"] = OptionalNumber(r.density);
    doc["density_defined"] = r.density.has_value();
  }
  if (sel.diameter) {
    Json diameter;
    diameter["value"] =
        r.diameter.value ? Json(*r.diameter.value) : Json(nullptr);
    diameter["status"] = !r.diameter.value       ? "unreachable"
                         : r.diameter.lower_bound ? "lower_bound"
                                                  : "exact";
    doc["diameter"] = std::move(diameter);
  }
  if (sel.clustering) doc["avg_clustering"] = r.avg_clustering;
  if (sel.triangles) doc["triangle_count"] = r.triangle_count;
  if (sel.assortativity) {
    doc["assortativity_r"] = OptionalNumber(r.assortativity);
    doc["assortativity_defined"] = r.assortativity.has_value();
  }
  if (sel.histogram) {
    Json histogram = Json::array();
    for (const auto& [degree, count] : r.degree_histogram) {
      histogram.push_back(Json::array({degree, count}));
    }
    doc["degree_histogram"] = std::move(histogram);
  }
  if (sel.gamma) {
    doc["fitted_gamma"] = OptionalNumber(r.fitted_gamma);
    doc["gamma_scope"] = r.gamma_from_hubs ? "hubs" : "all_nodes";
  }
  if (sel.knn) {
    Json curve = Json::array();
    for (const auto& [degree, knn] : r.knn_curve) {
      curve.push_back(Json::array({degree, knn}));
    }
    doc["knn_curve"] = std::move(curve);
  }
  return doc.dump(2) + "\n";
}

std::string ReportToCsv(const MetricsReport& r) {
  std::ostringstream out;
  auto optional = [](const std::optional<double>& v) {
    return v ? FormatDouble(*v) : std::string("NA");
  };
  out << "metric,value\n";
  out << "node_count," << r.node_count << '\n';
  out << "edge_count," << r.edge_count << '\n';
  const MetricSelection& sel = r.selection;
  if (sel.density) out << "density," << optional(r.density) << '\n';
  if (sel.diameter) {
    out << "diameter,"
        << (r.diameter.value ? std::to_string(*r.diameter.value) : "NA") << '\n';
    out << "diameter_status,"
        << (!r.diameter.value       ? "unreachable"
            : r.diameter.lower_bound ? "lower_bound"
                                     : "exact")
        << '\n';
  }
  if (sel.clustering) out << "avg_clustering," << FormatDouble(r.avg_clustering) << '\n';
  if (sel.triangles) out << "triangle_count," << r.triangle_count << '\n';
  if (sel.assortativity) out << "assortativity_r," << optional(r.assortativity) << '\n';
  if (sel.gamma) out << "fitted_gamma," << optional(r.fitted_gamma) << '\n';
  return out.str();
}

std::string HistogramToCsv(
    const std::map<std::uint32_t, std::uint64_t>& histogram) {
  std::ostringstream out;
  out << "degree,count\n";
  for (const auto& [degree, count] : histogram) out << degree << ',' << count << '\n';
  return out.str();
}

std::string KnnToCsv(const std::map<std::uint32_t, double>& curve) {
  std::ostringstream out;
  out << "degree,knn\n";
  for (const auto& [degree, knn] : curve) {
    out << degree << ',' << FormatDouble(knn) << '\n';
  }
  return out.str();
}

}  // namespace sccg
