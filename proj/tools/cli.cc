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

#include "cli.h"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "sccg/baseline.h"
#include "sccg/corona.h"
#include "sccg/error.h"
#include "sccg/io.h"
#include "sccg/metrics.h"
#include "sccg/report.h"
#include "sccg/sccg.h"
#include "sccg/seed.h"
#include "sccg/size_cap.h"

#ifndef SCCG_VERSION
#define SCCG_VERSION "0.0.0"
#endif

namespace sccg::cli {
namespace {

namespace fs = std::filesystem;
using Json = nlohmann::ordered_json;

const std::vector<std::string> kModels = {"sccg", "corona", "ba", "pfsf",
                                          "kronecker"};

struct OutputFile {
  std::string name;
  std::string content;
};

void RemoveAll(const std::vector<fs::path>& paths) {
  for (const auto& p : paths) {
    std::error_code ignored;
    fs::remove(p, ignored);
  }
}

// Writes every file or none: files already written are removed on failure.
void WriteOutputs(const fs::path& dir, const std::vector<OutputFile>& files) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw IoError("cannot create '" + dir.string() + "': " + ec.message());
  std::vector<fs::path> written;
  for (const OutputFile& file : files) {
    const fs::path path = dir / file.name;
    std::ofstream stream(path, std::ios::binary | std::ios::trunc);
    if (stream) {
      written.push_back(path);
      stream.write(file.content.data(),
                   static_cast<std::streamsize>(file.content.size()));
      stream.close();
    }
    if (!stream) {
      RemoveAll(written);
      throw IoError("cannot write '" + path.string() + "'");
    }
  }
}

// Appends manifest.json, which hashes every other output.
void AddManifest(std::vector<OutputFile>& files, const std::string& command,
                 Json parameters, Json extra = nullptr) {
  Json manifest;
  manifest["tool"] = "sccg";
  manifest["version"] = SCCG_VERSION;
  manifest["command"] = command;
  manifest["parameters"] = std::move(parameters);
  if (!extra.is_null()) {
    for (auto& [key, value] : extra.items()) manifest[key] = value;
  }
  Json hashes;
  for (const OutputFile& file : files) hashes[file.name] = Sha256Hex(file.content);
  manifest["outputs"] = std::move(hashes);
  files.push_back({"manifest.json", manifest.dump(2) + "\n"});
}

std::uint64_t ResolveSizeCap(const CLI::Option* flag, std::uint64_t value) {
  if (flag->count() > 0) {
    if (value == 0) throw InvalidArgument("--size-cap must be positive");
    return value;
  }
  return SizeCapFromEnvironment();
}

void Require(const CLI::Option* option, const std::string& model) {
  if (option->count() == 0) {
    throw InvalidArgument(option->get_name() + " is required for model " + model);
  }
}

// A readable file is parsed as a 0/1 matrix; anything else as a seed name
// whose adjacency gets a self-loop on every node.
KroneckerSeed ResolveKroneckerSeed(const std::string& source) {
  std::error_code ec;
  if (fs::is_regular_file(source, ec)) {
    std::ifstream in(source);
    if (!in) throw IoError("cannot open '" + source + "'");
    return KroneckerSeed::Parse(in);
  }
  return KroneckerSeed::WithSelfLoops(NamedSeed(source).graph());
}

DeepOffshootLinking ParseDeepOffshoot(const std::string& value) {
  if (value == "full") return DeepOffshootLinking::kFullChain;
  if (value == "nearest") return DeepOffshootLinking::kNearestHubOnly;
  throw InvalidArgument("--deep-offshoot must be 'full' or 'nearest'");
}

// ---------------------------------------------------------------- generate

struct GenerateFlags {
  std::string model;
  std::string seed;
  int steps = 0;
  int t = 0;
  NodeId n = 0;
  NodeId links = 2;
  NodeId initial = 3;
  std::uint64_t rng_seed = 1;
  std::string out;
  std::uint64_t size_cap = 0;
  std::string deep_offshoot = "full";

  CLI::Option* seed_opt = nullptr;
  CLI::Option* steps_opt = nullptr;
  CLI::Option* t_opt = nullptr;
  CLI::Option* n_opt = nullptr;
  CLI::Option* size_cap_opt = nullptr;
};

int RunGenerate(const GenerateFlags& f, std::ostream& out) {
  const std::uint64_t cap = ResolveSizeCap(f.size_cap_opt, f.size_cap);
  Json params;
  params["model"] = f.model;
  std::vector<OutputFile> files;
  Graph graph;

  if (f.model == "sccg" || f.model == "corona") {
    Require(f.seed_opt, f.model);
    Require(f.steps_opt, f.model);
    SeedGraph seed = NamedSeed(f.seed);
    params["seed"] = f.seed;
    params["steps"] = f.steps;
    if (f.model == "sccg") {
      HubPolicy policy;
      policy.deep_offshoot = ParseDeepOffshoot(f.deep_offshoot);
      params["deep_offshoot"] = f.deep_offshoot;
      SccgResult result = GenerateSccg({std::move(seed), f.steps, policy, cap});
      graph = std::move(result.graph);
      files.push_back({"edges.txt", EdgeListText(graph)});
      files.push_back({"meta.csv", MetaCsvText(result.meta)});
      files.push_back({"trace.json", TraceToJson(result.trace)});
    } else {
      graph = GenerateCoronaGraph(seed, f.steps, cap).graph;
      files.push_back({"edges.txt", EdgeListText(graph)});
    }
  } else if (f.model == "ba") {
    Require(f.n_opt, f.model);
    params["n"] = f.n;
    params["initial"] = f.initial;
    params["links"] = f.links;
    params["rng_seed"] = f.rng_seed;
    params["rng"] = "mt19937_64";
    graph = GenerateBarabasiAlbert({f.initial, f.links, f.n, f.rng_seed}, cap);
    files.push_back({"edges.txt", EdgeListText(graph)});
  } else if (f.model == "pfsf") {
    Require(f.t_opt, f.model);
    params["t"] = f.t;
    graph = GeneratePseudofractal(f.t, cap);
    files.push_back({"edges.txt", EdgeListText(graph)});
  } else {
    Require(f.seed_opt, f.model);
    Require(f.steps_opt, f.model);
    params["seed"] = f.seed;
    params["steps"] = f.steps;
    graph = GenerateKronecker(ResolveKroneckerSeed(f.seed), f.steps, cap);
    files.push_back({"edges.txt", EdgeListText(graph)});
  }
  params["size_cap"] = cap;

  Json summary;
  summary["node_count"] = graph.node_count();
  summary["edge_count"] = graph.edge_count();
  AddManifest(files, "generate", std::move(params), {{"graph", summary}});
  WriteOutputs(f.out, files);
  out << "wrote " << graph.node_count() << " nodes, " << graph.edge_count()
      << " edges to " << f.out << "\n";
  return kExitOk;
}

// ----------------------------------------------------------------- analyze

struct AnalyzeFlags {
  std::string input;
  std::string metrics = "all";
  std::string format = "json";
  std::string hubs_from;
  bool sample = false;
  std::string out;
};

int RunAnalyze(const AnalyzeFlags& f, std::ostream& out) {
  Graph graph;
  {
    std::ifstream in(f.input);
    if (!in) throw IoError("cannot open '" + f.input + "'");
    graph = ReadEdgeList(in);
  }
  ReportOptions options;
  options.selection = MetricSelection::Parse(f.metrics);
  options.sample_diameter = f.sample;
  if (!f.hubs_from.empty()) {
    std::ifstream in(f.hubs_from);
    if (!in) throw IoError("cannot open '" + f.hubs_from + "'");
    options.hubs = ReadTraceHubs(in);
  }
  const MetricsReport report = ComputeReport(graph, options);

  if (f.format == "json") {
    const std::string text = ReportToJson(report);
    if (f.out.empty()) {
      out << text;
    } else {
      const fs::path path(f.out);
      WriteOutputs(path.has_parent_path() ? path.parent_path() : fs::path("."),
                   {{path.filename().string(), text}});
    }
    return kExitOk;
  }

  if (f.out.empty()) {
    out << ReportToCsv(report);
    return kExitOk;
  }
  std::vector<OutputFile> files{{"report.csv", ReportToCsv(report)}};
  if (report.selection.histogram) {
    files.push_back({"degree_histogram.csv", HistogramToCsv(report.degree_histogram)});
  }
  if (report.selection.knn) files.push_back({"knn.csv", KnnToCsv(report.knn_curve)});
  WriteOutputs(f.out, files);
  return kExitOk;
}

// ----------------------------------------------------------------- compare

struct CompareFlags {
  std::vector<std::string> models;
  std::string seed = "k3";
  int steps = 4;
  NodeId links = 2;
  NodeId initial = 3;
  std::uint64_t rng_seed = 1;
  bool sample = false;
  std::string out;
  std::uint64_t size_cap = 0;
  CLI::Option* size_cap_opt = nullptr;
};

struct ComparePoint {
  Graph graph;
  Json parameter;
};

ComparePoint BuildComparePoint(const std::string& model, const SeedGraph& seed,
                               int m, std::uint64_t target,
                               const CompareFlags& f, std::uint64_t cap) {
  ComparePoint point;
  if (model == "sccg") {
    point.graph = GenerateSccg({seed, m, HubPolicy{}, cap}).graph;
    point.parameter = {{"m", m}};
  } else if (model == "corona") {
    point.graph = GenerateCoronaGraph(seed, m, cap).graph;
    point.parameter = {{"m", m}};
  } else if (model == "ba") {
    point.graph = GenerateBarabasiAlbert(
        {f.initial, f.links, static_cast<NodeId>(target), f.rng_seed}, cap);
    point.parameter = {{"initial", f.initial},
                       {"links", f.links},
                       {"rng_seed", f.rng_seed}};
  } else if (model == "pfsf") {
    int t = 0;
    while (PseudofractalNodeCount(t + 1) <= target) ++t;
    point.graph = GeneratePseudofractal(t, cap);
    point.parameter = {{"t", t}};
  } else {
    const KroneckerSeed kseed = KroneckerSeed::WithSelfLoops(seed.graph());
    int k = 1;
    while (true) {
      auto next = CheckedPow(kseed.dimension(), static_cast<std::uint64_t>(k + 1));
      if (!next || *next > target) break;
      ++k;
    }
    point.graph = GenerateKronecker(kseed, k, cap);
    point.parameter = {{"k", k}};
  }
  return point;
}

int RunCompare(const CompareFlags& f, std::ostream& out) {
  if (f.models.empty()) throw InvalidArgument("--models must name at least one model");
  for (const std::string& model : f.models) {
    if (std::find(kModels.begin(), kModels.end(), model) == kModels.end()) {
      throw InvalidArgument("unknown model '" + model + "'");
    }
  }
  if (f.steps < 1) throw InvalidArgument("--steps must be >= 1");
  const std::uint64_t cap = ResolveSizeCap(f.size_cap_opt, f.size_cap);
  const SeedGraph seed = NamedSeed(f.seed);

  std::vector<std::uint64_t> targets;
  for (int m = 1; m <= f.steps; ++m) {
    std::optional<std::uint64_t> target;
    try {
      target = CoronaNodeCount(seed.n(), static_cast<std::uint64_t>(m));
    } catch (const Error&) {
    }
    EnforceSizeCap(target, cap, "compare schedule");
    targets.push_back(*target);
  }

  std::ostringstream density, diameter, clustering, triangles, assortativity, knn;
  for (auto* csv : {&density, &diameter, &clustering, &triangles, &assortativity}) {
    *csv << "model,node_count,value\n";
  }
  knn << "model,node_count,degree,value\n";

  Json points = Json::array();
  for (const std::string& model : f.models) {
    for (int m = 1; m <= f.steps; ++m) {
      const std::uint64_t target = targets[static_cast<std::size_t>(m - 1)];
      ComparePoint point = BuildComparePoint(model, seed, m, target, f, cap);
      const Graph& g = point.graph;
      const std::string prefix = model + "," + std::to_string(g.node_count()) + ",";

      const auto d = metrics::Density(g);
      density << prefix << (d ? FormatDouble(*d) : "NA") << '\n';
      const auto diam = f.sample && g.node_count() >= metrics::kSampleThreshold
                            ? metrics::SampledDiameter(g)
                            : metrics::ExactDiameter(g);
      diameter << prefix << (diam.value ? std::to_string(*diam.value) : "NA") << '\n';
      clustering << prefix << FormatDouble(metrics::AverageClustering(g)) << '\n';
      triangles << prefix << metrics::TriangleCount(g) << '\n';
      const auto r = metrics::Assortativity(g);
      assortativity << prefix << (r ? FormatDouble(*r) : "NA") << '\n';
      for (const auto& [degree, value] : metrics::KnnCurve(g)) {
        knn << prefix << degree << ',' << FormatDouble(value) << '\n';
      }

      Json entry;
      entry["model"] = model;
      entry["target_nodes"] = target;
      entry["node_count"] = g.node_count();
      entry["edge_count"] = g.edge_count();
      entry["diameter_status"] = !diam.value       ? "unreachable"
                                 : diam.lower_bound ? "lower_bound"
                                                    : "exact";
      entry["parameter"] = std::move(point.parameter);
      points.push_back(std::move(entry));
    }
  }

  std::vector<OutputFile> files{{"density.csv", density.str()},
                                {"diameter.csv", diameter.str()},
                                {"clustering.csv", clustering.str()},
                                {"triangles.csv", triangles.str()},
                                {"assortativity.csv", assortativity.str()},
                                {"knn.csv", knn.str()}};
  Json params;
  params["models"] = f.models;
  params["seed"] = f.seed;
  params["steps"] = f.steps;
  params["links"] = f.links;
  params["initial"] = f.initial;
  params["rng_seed"] = f.rng_seed;
  params["rng"] = "mt19937_64";
  params["sample"] = f.sample;
  params["size_cap"] = cap;
  AddManifest(files, "compare", std::move(params), {{"points", points}});
  WriteOutputs(f.out, files);
  out << "wrote " << files.size() << " files to " << f.out << "\n";
  return kExitOk;
}

}  // namespace

int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Self-coordinated corona graph generator and analyzer", "sccg"};
  app.set_version_flag("--version", SCCG_VERSION);
  app.require_subcommand(1);

  GenerateFlags gen;
  auto* generate = app.add_subcommand("generate", "Generate a graph");
  generate->add_option("--model", gen.model, "sccg|corona|ba|pfsf|kronecker")
      ->required()
      ->check(CLI::IsMember(kModels));
  gen.seed_opt = generate->add_option(
      "--seed", gen.seed,
      "Seed name (k<n>, s<n>, c<n>, p<n>, g10..g16); for kronecker also a "
      "matrix file");
  gen.steps_opt = generate->add_option(
      "--steps", gen.steps, "Corona/SC steps, or the Kronecker power");
  gen.t_opt = generate->add_option("--t", gen.t, "Pseudofractal step");
  gen.n_opt = generate->add_option("--n", gen.n, "BA target node count");
  generate->add_option("--links", gen.links, "BA links per new node")
      ->capture_default_str();
  generate->add_option("--initial", gen.initial, "BA initial clique size")
      ->capture_default_str();
  generate->add_option("--rng-seed", gen.rng_seed, "BA generator seed")
      ->capture_default_str();
  generate->add_option("--deep-offshoot", gen.deep_offshoot,
                       "Deep offshoot linking: full|nearest")
      ->capture_default_str();
  generate->add_option("--out", gen.out, "Output directory")->required();
  gen.size_cap_opt =
      generate->add_option("--size-cap", gen.size_cap, "Maximum node count");

  AnalyzeFlags ana;
  auto* analyze = app.add_subcommand("analyze", "Compute metrics of an edge list");
  analyze->add_option("input", ana.input, "Edge-list file")->required();
  analyze->add_option("--metrics", ana.metrics,
                      "Comma list of density,diameter,clustering,triangles,"
                      "assortativity,histogram,gamma,knn or 'all'")
      ->capture_default_str();
  analyze->add_option("--format", ana.format, "json|csv")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  analyze->add_option("--hubs-from", ana.hubs_from,
                      "Trace JSON whose hubs restrict the power-law fit");
  analyze->add_flag("--sample", ana.sample,
                    "Sampled lower-bound diameter on large graphs");
  analyze->add_option("--out", ana.out,
                      "Output file (json) or directory (csv); default stdout");

  CompareFlags cmp;
  auto* compare = app.add_subcommand("compare", "Metric series across models");
  compare->add_option("--models", cmp.models, "Comma list of models")
      ->required()
      ->delimiter(',');
  compare->add_option("--seed", cmp.seed, "Seed of the SCCG growth schedule")
      ->capture_default_str();
  compare->add_option("--steps", cmp.steps, "Schedule points m = 1..steps")
      ->capture_default_str();
  compare->add_option("--links", cmp.links)->capture_default_str();
  compare->add_option("--initial", cmp.initial)->capture_default_str();
  compare->add_option("--rng-seed", cmp.rng_seed)->capture_default_str();
  compare->add_flag("--sample", cmp.sample);
  compare->add_option("--out", cmp.out, "Output directory")->required();
  cmp.size_cap_opt = compare->add_option("--size-cap", cmp.size_cap);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*generate) return RunGenerate(gen, out);
    if (*analyze) return RunAnalyze(ana, out);
    return RunCompare(cmp, out);
  } catch (const Error& e) {
    err << "sccg: error: " << e.what() << "\n";
    return static_cast<int>(e.code());
  } catch (const std::exception& e) {
    err << "sccg: internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}

}  // namespace sccg::cli
