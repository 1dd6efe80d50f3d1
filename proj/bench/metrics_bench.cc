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

#include <benchmark/benchmark.h>

#include "sccg/baseline.h"
#include "sccg/metrics.h"
#include "sccg/metrics_serial.h"
#include "sccg/sccg.h"
#include "sccg/seed.h"

namespace {

const sccg::Graph& SccgGraph() {
  static const sccg::Graph g = sccg::GenerateSccg({sccg::NamedSeed("k3"), 6}).graph;
  return g;
}

const sccg::Graph& BaGraph() {
  static const sccg::Graph g = sccg::GenerateBarabasiAlbert({3, 2, 20000, 1});
  return g;
}

const sccg::Graph& Pick(const benchmark::State& state) {
  return state.range(0) == 0 ? SccgGraph() : BaGraph();
}

void BM_DiameterSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(sccg::metrics::serial::ExactDiameter(Pick(state)));
}
void BM_DiameterParallel(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(sccg::metrics::ExactDiameter(Pick(state)));
}
void BM_TrianglesSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(sccg::metrics::serial::TriangleCount(Pick(state)));
}
void BM_TrianglesParallel(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(sccg::metrics::TriangleCount(Pick(state)));
}
void BM_ClusteringSerial(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(sccg::metrics::serial::AverageClustering(Pick(state)));
  }
}
void BM_ClusteringParallel(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(sccg::metrics::AverageClustering(Pick(state)));
}

// Arg 0: SCCG(K3, m=6), 12288 nodes. Arg 1: BA, 20000 nodes.
BENCHMARK(BM_DiameterSerial)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DiameterParallel)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TrianglesSerial)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TrianglesParallel)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ClusteringSerial)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ClusteringParallel)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
