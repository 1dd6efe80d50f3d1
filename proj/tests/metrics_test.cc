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

#include <gtest/gtest.h>

#include <omp.h>

#include <cmath>
#include <random>

#include "oracles.h"
#include "sccg/baseline.h"
#include "sccg/metrics.h"
#include "sccg/metrics_serial.h"
#include "sccg/sccg.h"
#include "sccg/seed.h"

namespace sccg {
namespace {

Graph Seed(const char* name) { return NamedSeed(name).graph(); }

Graph TriangleWithPendant() {
  const std::vector<Edge> edges{{0, 1}, {0, 2}, {1, 2}, {2, 3}};
  return BuildGraph(edges, 4);
}

TEST(DensityTest, Examples) {
  EXPECT_DOUBLE_EQ(*metrics::Density(Seed("k4")), 1.0);
  EXPECT_NEAR(*metrics::Density(Seed("p3")), 0.6667, 1e-4);
  EXPECT_FALSE(metrics::Density(BuildGraph({}, 1)).has_value());
}

TEST(DiameterTest, Examples) {
  EXPECT_EQ(metrics::ExactDiameter(Seed("c8")).value, 4);
  EXPECT_FALSE(metrics::ExactDiameter(BuildGraph({}, 3)).value.has_value());
  EXPECT_EQ(metrics::ExactDiameter(BuildGraph({}, 1)).value, 0);
}

TEST(DiameterTest, SampledIsLowerBound) {
  const Graph g = GenerateBarabasiAlbert({3, 2, 3000, 4});
  const auto exact = metrics::ExactDiameter(g);
  const auto sampled = metrics::SampledDiameter(g, 8);
  ASSERT_TRUE(sampled.value.has_value());
  EXPECT_TRUE(sampled.lower_bound);
  EXPECT_FALSE(exact.lower_bound);
  EXPECT_LE(*sampled.value, *exact.value);
  EXPECT_GE(*sampled.value, *exact.value - 2);
}

TEST(ClusteringTest, Examples) {
  EXPECT_DOUBLE_EQ(metrics::AverageClustering(Seed("k4")), 1.0);
  EXPECT_DOUBLE_EQ(metrics::AverageClustering(Seed("s4")), 0.0);
  EXPECT_NEAR(metrics::AverageClustering(TriangleWithPendant()), 0.5833, 1e-4);
  EXPECT_NEAR(metrics::AverageClustering(TriangleWithPendant(),
                                         metrics::ClusteringConvention::kSkipLowDegree),
              (1 + 1 + 1.0 / 3) / 3, 1e-12);
}

TEST(TriangleTest, Examples) {
  EXPECT_EQ(metrics::TriangleCount(Seed("k3")), 1u);
  EXPECT_EQ(metrics::TriangleCount(Seed("k4")), 4u);
  EXPECT_EQ(metrics::TriangleCount(Seed("c5")), 0u);
}

TEST(AssortativityTest, Examples) {
  for (const char* star : {"s3", "s4", "s9"}) {
    EXPECT_NEAR(*metrics::Assortativity(Seed(star)), -1.0, 1e-12) << star;
  }
  EXPECT_FALSE(metrics::Assortativity(Seed("k5")).has_value());
  EXPECT_FALSE(metrics::Assortativity(Seed("c6")).has_value());
  EXPECT_FALSE(metrics::Assortativity(BuildGraph({}, 3)).has_value());
  for (int m = 2; m <= 4; ++m) {
    const Graph g = GenerateSccg({NamedSeed("k3"), m}).graph;
    EXPECT_LT(*metrics::Assortativity(g), 0.0) << m;
  }
}

TEST(CcdfTest, Examples) {
  const auto k3 = metrics::DegreeCcdf(Seed("k3"));
  ASSERT_EQ(k3.size(), 1u);
  EXPECT_EQ(k3[0].degree, 2u);
  EXPECT_EQ(k3[0].count, 3u);
  const std::vector<NodeId> none;
  EXPECT_TRUE(metrics::DegreeCcdf(Seed("k3"), std::span<const NodeId>(none)).empty());
  const auto star = metrics::DegreeCcdf(Seed("s4"));
  ASSERT_EQ(star.size(), 2u);
  EXPECT_EQ(star[0].count, 4u);
  EXPECT_EQ(star[1].count, 1u);
}

TEST(CcdfTest, HubRestriction) {
  const SccgResult r = GenerateSccg({NamedSeed("k3"), 4});
  const auto hubs = TraceHubs(r.trace);
  EXPECT_EQ(hubs.size(), 40u);
  const auto ccdf = metrics::DegreeCcdf(r.graph, std::span<const NodeId>(hubs));
  EXPECT_EQ(ccdf.front().count, 40u);
  EXPECT_EQ(ccdf.back().count, 1u);
  EXPECT_EQ(ccdf.back().degree, PredictedTopHubDegree(NamedSeed("k3"), 4));
}

TEST(PowerLawFitTest, SyntheticCcdf) {
  std::vector<metrics::CcdfPoint> points;
  for (std::uint32_t k = 1; k <= 1000; k *= 2) points.push_back({k, (1u << 20) / k});
  EXPECT_NEAR(*metrics::FitPowerLawExponent(points), 2.0, 1e-6);
}

TEST(PowerLawFitTest, TooFewPoints) {
  const std::vector<metrics::CcdfPoint> two{{1, 10}, {2, 5}};
  EXPECT_FALSE(metrics::FitPowerLawExponent(two).has_value());
}

TEST(KnnTest, Examples) {
  const auto k4 = metrics::KnnCurve(Seed("k4"));
  EXPECT_EQ(k4, (std::map<std::uint32_t, double>{{3, 3.0}}));
  const auto s4 = metrics::KnnCurve(Seed("s4"));
  EXPECT_EQ(s4, (std::map<std::uint32_t, double>{{1, 3.0}, {3, 1.0}}));
}

TEST(HistogramTest, Star) {
  EXPECT_EQ(metrics::DegreeHistogram(Seed("s4")),
            (std::map<std::uint32_t, std::uint64_t>{{1, 3}, {3, 1}}));
}

TEST(IntersectionTest, GallopingAgreesWithMerge) {
  std::vector<NodeId> small{3, 50, 700, 701, 9999};
  std::vector<NodeId> large;
  for (NodeId i = 0; i < 10000; i += 7) large.push_back(i);
  std::uint64_t expected = 0;
  for (NodeId x : small) expected += std::binary_search(large.begin(), large.end(), x);
  EXPECT_EQ(metrics::IntersectionSize(small, large), expected);
  EXPECT_EQ(metrics::IntersectionSize(large, small), expected);
}

class RandomGraphOracleTest : public ::testing::TestWithParam<int> {};

TEST_P(RandomGraphOracleTest, KernelsMatchOracles) {
  std::mt19937_64 rng(static_cast<std::uint64_t>(GetParam()));
  const NodeId n = 5 + static_cast<NodeId>(rng() % 120);
  const double p = 0.02 + 0.3 * static_cast<double>(rng() % 100) / 100.0;
  const Graph g = oracle::RandomGraph(rng, n, p, GetParam() % 4 != 0);

  EXPECT_EQ(metrics::ExactDiameter(g).value, oracle::FloydWarshallDiameter(g));
  EXPECT_EQ(metrics::serial::ExactDiameter(g).value, oracle::FloydWarshallDiameter(g));
  EXPECT_EQ(metrics::TriangleCount(g), oracle::BruteForceTriangles(g));
  EXPECT_EQ(metrics::serial::TriangleCount(g), oracle::BruteForceTriangles(g));
  EXPECT_NEAR(metrics::AverageClustering(g), oracle::BruteForceClustering(g), 1e-12);
  const auto r = metrics::Assortativity(g);
  const auto expected = oracle::PearsonAssortativity(g);
  ASSERT_EQ(r.has_value(), expected.has_value());
  if (r) EXPECT_NEAR(*r, *expected, 1e-9);
}

INSTANTIATE_TEST_SUITE_P(Seeds, RandomGraphOracleTest, ::testing::Range(1, 41));

TEST(ParallelTest, MatchesSerialAcrossThreadCounts) {
  const Graph sccg = GenerateSccg({NamedSeed("k4"), 4}).graph;
  const Graph ba = GenerateBarabasiAlbert({3, 3, 5000, 11});
  const int saved = omp_get_max_threads();
  for (const Graph* g : {&sccg, &ba}) {
    const auto d = metrics::serial::ExactDiameter(*g);
    const auto tri = metrics::serial::TrianglesPerNode(*g);
    const double c = metrics::serial::AverageClustering(*g);
    for (int threads : {1, 2, 4, 7}) {
      omp_set_num_threads(threads);
      EXPECT_EQ(metrics::ExactDiameter(*g).value, d.value) << threads;
      EXPECT_EQ(metrics::TrianglesPerNode(*g), tri) << threads;
      EXPECT_EQ(metrics::AverageClustering(*g), c) << threads;
    }
  }
  omp_set_num_threads(saved);
}

}  // namespace
}  // namespace sccg
