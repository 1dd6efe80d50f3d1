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

#include <vector>

#include "sccg/error.h"
#include "sccg/graph.h"
#include "sccg/seed.h"

namespace sccg {
namespace {

TEST(BuildGraphTest, Triangle) {
  const std::vector<Edge> edges{{0, 1}, {1, 2}, {0, 2}};
  const Graph g = BuildGraph(edges, 3);
  EXPECT_EQ(g.node_count(), 3u);
  EXPECT_EQ(g.edge_count(), 3u);
  EXPECT_TRUE(g.HasEdge(2, 0));
}

TEST(BuildGraphTest, IsolatedNode) {
  const Graph g = BuildGraph({}, 1);
  EXPECT_EQ(g.node_count(), 1u);
  EXPECT_EQ(g.edge_count(), 0u);
  EXPECT_EQ(g.degree(0), 0u);
}

TEST(BuildGraphTest, DuplicatesCollapse) {
  const std::vector<Edge> edges{{0, 1}, {0, 1}, {1, 0}};
  const Graph g = BuildGraph(edges, 2);
  EXPECT_EQ(g.edge_count(), 1u);
}

TEST(BuildGraphTest, RejectsSelfLoopAndRange) {
  const std::vector<Edge> loop{{1, 1}};
  EXPECT_THROW(BuildGraph(loop, 2), Error);
  const std::vector<Edge> range{{0, 5}};
  EXPECT_THROW(BuildGraph(range, 2), Error);
}

TEST(GraphTest, NeighborsSortedAndEdgesCanonical) {
  GraphBuilder b;
  b.AddNodes(4);
  b.AddEdge(3, 0);
  b.AddEdge(2, 0);
  b.AddEdge(1, 0);
  EXPECT_FALSE(b.AddEdge(0, 1));
  const Graph g = b.Build();
  const auto nb = g.neighbors(0);
  EXPECT_EQ(std::vector<NodeId>(nb.begin(), nb.end()), (std::vector<NodeId>{1, 2, 3}));
  EXPECT_EQ(g.Edges(), (std::vector<Edge>{{0, 1}, {0, 2}, {0, 3}}));
  EXPECT_EQ(g.MaxDegree(), 3u);
}

TEST(GraphTest, BuilderRoundTrip) {
  const std::vector<Edge> edges{{0, 1}, {1, 2}};
  const Graph g = BuildGraph(edges, 4);
  GraphBuilder b(g);
  b.AddEdge(2, 3);
  const Graph h = b.Build();
  EXPECT_EQ(h.edge_count(), 3u);
  EXPECT_TRUE(IsConnected(h));
  EXPECT_FALSE(IsConnected(g));
}

TEST(GraphTest, BfsDistances) {
  const std::vector<Edge> edges{{0, 1}, {1, 2}};
  const Graph g = BuildGraph(edges, 4);
  const auto d = BfsDistances(g, 0);
  EXPECT_EQ(d, (std::vector<std::int64_t>{0, 1, 2, kUnreachable}));
}

TEST(NamedSeedTest, Complete) {
  const SeedGraph s = NamedSeed("k3");
  EXPECT_EQ(s.n(), 3u);
  EXPECT_EQ(s.e0(), 3u);
  EXPECT_EQ(s.d0(), 1u);
  EXPECT_EQ(s.k0_max(), 2u);
}

TEST(NamedSeedTest, Star) {
  const SeedGraph s = NamedSeed("s3");
  EXPECT_EQ(s.n(), 3u);
  EXPECT_EQ(s.e0(), 2u);
  EXPECT_EQ(s.d0(), 2u);
  EXPECT_EQ(s.k0_max(), 2u);
  EXPECT_EQ(s.graph().degree(0), 2u);
}

TEST(NamedSeedTest, Cycle) {
  const SeedGraph s = NamedSeed("c8");
  EXPECT_EQ(s.n(), 8u);
  EXPECT_EQ(s.e0(), 8u);
  EXPECT_EQ(s.d0(), 4u);
  EXPECT_EQ(s.k0_max(), 2u);
}

TEST(NamedSeedTest, PathAndGraphlets) {
  EXPECT_EQ(NamedSeed("p4").d0(), 3u);
  for (const char* name : {"g10", "g12", "g13", "g14", "g16"}) {
    const SeedGraph s = NamedSeed(name);
    EXPECT_EQ(s.n(), 5u) << name;
    EXPECT_TRUE(IsConnected(s.graph())) << name;
  }
  EXPECT_EQ(NamedSeed("g14").k0_max(), 4u);
  EXPECT_EQ(NamedSeed("g12").e0(), 5u);
}

TEST(NamedSeedTest, Rejections) {
  for (const char* name : {"c3", "k1", "s2", "x5", "k", "", "g11", "k3x", "k99999"}) {
    EXPECT_THROW(NamedSeed(name), Error) << name;
  }
}

TEST(SeedGraphTest, RejectsDisconnected) {
  const std::vector<Edge> edges{{0, 1}};
  EXPECT_THROW(SeedGraph::FromGraph(BuildGraph(edges, 3)), Error);
}

}  // namespace
}  // namespace sccg
