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

#include "sccg/graph.h"

#include <algorithm>
#include <queue>
#include <string>

#include "sccg/error.h"

namespace sccg {

std::uint32_t Graph::MaxDegree() const {
  std::uint32_t best = 0;
  for (NodeId v = 0; v < node_count(); ++v) best = std::max(best, degree(v));
  return best;
}

bool Graph::HasEdge(NodeId u, NodeId v) const {
  if (u >= node_count() || v >= node_count()) return false;
  if (degree(u) > degree(v)) std::swap(u, v);
  auto adj = neighbors(u);
  return std::binary_search(adj.begin(), adj.end(), v);
}

std::vector<Edge> Graph::Edges() const {
  std::vector<Edge> edges;
  edges.reserve(edge_count());
  for (NodeId u = 0; u < node_count(); ++u) {
    for (NodeId v : neighbors(u)) {
      if (u < v) edges.push_back({u, v});
    }
  }
  return edges;
}

GraphBuilder::GraphBuilder(const Graph& graph)
    : adjacency_(graph.node_count()), edge_count_(graph.edge_count()) {
  for (NodeId v = 0; v < graph.node_count(); ++v) {
    auto adj = graph.neighbors(v);
    adjacency_[v].assign(adj.begin(), adj.end());
  }
}

NodeId GraphBuilder::AddNodes(NodeId count) {
  const NodeId first = node_count();
  adjacency_.resize(adjacency_.size() + count);
  return first;
}

void GraphBuilder::CheckEndpoints(NodeId u, NodeId v) const {
  if (u == v) {
    throw InvalidArgument("self-loop on node " + std::to_string(u));
  }
  if (u >= node_count() || v >= node_count()) {
    throw InvalidArgument("edge (" + std::to_string(u) + ", " +
                          std::to_string(v) + ") references a node >= " +
                          std::to_string(node_count()));
  }
}

bool GraphBuilder::AddEdge(NodeId u, NodeId v) {
  CheckEndpoints(u, v);
  if (HasEdge(u, v)) return false;
  adjacency_[u].push_back(v);
  adjacency_[v].push_back(u);
  ++edge_count_;
  return true;
}

void GraphBuilder::AddNewEdge(NodeId u, NodeId v) {
  CheckEndpoints(u, v);
  adjacency_[u].push_back(v);
  adjacency_[v].push_back(u);
  ++edge_count_;
}

bool GraphBuilder::HasEdge(NodeId u, NodeId v) const {
  const auto& a = adjacency_[u].size() <= adjacency_[v].size() ? adjacency_[u]
                                                                : adjacency_[v];
  const NodeId target = &a == &adjacency_[u] ? v : u;
  return std::find(a.begin(), a.end(), target) != a.end();
}

Graph GraphBuilder::Build() const {
  std::vector<std::uint64_t> offsets(adjacency_.size() + 1, 0);
  for (std::size_t v = 0; v < adjacency_.size(); ++v) {
    offsets[v + 1] = offsets[v] + adjacency_[v].size();
  }
  std::vector<NodeId> flat(offsets.back());
  for (std::size_t v = 0; v < adjacency_.size(); ++v) {
    auto out = flat.begin() + static_cast<std::ptrdiff_t>(offsets[v]);
    std::copy(adjacency_[v].begin(), adjacency_[v].end(), out);
    std::sort(out, out + static_cast<std::ptrdiff_t>(adjacency_[v].size()));
  }
  return Graph(std::move(offsets), std::move(flat));
}

Graph BuildGraph(std::span<const Edge> edges, NodeId node_count) {
  std::vector<Edge> normalized;
  normalized.reserve(edges.size());
  for (const Edge& e : edges) {
    if (e.u == e.v) {
      throw InvalidArgument("self-loop on node " + std::to_string(e.u));
    }
    if (e.u >= node_count || e.v >= node_count) {
      throw InvalidArgument("edge (" + std::to_string(e.u) + ", " +
                            std::to_string(e.v) + ") references a node >= " +
                            std::to_string(node_count));
    }
    normalized.push_back({std::min(e.u, e.v), std::max(e.u, e.v)});
  }
  std::sort(normalized.begin(), normalized.end());
  normalized.erase(std::unique(normalized.begin(), normalized.end()),
                   normalized.end());

  GraphBuilder builder(node_count);
  for (const Edge& e : normalized) builder.AddNewEdge(e.u, e.v);
  return builder.Build();
}

std::vector<std::int64_t> BfsDistances(const Graph& graph, NodeId source) {
  std::vector<std::int64_t> dist(graph.node_count(), kUnreachable);
  std::queue<NodeId> frontier;
  dist[source] = 0;
  frontier.push(source);
  while (!frontier.empty()) {
    const NodeId u = frontier.front();
    frontier.pop();
    for (NodeId w : graph.neighbors(u)) {
      if (dist[w] == kUnreachable) {
        dist[w] = dist[u] + 1;
        frontier.push(w);
      }
    }
  }
  return dist;
}

bool IsConnected(const Graph& graph) {
  if (graph.node_count() == 0) return true;
  auto dist = BfsDistances(graph, 0);
  return std::none_of(dist.begin(), dist.end(),
                      [](std::int64_t d) { return d == kUnreachable; });
}

std::string_view ToString(NodeClass node_class) {
  return node_class == NodeClass::kSkeletal ? "skeletal" : "offshoot";
}

std::string_view ToString(NodeRole role) {
  switch (role) {
    case NodeRole::kHub:
      return "hub";
    case NodeRole::kNonHub:
      return "nonhub";
    case NodeRole::kSimple:
      return "simple";
  }
  return "simple";
}

}  // namespace sccg
