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

#ifndef SCCG_GRAPH_H_
#define SCCG_GRAPH_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace sccg {

// Dense node ids 0..N-1, assigned in creation order.
using NodeId = std::uint32_t;

struct Edge {
  NodeId u;
  NodeId v;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Immutable simple undirected graph in compressed sparse row form. Every
// neighbor list is sorted ascending, so iteration order is deterministic.
class Graph {
 public:
  Graph() = default;

  NodeId node_count() const {
    return static_cast<NodeId>(offsets_.size() - 1);
  }
  std::uint64_t edge_count() const { return adjacency_.size() / 2; }

  std::span<const NodeId> neighbors(NodeId v) const {
    return {adjacency_.data() + offsets_[v],
            adjacency_.data() + offsets_[v + 1]};
  }
  std::uint32_t degree(NodeId v) const {
    return static_cast<std::uint32_t>(offsets_[v + 1] - offsets_[v]);
  }
  std::uint32_t MaxDegree() const;

  bool HasEdge(NodeId u, NodeId v) const;

  // All edges as (u, v) with u < v, in lexicographic order.
  std::vector<Edge> Edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  friend class GraphBuilder;
  Graph(std::vector<std::uint64_t> offsets, std::vector<NodeId> adjacency)
      : offsets_(std::move(offsets)), adjacency_(std::move(adjacency)) {}

  std::vector<std::uint64_t> offsets_{0};
  std::vector<NodeId> adjacency_;
};

// Mutable adjacency used by the generators. Edge insertion is idempotent:
// re-adding an existing edge is a no-op reported through the return value.
class GraphBuilder {
 public:
  explicit GraphBuilder(NodeId node_count = 0) : adjacency_(node_count) {}
  explicit GraphBuilder(const Graph& graph);

  NodeId node_count() const { return static_cast<NodeId>(adjacency_.size()); }
  std::uint64_t edge_count() const { return edge_count_; }
  std::uint32_t degree(NodeId v) const {
    return static_cast<std::uint32_t>(adjacency_[v].size());
  }

  // Appends `count` isolated nodes and returns the id of the first one.
  NodeId AddNodes(NodeId count);

  // Returns true if the edge was inserted, false if it was already present.
  // Throws InvalidArgument on self-loops or out-of-range ids.
  bool AddEdge(NodeId u, NodeId v);

  // Inserts without the duplicate scan. The caller guarantees novelty.
  void AddNewEdge(NodeId u, NodeId v);

  // Scans the shorter of the two neighbor lists.
  bool HasEdge(NodeId u, NodeId v) const;

  Graph Build() const;

 private:
  void CheckEndpoints(NodeId u, NodeId v) const;

  std::vector<std::vector<NodeId>> adjacency_;
  std::uint64_t edge_count_ = 0;
};

// Builds a simple graph from an edge list. Duplicate pairs (in either
// orientation) collapse to one edge; self-loops and ids >= node_count are
// rejected with InvalidArgument.
Graph BuildGraph(std::span<const Edge> edges, NodeId node_count);

inline constexpr std::int64_t kUnreachable = -1;

// Hop distances from `source`; kUnreachable for nodes outside its component.
std::vector<std::int64_t> BfsDistances(const Graph& graph, NodeId source);

bool IsConnected(const Graph& graph);

enum class NodeClass : std::uint8_t { kSkeletal, kOffshoot };
enum class NodeRole : std::uint8_t { kHub, kNonHub, kSimple };

std::string_view ToString(NodeClass node_class);
std::string_view ToString(NodeRole role);

// Per-node provenance recorded by the corona-based generators.
struct NodeMeta {
  // Corona step at which the node appeared; 0 for seed nodes.
  int birth_step = 0;
  NodeClass node_class = NodeClass::kSkeletal;
  // Hub and NonHub are only ever assigned to skeletal nodes.
  NodeRole role = NodeRole::kSimple;
  // Node of the previous iterate this node's copy hangs off; empty iff
  // birth_step == 0.
  std::optional<NodeId> corona_parent;
  // Identifier of the seed copy the node belongs to; the seed itself is 0.
  std::uint32_t copy_id = 0;
  // Hubs above the node's lineage, ordered by election step.
  std::vector<NodeId> ancestor_hubs;

  friend bool operator==(const NodeMeta&, const NodeMeta&) = default;
};

}  // namespace sccg

#endif  // SCCG_GRAPH_H_
