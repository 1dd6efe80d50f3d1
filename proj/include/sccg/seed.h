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

#ifndef SCCG_SEED_H_
#define SCCG_SEED_H_

#include <cstdint>
#include <string>
#include <string_view>

#include "sccg/graph.h"

namespace sccg {

// A connected seed graph G0 with its derived constants cached.
class SeedGraph {
 public:
  // Throws InvalidArgument if the graph has fewer than 2 nodes or is
  // disconnected.
  static SeedGraph FromGraph(Graph graph, std::string name = {});

  const Graph& graph() const { return graph_; }
  const std::string& name() const { return name_; }

  // Number of nodes, n.
  NodeId n() const { return graph_.node_count(); }
  std::uint64_t e0() const { return graph_.edge_count(); }
  std::uint32_t d0() const { return d0_; }
  std::uint32_t k0_max() const { return k0_max_; }

 private:
  SeedGraph(Graph graph, std::string name, std::uint32_t d0,
            std::uint32_t k0_max)
      : graph_(std::move(graph)),
        name_(std::move(name)),
        d0_(d0),
        k0_max_(k0_max) {}

  Graph graph_;
  std::string name_;
  std::uint32_t d0_ = 0;
  std::uint32_t k0_max_ = 0;
};

// Parses a seed name:
//   k<n>  complete graph, n >= 2
//   s<n>  star on n nodes (center 0), n >= 3
//   c<n>  cycle, n >= 4 (c3 would alias k3 and is refused)
//   p<n>  path, n >= 2
//   g10 g12 g13 g14 g16  five-node graphlets: fork, bull, triangle with a
//                        two-edge tail, cricket, and C4 with a pendant.
// Throws InvalidArgument for unknown names or sizes below the family minimum.
SeedGraph NamedSeed(std::string_view name);

// Upper bound on parsed family sizes; keeps seeds desk-sized.
inline constexpr NodeId kMaxNamedSeedSize = 4096;

}  // namespace sccg

#endif  // SCCG_SEED_H_
