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

#ifndef SCCG_CORONA_H_
#define SCCG_CORONA_H_

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "sccg/graph.h"
#include "sccg/seed.h"
#include "sccg/size_cap.h"

namespace sccg {

// Result of g ∘ h. Nodes of g keep their ids; copy k of h (attached to node k
// of g) occupies ids |V(g)| + k*n .. |V(g)| + (k+1)*n - 1 in the seed's own
// order.
struct CoronaProductResult {
  Graph graph;
  // Attachment node for each copy node; empty for the nodes of g.
  std::vector<std::optional<NodeId>> parent;
  // 0 for nodes of g, k+1 for nodes of the copy attached to node k.
  std::vector<std::uint32_t> copy_id;
};

CoronaProductResult CoronaProduct(const Graph& g, const SeedGraph& h);

// G(m) with G(0) = seed and G(i) = G(i-1) ∘ seed.
struct CoronaGraph {
  Graph graph;
  std::vector<int> birth_step;
  std::vector<std::optional<NodeId>> parent;
};

// Throws InvalidArgument for negative `steps` and SizeCapExceeded when the
// predicted node count exceeds `size_cap` (checked before allocating).
CoronaGraph GenerateCoronaGraph(const SeedGraph& seed, int steps,
                                std::uint64_t size_cap = kDefaultSizeCap);

// Appends one corona layer onto the first `prev_count` nodes of `builder`:
// for each node v in ascending order a fresh copy of `seed` is appended and
// every copy node is joined to v. `on_copy(v, first_id)` fires after each
// copy is wired.
void AppendCoronaLayer(GraphBuilder& builder, const Graph& seed,
                       NodeId prev_count,
                       const std::function<void(NodeId, NodeId)>& on_copy);

// Closed forms. All throw InvalidArgument on 64-bit overflow.

// n (n+1)^m
std::uint64_t CoronaNodeCount(std::uint64_t n, std::uint64_t m);
// n^2 (n+1)^(i-1), i >= 1
std::uint64_t CoronaNodesAddedAtStep(std::uint64_t n, std::uint64_t i);
// |E| + (|E| + n)((n+1)^m - 1)
std::uint64_t CoronaEdgeCount(std::uint64_t n, std::uint64_t e0,
                              std::uint64_t m);
// D0 + 2m
std::uint64_t CoronaDiameter(std::uint64_t d0, std::uint64_t m);

}  // namespace sccg

#endif  // SCCG_CORONA_H_
