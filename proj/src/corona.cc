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

#include "sccg/corona.h"

#include <limits>
#include <string>

#include "sccg/error.h"

namespace sccg {
namespace {

std::uint64_t OrThrow(std::optional<std::uint64_t> value, const char* what) {
  if (!value) throw InvalidArgument(std::string(what) + " overflows 64 bits");
  return *value;
}

}  // namespace

void AppendCoronaLayer(GraphBuilder& builder, const Graph& seed,
                       NodeId prev_count,
                       const std::function<void(NodeId, NodeId)>& on_copy) {
  const NodeId n = seed.node_count();
  const auto seed_edges = seed.Edges();
  for (NodeId v = 0; v < prev_count; ++v) {
    const NodeId first = builder.AddNodes(n);
    for (const Edge& e : seed_edges) builder.AddNewEdge(first + e.u, first + e.v);
    for (NodeId k = 0; k < n; ++k) builder.AddNewEdge(v, first + k);
    if (on_copy) on_copy(v, first);
  }
}

CoronaProductResult CoronaProduct(const Graph& g, const SeedGraph& h) {
  if (g.node_count() == 0) throw InvalidArgument("corona product of empty graph");
  const NodeId base = g.node_count();
  const std::uint64_t total =
      OrThrow(CheckedMul(base, std::uint64_t{h.n()} + 1), "corona product size");
  if (total > std::numeric_limits<NodeId>::max()) {
    throw SizeCapExceeded("corona product exceeds the node id range");
  }

  GraphBuilder builder(g);
  CoronaProductResult result;
  result.parent.assign(base, std::nullopt);
  result.copy_id.assign(base, 0);
  std::uint32_t next_copy = 1;
  AppendCoronaLayer(builder, h.graph(), base, [&](NodeId v, NodeId) {
    for (NodeId k = 0; k < h.n(); ++k) {
      result.parent.emplace_back(v);
      result.copy_id.push_back(next_copy);
    }
    ++next_copy;
  });
  result.graph = builder.Build();
  return result;
}

CoronaGraph GenerateCoronaGraph(const SeedGraph& seed, int steps,
                                std::uint64_t size_cap) {
  if (steps < 0) throw InvalidArgument("corona steps must be >= 0");
  std::optional<std::uint64_t> predicted;
  try {
    predicted = CoronaNodeCount(seed.n(), static_cast<std::uint64_t>(steps));
  } catch (const Error&) {
    predicted = std::nullopt;
  }
  EnforceSizeCap(predicted, size_cap, "corona graph");

  GraphBuilder builder(seed.graph());
  CoronaGraph out;
  out.birth_step.assign(seed.n(), 0);
  out.parent.assign(seed.n(), std::nullopt);
  out.birth_step.reserve(*predicted);
  out.parent.reserve(*predicted);
  for (int step = 1; step <= steps; ++step) {
    AppendCoronaLayer(builder, seed.graph(), builder.node_count(),
                      [&](NodeId v, NodeId) {
                        for (NodeId k = 0; k < seed.n(); ++k) {
                          out.birth_step.push_back(step);
                          out.parent.emplace_back(v);
                        }
                      });
  }
  out.graph = builder.Build();
  return out;
}

std::uint64_t CoronaNodeCount(std::uint64_t n, std::uint64_t m) {
  const auto power = OrThrow(CheckedPow(n + 1, m), "corona node count");
  return OrThrow(CheckedMul(n, power), "corona node count");
}

std::uint64_t CoronaNodesAddedAtStep(std::uint64_t n, std::uint64_t i) {
  if (i == 0) throw InvalidArgument("corona step index must be >= 1");
  const auto power = OrThrow(CheckedPow(n + 1, i - 1), "corona step size");
  const auto square = OrThrow(CheckedMul(n, n), "corona step size");
  return OrThrow(CheckedMul(square, power), "corona step size");
}

std::uint64_t CoronaEdgeCount(std::uint64_t n, std::uint64_t e0,
                              std::uint64_t m) {
  const auto power = OrThrow(CheckedPow(n + 1, m), "corona edge count");
  const auto per_layer = OrThrow(CheckedAdd(e0, n), "corona edge count");
  const auto grown = OrThrow(CheckedMul(per_layer, power - 1), "corona edge count");
  return OrThrow(CheckedAdd(e0, grown), "corona edge count");
}

std::uint64_t CoronaDiameter(std::uint64_t d0, std::uint64_t m) {
  return d0 + 2 * m;
}

}  // namespace sccg
