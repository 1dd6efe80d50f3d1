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

#include "sccg/baseline.h"

#include <algorithm>
#include <limits>
#include <string>

#include "sccg/error.h"

namespace sccg {

std::uint64_t UniformIndex(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t limit = max - (max % bound + 1) % bound;
  std::uint64_t draw = rng();
  while (draw > limit) draw = rng();
  return draw % bound;
}

Graph GenerateBarabasiAlbert(const BaParams& params, std::uint64_t size_cap) {
  if (params.initial_nodes < 1) throw InvalidArgument("BA initial_nodes >= 1");
  if (params.links_per_new_node < 1) throw InvalidArgument("BA links >= 1");
  if (params.links_per_new_node > params.initial_nodes) {
    throw InvalidArgument("BA links_per_new_node must not exceed initial_nodes");
  }
  if (params.target_nodes < params.initial_nodes) {
    throw InvalidArgument("BA target_nodes must be >= initial_nodes");
  }
  EnforceSizeCap(params.target_nodes, size_cap, "BA");

  const NodeId m0 = params.initial_nodes;
  const NodeId links = params.links_per_new_node;
  GraphBuilder builder(params.target_nodes);

  // A node of degree d appears d times here.
  std::vector<NodeId> endpoints;
  endpoints.reserve(static_cast<std::size_t>(m0) * m0 +
                    2ull * (params.target_nodes - m0) * links);
  for (NodeId u = 0; u < m0; ++u) {
    for (NodeId v = u + 1; v < m0; ++v) {
      builder.AddNewEdge(u, v);
      endpoints.push_back(u);
      endpoints.push_back(v);
    }
  }

  std::mt19937_64 rng(params.rng_seed);
  std::vector<NodeId> targets;
  for (NodeId u = m0; u < params.target_nodes; ++u) {
    targets.clear();
    while (targets.size() < links) {
      // A lone initial node has no endpoints yet; fall back to uniform.
      const NodeId candidate =
          endpoints.empty()
              ? static_cast<NodeId>(UniformIndex(rng, u))
              : endpoints[UniformIndex(rng, endpoints.size())];
      if (std::find(targets.begin(), targets.end(), candidate) == targets.end()) {
        targets.push_back(candidate);
      }
    }
    for (NodeId v : targets) {
      builder.AddNewEdge(u, v);
      endpoints.push_back(v);
      endpoints.push_back(u);
    }
  }
  return builder.Build();
}

std::uint64_t PseudofractalEdgeCount(int t) {
  if (t < -1) throw InvalidArgument("pseudofractal step must be >= -1");
  auto edges = CheckedPow(3, static_cast<std::uint64_t>(t + 1));
  if (!edges) throw InvalidArgument("pseudofractal edge count overflows");
  return *edges;
}

std::uint64_t PseudofractalNodeCount(int t) {
  return (PseudofractalEdgeCount(t) + 3) / 2;
}

Graph GeneratePseudofractal(int t, std::uint64_t size_cap) {
  if (t < 0) throw InvalidArgument("pseudofractal step must be >= 0");
  std::optional<std::uint64_t> predicted;
  try {
    predicted = PseudofractalNodeCount(t);
  } catch (const Error&) {
  }
  EnforceSizeCap(predicted, size_cap, "pseudofractal");

  GraphBuilder builder(2);
  std::vector<Edge> edges{{0, 1}};
  builder.AddNewEdge(0, 1);
  for (int step = 0; step <= t; ++step) {
    const std::size_t existing = edges.size();
    for (std::size_t k = 0; k < existing; ++k) {
      const Edge e = edges[k];
      const NodeId w = builder.AddNodes(1);
      builder.AddNewEdge(e.u, w);
      builder.AddNewEdge(e.v, w);
      edges.push_back({e.u, w});
      edges.push_back({e.v, w});
    }
  }
  return builder.Build();
}

KroneckerSeed::KroneckerSeed(NodeId dimension, std::vector<std::uint8_t> entries)
    : dimension_(dimension), entries_(std::move(entries)) {
  if (dimension_ == 0) throw InvalidArgument("Kronecker seed dimension is 0");
  if (entries_.size() != static_cast<std::size_t>(dimension_) * dimension_) {
    throw InvalidArgument("Kronecker seed is not square");
  }
  for (std::uint8_t x : entries_) {
    if (x > 1) throw InvalidArgument("Kronecker seed entries must be 0 or 1");
  }
  for (NodeId r = 0; r < dimension_; ++r) {
    if (!at(r, r)) {
      throw InvalidArgument("Kronecker seed needs a self-loop on node " +
                            std::to_string(r));
    }
    for (NodeId c = 0; c < r; ++c) {
      if (at(r, c) != at(c, r)) {
        throw InvalidArgument("Kronecker seed must be symmetric");
      }
    }
  }
}

KroneckerSeed KroneckerSeed::WithSelfLoops(const Graph& graph) {
  const NodeId d = graph.node_count();
  std::vector<std::uint8_t> entries(static_cast<std::size_t>(d) * d, 0);
  for (NodeId u = 0; u < d; ++u) {
    entries[static_cast<std::size_t>(u) * d + u] = 1;
    for (NodeId v : graph.neighbors(u)) {
      entries[static_cast<std::size_t>(u) * d + v] = 1;
    }
  }
  return KroneckerSeed(d, std::move(entries));
}

KroneckerSeed KroneckerSeed::Parse(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  auto next_line = [&]() -> bool {
    while (std::getline(in, line)) {
      ++line_no;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      const auto first = line.find_first_not_of(" \t");
      if (first == std::string::npos || line[first] == '#') continue;
      return true;
    }
    return false;
  };

  if (!next_line()) throw MalformedInput("Kronecker seed: missing dimension");
  NodeId dimension = 0;
  try {
    std::size_t used = 0;
    const unsigned long parsed = std::stoul(line, &used);
    if (line.find_first_not_of(" \t", used) != std::string::npos ||
        parsed == 0 || parsed > 64) {
      throw std::invalid_argument("range");
    }
    dimension = static_cast<NodeId>(parsed);
  } catch (const std::exception&) {
    throw MalformedInput("Kronecker seed: dimension must be in 1..64", line_no);
  }

  std::vector<std::uint8_t> entries;
  for (NodeId row = 0; row < dimension; ++row) {
    if (!next_line()) {
      throw MalformedInput("Kronecker seed: expected " +
                           std::to_string(dimension) + " rows", line_no);
    }
    std::size_t count = 0;
    for (char c : line) {
      if (c == ' ' || c == '\t') continue;
      if (c != '0' && c != '1') {
        throw MalformedInput("Kronecker seed: entries must be 0 or 1", line_no);
      }
      entries.push_back(static_cast<std::uint8_t>(c - '0'));
      ++count;
    }
    if (count != dimension) {
      throw MalformedInput("Kronecker seed: row has " + std::to_string(count) +
                           " entries, expected " + std::to_string(dimension),
                           line_no);
    }
  }
  try {
    return KroneckerSeed(dimension, std::move(entries));
  } catch (const Error& e) {
    throw MalformedInput(e.what());
  }
}

Graph GenerateKronecker(const KroneckerSeed& seed, int k, std::uint64_t size_cap) {
  if (k < 1) throw InvalidArgument("Kronecker power must be >= 1");
  const NodeId d = seed.dimension();
  const auto predicted = CheckedPow(d, static_cast<std::uint64_t>(k));
  EnforceSizeCap(predicted, size_cap, "Kronecker");
  const auto node_count = static_cast<NodeId>(*predicted);

  std::vector<std::vector<NodeId>> seed_neighbors(d);
  for (NodeId r = 0; r < d; ++r) {
    for (NodeId c = 0; c < d; ++c) {
      if (seed.at(r, c)) seed_neighbors[r].push_back(c);
    }
  }

  GraphBuilder builder(node_count);
  std::vector<NodeId> digits(static_cast<std::size_t>(k));
  std::vector<std::size_t> cursor(static_cast<std::size_t>(k));
  for (NodeId a = 0; a < node_count; ++a) {
    // Base-d digits of a, most significant first.
    NodeId rest = a;
    for (int pos = k - 1; pos >= 0; --pos) {
      digits[pos] = rest % d;
      rest /= d;
    }
    // Odometer over the product of per-digit neighbor sets.
    std::fill(cursor.begin(), cursor.end(), 0);
    while (true) {
      NodeId b = 0;
      for (int pos = 0; pos < k; ++pos) {
        b = b * d + seed_neighbors[digits[pos]][cursor[pos]];
      }
      if (b > a) builder.AddNewEdge(a, b);
      int pos = k - 1;
      while (pos >= 0 && ++cursor[pos] == seed_neighbors[digits[pos]].size()) {
        cursor[pos] = 0;
        --pos;
      }
      if (pos < 0) break;
    }
  }
  return builder.Build();
}

}  // namespace sccg
