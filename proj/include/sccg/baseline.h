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

#ifndef SCCG_BASELINE_H_
#define SCCG_BASELINE_H_

#include <cstdint>
#include <istream>
#include <random>
#include <vector>

#include "sccg/graph.h"
#include "sccg/size_cap.h"

namespace sccg {

// Barabási–Albert preferential attachment.
struct BaParams {
  // Size of the initial clique.
  NodeId initial_nodes = 3;
  NodeId links_per_new_node = 2;
  NodeId target_nodes = 100;
  std::uint64_t rng_seed = 1;
};

// Each arriving node draws targets uniformly from the multiset of edge
// endpoints (so with probability proportional to degree), redrawing
// duplicates until it has links_per_new_node distinct targets. The stream
// comes from std::mt19937_64 seeded with rng_seed, reduced to indices with
// UniformIndex, so it is reproducible across platforms.
Graph GenerateBarabasiAlbert(const BaParams& params,
                             std::uint64_t size_cap = kDefaultSizeCap);

// Uniform integer in [0, bound) by rejection on the raw 64-bit output.
// Unlike std::uniform_int_distribution the mapping is fixed by this code.
std::uint64_t UniformIndex(std::mt19937_64& rng, std::uint64_t bound);

// Pseudofractal scale-free graph. Starts from one edge at t = -1; at every
// step each existing edge spawns a node joined to both of its endpoints.
Graph GeneratePseudofractal(int t, std::uint64_t size_cap = kDefaultSizeCap);
// (3^(t+1) + 3) / 2
std::uint64_t PseudofractalNodeCount(int t);
// 3^(t+1)
std::uint64_t PseudofractalEdgeCount(int t);

// Square 0/1 matrix with ones on the diagonal.
class KroneckerSeed {
 public:
  // Throws InvalidArgument for a zero dimension, size mismatch, entries other
  // than 0/1, a zero on the diagonal, or an asymmetric matrix.
  KroneckerSeed(NodeId dimension, std::vector<std::uint8_t> entries);

  // Adjacency of `graph` plus a self-loop on every node.
  static KroneckerSeed WithSelfLoops(const Graph& graph);

  // Text form: first line the dimension, then one row per line of 0/1
  // digits (whitespace between digits is allowed; '#' lines are skipped).
  // Throws MalformedInput with a line number.
  static KroneckerSeed Parse(std::istream& in);

  NodeId dimension() const { return dimension_; }
  bool at(NodeId row, NodeId col) const {
    return entries_[static_cast<std::size_t>(row) * dimension_ + col] != 0;
  }

 private:
  NodeId dimension_;
  std::vector<std::uint8_t> entries_;
};

// k-th Kronecker power of the seed matrix, with self-loops dropped.
Graph GenerateKronecker(const KroneckerSeed& seed, int k,
                        std::uint64_t size_cap = kDefaultSizeCap);

}  // namespace sccg

#endif  // SCCG_BASELINE_H_
