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

#ifndef SCCG_SCCG_H_
#define SCCG_SCCG_H_

// Self-coordinated corona graphs: each corona layer is followed by a
// self-coordination (SC) step in which the new nodes elect hubs among the
// previous layer's skeletal copies and link to them and to their ancestor
// hubs.
//
// Terminology used throughout:
//   skeletal  a seed node, or a node of the first copy a skeletal node ever
//             receives (the copy it gets in the layer right after its birth).
//   offshoot  a node of any later copy on a skeletal node, or of any copy on
//             an offshoot node. Offshoot nodes are never elected.
//   X         new nodes whose parent is a skeletal node born one layer
//             earlier (these are the new skeletal nodes).
//   Y         new offshoot nodes whose parent is an older skeletal node.
//   deep      new nodes whose parent is an offshoot node.
//
// Linking rule for a new node u with corona parent p:
//   * p skeletal: local pair = (hub, non-hub) elected by p's copy; inherited
//     chain = p's ancestor hubs. u's ancestor hubs become chain + [hub].
//   * p offshoot: local pair = the pair of the last hub in p's chain;
//     inherited chain = the rest of p's chain. u's ancestor hubs equal p's.
//   u links to the local hub, or to the paired non-hub when u is already a
//   corona child of the hub, and then to every hub of the inherited chain it
//   is not yet adjacent to.

#include <cstdint>
#include <string>
#include <vector>

#include "sccg/graph.h"
#include "sccg/seed.h"
#include "sccg/size_cap.h"

namespace sccg {

enum class HubTiebreak : std::uint8_t { kLowestId };
enum class NonHubRule : std::uint8_t { kLowestIdNonHub };
enum class DeepOffshootLinking : std::uint8_t {
  // Local hub plus the rest of the inherited chain (default).
  kFullChain,
  // Only the nearest ancestor hub (or its non-hub); for sensitivity checks.
  kNearestHubOnly,
};

struct HubPolicy {
  HubTiebreak hub_tiebreak = HubTiebreak::kLowestId;
  NonHubRule nonhub_rule = NonHubRule::kLowestIdNonHub;
  DeepOffshootLinking deep_offshoot = DeepOffshootLinking::kFullChain;
};

struct SccgParams {
  SeedGraph seed;
  int steps = 1;
  HubPolicy policy;
  std::uint64_t size_cap = kDefaultSizeCap;
};

// New nodes of one corona layer, partitioned by parent kind.
struct StepFrontier {
  std::vector<NodeId> x_set;
  std::vector<NodeId> y_set;
  std::vector<NodeId> deep_offshoot;
};

struct Election {
  std::uint32_t copy_id = 0;
  NodeId hub = 0;
  NodeId nonhub = 0;
};

struct StepRecord {
  int step = 0;
  std::vector<NodeId> hubs;
  std::vector<NodeId> nonhubs;
  std::uint64_t sc_links_added = 0;
  std::uint64_t x_size = 0;
  std::uint64_t y_size = 0;
  std::uint64_t deep_offshoot_size = 0;

  friend bool operator==(const StepRecord&, const StepRecord&) = default;
};

struct GenerationTrace {
  std::vector<StepRecord> steps;

  friend bool operator==(const GenerationTrace&,
                         const GenerationTrace&) = default;
};

struct SccgResult {
  Graph graph;
  std::vector<NodeMeta> meta;
  GenerationTrace trace;
  std::uint64_t corona_edges = 0;
};

// Incremental generator. GenerateSccg drives it; tests drive the individual
// phases.
class SccgState {
 public:
  explicit SccgState(SeedGraph seed, HubPolicy policy = {});

  // Number of completed corona layers.
  int step() const { return step_; }
  const GraphBuilder& builder() const { return builder_; }
  const std::vector<NodeMeta>& meta() const { return meta_; }
  const SeedGraph& seed() const { return seed_; }

  // G(i) = G(i-1) ∘ G0 with i = step() + 1. Labels every new node skeletal
  // or offshoot.
  void CoronaStep();

  // Partition of the nodes added by the latest corona layer.
  StepFrontier ClassifyNewNodes() const;

  // One (hub, non-hub) pair per skeletal copy born in the previous layer
  // (the seed itself at step 1). Hub = maximum current degree, ties to the
  // lowest id; non-hub = lowest id of the copy other than the hub.
  std::vector<Election> ElectHubsAndNonHubs();

  // Adds the SC links of the latest layer; returns how many were new.
  std::uint64_t ApplyScLinks(const StepFrontier& frontier);

  SccgResult Finish(GenerationTrace trace) &&;

 private:
  struct CopyInfo {
    NodeId first = 0;
    int birth_step = 0;
    NodeClass node_class = NodeClass::kSkeletal;
    bool elected = false;
    NodeId hub = 0;
    NodeId nonhub = 0;
  };

  void LinkNewNode(NodeId u, std::uint64_t& added);
  bool Link(NodeId u, NodeId v, std::uint64_t& added);

  SeedGraph seed_;
  HubPolicy policy_;
  GraphBuilder builder_;
  std::vector<NodeMeta> meta_;
  std::vector<CopyInfo> copies_;
  int step_ = 0;
  NodeId layer_begin_ = 0;
  std::uint64_t corona_edges_ = 0;
};

// Throws InvalidArgument for steps < 1 and SizeCapExceeded when
// n (n+1)^steps exceeds params.size_cap.
SccgResult GenerateSccg(const SccgParams& params);

// Final-degree record of an elected hub.
struct HubRecord {
  NodeId node = 0;
  int birth_step = 0;
  int election_step = 0;
  std::uint32_t final_degree = 0;
};

std::vector<HubRecord> HubRecords(const SccgResult& result);

// Every hub listed in the trace, in election order.
std::vector<NodeId> TraceHubs(const GenerationTrace& trace);

// Analytic predictors for the hub degree sequence.

// Degree of the step-1 hub after m SC steps: k0max + n((n+1)^m - 1).
std::uint64_t PredictedTopHubDegree(const SeedGraph& seed, int m);

// Closed form k0max + (m-j+1) + n((n+1)^j - 1) for a hub born at step m-j,
// 1 <= j <= m-1.
std::uint64_t PredictedHubDegree(const SeedGraph& seed, int m, int j);

struct HubDegreeInterval {
  std::uint64_t lo = 0;
  std::uint64_t hi = 0;
  // lo > hi, which happens for small seeds at m = 1.
  bool degenerate = false;
};

// [k0max + m + n^2, k0max + n((n+1)^m - 1)]
HubDegreeInterval HubDegreeBounds(const SeedGraph& seed, int m);

// n (n^(m-j) - 1) / (n - 1): hubs of degree strictly above d_j.
std::uint64_t CumulativeHubFrequency(std::uint64_t n, int m, int j);

// 1 + m ln(n+1) / (ln n + (m-1) ln(n+1)); tends to 2 as m grows.
double AnalyticGamma(std::uint64_t n, int m);

// Stable-key JSON: an array of per-step objects.
std::string TraceToJson(const GenerationTrace& trace);

}  // namespace sccg

#endif  // SCCG_SCCG_H_
