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

#include "sccg/sccg.h"

#include <cmath>
#include <string>

#include "json.hpp"
#include "sccg/corona.h"
#include "sccg/error.h"

namespace sccg {
namespace {

std::uint64_t OrThrow(std::optional<std::uint64_t> value, const char* what) {
  if (!value) throw InvalidArgument(std::string(what) + " overflows 64 bits");
  return *value;
}

// n((n+1)^m - 1), the total number of nodes added by m corona layers.
std::uint64_t AddedNodes(std::uint64_t n, int m) {
  const auto power = OrThrow(CheckedPow(n + 1, static_cast<std::uint64_t>(m)),
                             "hub degree");
  return OrThrow(CheckedMul(n, power - 1), "hub degree");
}

}  // namespace

SccgState::SccgState(SeedGraph seed, HubPolicy policy)
    : seed_(std::move(seed)), policy_(policy), builder_(seed_.graph()) {
  meta_.resize(seed_.n());
  copies_.push_back(CopyInfo{.first = 0,
                             .birth_step = 0,
                             .node_class = NodeClass::kSkeletal});
  corona_edges_ = builder_.edge_count();
}

void SccgState::CoronaStep() {
  const int step = ++step_;
  const NodeId prev_count = builder_.node_count();
  const std::uint64_t edges_before = builder_.edge_count();
  layer_begin_ = prev_count;
  meta_.reserve(static_cast<std::size_t>(prev_count) * (seed_.n() + 1));

  AppendCoronaLayer(
      builder_, seed_.graph(), prev_count, [&](NodeId parent, NodeId first) {
        const bool first_copy_on_skeletal =
            meta_[parent].node_class == NodeClass::kSkeletal &&
            meta_[parent].birth_step == step - 1;
        const NodeClass node_class = first_copy_on_skeletal
                                         ? NodeClass::kSkeletal
                                         : NodeClass::kOffshoot;
        const auto copy_id = static_cast<std::uint32_t>(copies_.size());
        copies_.push_back(CopyInfo{
            .first = first, .birth_step = step, .node_class = node_class});
        for (NodeId k = 0; k < seed_.n(); ++k) {
          NodeMeta node;
          node.birth_step = step;
          node.node_class = node_class;
          node.corona_parent = parent;
          node.copy_id = copy_id;
          meta_.push_back(std::move(node));
        }
      });
  corona_edges_ += builder_.edge_count() - edges_before;
}

StepFrontier SccgState::ClassifyNewNodes() const {
  StepFrontier frontier;
  if (step_ == 0) return frontier;
  for (NodeId u = layer_begin_; u < builder_.node_count(); ++u) {
    const NodeMeta& parent = meta_[*meta_[u].corona_parent];
    if (parent.node_class == NodeClass::kOffshoot) {
      frontier.deep_offshoot.push_back(u);
    } else if (meta_[u].node_class == NodeClass::kSkeletal) {
      frontier.x_set.push_back(u);
    } else {
      frontier.y_set.push_back(u);
    }
  }
  return frontier;
}

std::vector<Election> SccgState::ElectHubsAndNonHubs() {
  std::vector<Election> elections;
  if (step_ == 0) return elections;
  const NodeId n = seed_.n();
  for (std::uint32_t id = 0; id < copies_.size(); ++id) {
    CopyInfo& copy = copies_[id];
    if (copy.node_class != NodeClass::kSkeletal ||
        copy.birth_step != step_ - 1 || copy.elected) {
      continue;
    }
    NodeId hub = copy.first;
    for (NodeId v = copy.first + 1; v < copy.first + n; ++v) {
      if (builder_.degree(v) > builder_.degree(hub)) hub = v;
    }
    const NodeId nonhub = hub == copy.first ? copy.first + 1 : copy.first;

    copy.elected = true;
    copy.hub = hub;
    copy.nonhub = nonhub;
    // Roles are assigned once; an earlier election wins.
    if (meta_[hub].role == NodeRole::kSimple) meta_[hub].role = NodeRole::kHub;
    if (meta_[nonhub].role == NodeRole::kSimple) {
      meta_[nonhub].role = NodeRole::kNonHub;
    }
    elections.push_back({id, hub, nonhub});
  }
  return elections;
}

bool SccgState::Link(NodeId u, NodeId v, std::uint64_t& added) {
  if (!builder_.AddEdge(u, v)) return false;
  ++added;
  return true;
}

void SccgState::LinkNewNode(NodeId u, std::uint64_t& added) {
  const NodeMeta& parent = meta_[*meta_[u].corona_parent];
  std::vector<NodeId> ancestors = parent.ancestor_hubs;
  NodeId hub = 0;
  NodeId nonhub = 0;
  std::size_t chain_length = ancestors.size();

  if (parent.node_class == NodeClass::kSkeletal) {
    const CopyInfo& copy = copies_[parent.copy_id];
    hub = copy.hub;
    nonhub = copy.nonhub;
    ancestors.push_back(hub);
  } else {
    hub = ancestors.back();
    nonhub = copies_[meta_[hub].copy_id].nonhub;
    chain_length = policy_.deep_offshoot == DeepOffshootLinking::kFullChain
                       ? ancestors.size() - 1
                       : 0;
  }

  // A corona child of the hub is already adjacent to it.
  if (builder_.HasEdge(u, hub)) {
    Link(u, nonhub, added);
  } else {
    Link(u, hub, added);
  }
  for (std::size_t k = 0; k < chain_length; ++k) Link(u, ancestors[k], added);
  meta_[u].ancestor_hubs = std::move(ancestors);
}

std::uint64_t SccgState::ApplyScLinks(const StepFrontier& frontier) {
  std::uint64_t added = 0;
  for (const auto* part :
       {&frontier.x_set, &frontier.y_set, &frontier.deep_offshoot}) {
    for (NodeId u : *part) LinkNewNode(u, added);
  }
  return added;
}

SccgResult SccgState::Finish(GenerationTrace trace) && {
  SccgResult result;
  result.graph = builder_.Build();
  result.meta = std::move(meta_);
  result.trace = std::move(trace);
  result.corona_edges = corona_edges_;
  return result;
}

SccgResult GenerateSccg(const SccgParams& params) {
  if (params.steps < 1) throw InvalidArgument("SCCG requires steps >= 1");
  std::optional<std::uint64_t> predicted;
  try {
    predicted = CoronaNodeCount(params.seed.n(),
                                static_cast<std::uint64_t>(params.steps));
  } catch (const Error&) {
    predicted = std::nullopt;
  }
  EnforceSizeCap(predicted, params.size_cap, "SCCG");

  SccgState state(params.seed, params.policy);
  GenerationTrace trace;
  for (int i = 1; i <= params.steps; ++i) {
    state.CoronaStep();
    const StepFrontier frontier = state.ClassifyNewNodes();
    const std::vector<Election> elections = state.ElectHubsAndNonHubs();

    StepRecord record;
    record.step = i;
    for (const Election& e : elections) {
      record.hubs.push_back(e.hub);
      record.nonhubs.push_back(e.nonhub);
    }
    record.sc_links_added = state.ApplyScLinks(frontier);
    record.x_size = frontier.x_set.size();
    record.y_size = frontier.y_set.size();
    record.deep_offshoot_size = frontier.deep_offshoot.size();
    trace.steps.push_back(std::move(record));
  }
  return std::move(state).Finish(std::move(trace));
}

std::vector<HubRecord> HubRecords(const SccgResult& result) {
  std::vector<HubRecord> records;
  for (const StepRecord& step : result.trace.steps) {
    for (NodeId hub : step.hubs) {
      records.push_back({hub, result.meta[hub].birth_step, step.step,
                         result.graph.degree(hub)});
    }
  }
  return records;
}

std::vector<NodeId> TraceHubs(const GenerationTrace& trace) {
  std::vector<NodeId> hubs;
  for (const StepRecord& step : trace.steps) {
    hubs.insert(hubs.end(), step.hubs.begin(), step.hubs.end());
  }
  return hubs;
}

std::uint64_t PredictedTopHubDegree(const SeedGraph& seed, int m) {
  if (m < 1) throw InvalidArgument("top hub degree requires m >= 1");
  return seed.k0_max() + AddedNodes(seed.n(), m);
}

std::uint64_t PredictedHubDegree(const SeedGraph& seed, int m, int j) {
  if (j < 1 || j > m - 1) {
    throw InvalidArgument("hub degree requires 1 <= j <= m-1");
  }
  return seed.k0_max() + static_cast<std::uint64_t>(m - j + 1) +
         AddedNodes(seed.n(), j);
}

HubDegreeInterval HubDegreeBounds(const SeedGraph& seed, int m) {
  if (m < 1) throw InvalidArgument("hub degree interval requires m >= 1");
  HubDegreeInterval interval;
  const std::uint64_t n = seed.n();
  interval.lo = seed.k0_max() + static_cast<std::uint64_t>(m) + n * n;
  interval.hi = PredictedTopHubDegree(seed, m);
  interval.degenerate = interval.lo > interval.hi;
  return interval;
}

std::uint64_t CumulativeHubFrequency(std::uint64_t n, int m, int j) {
  if (n < 2) throw InvalidArgument("cumulative hub frequency requires n >= 2");
  if (j < 1 || j > m - 1) {
    throw InvalidArgument("cumulative hub frequency requires 1 <= j <= m-1");
  }
  const auto power = OrThrow(
      CheckedPow(n, static_cast<std::uint64_t>(m - j)), "hub frequency");
  return OrThrow(CheckedMul(n, power - 1), "hub frequency") / (n - 1);
}

double AnalyticGamma(std::uint64_t n, int m) {
  if (n < 2 || m < 2) throw InvalidArgument("analytic gamma requires n, m >= 2");
  const double log_n1 = std::log(static_cast<double>(n) + 1.0);
  const double log_n = std::log(static_cast<double>(n));
  return 1.0 + m * log_n1 / (log_n + (m - 1) * log_n1);
}

std::string TraceToJson(const GenerationTrace& trace) {
  nlohmann::ordered_json steps = nlohmann::ordered_json::array();
  for (const StepRecord& record : trace.steps) {
    nlohmann::ordered_json entry;
    entry["step"] = record.step;
    entry["hubs"] = record.hubs;
    entry["nonhubs"] = record.nonhubs;
    entry["sc_links_added"] = record.sc_links_added;
    entry["x_size"] = record.x_size;
    entry["y_size"] = record.y_size;
    entry["deep_offshoot_size"] = record.deep_offshoot_size;
    steps.push_back(std::move(entry));
  }
  return steps.dump(2) + "\n";
}

}  // namespace sccg
