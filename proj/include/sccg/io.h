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

#ifndef SCCG_IO_H_
#define SCCG_IO_H_

#include <istream>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sccg/graph.h"

namespace sccg {

// Edge-list text:
//   # nodes <N>
//   # edges <E>
//   u v        (one edge per line, u < v, lexicographic order)
// Lines are LF-terminated.
void WriteEdgeList(std::ostream& out, const Graph& graph);
std::string EdgeListText(const Graph& graph);

// Reads an edge list. The node count comes from a "# nodes <N>" first comment
// line; without one it is max id + 1. Either endpoint order is accepted.
// Throws MalformedInput (with the line number) for bad tokens, self-loops,
// duplicate edges, or ids >= N.
Graph ReadEdgeList(std::istream& in);

// node,birth_step,node_class,role,corona_parent,copy_id,ancestor_hubs
// corona_parent is empty for seed nodes; ancestor_hubs is ';'-separated.
void WriteMetaCsv(std::ostream& out, std::span<const NodeMeta> meta);
std::string MetaCsvText(std::span<const NodeMeta> meta);

// Collects every hub id from a trace JSON document. Throws MalformedInput.
std::vector<NodeId> ReadTraceHubs(std::istream& in);

// Lowercase hex SHA-256 of `data`.
std::string Sha256Hex(std::string_view data);

}  // namespace sccg

#endif  // SCCG_IO_H_
