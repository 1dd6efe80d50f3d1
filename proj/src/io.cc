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

#include "sccg/io.h"

#include <openssl/evp.h>

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <sstream>

#include "json.hpp"
#include "sccg/error.h"

namespace sccg {
namespace {

bool ParseUnsigned(std::string_view token, std::uint64_t& out) {
  if (token.empty()) return false;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), out);
  return ec == std::errc() && ptr == token.data() + token.size();
}

std::vector<std::string_view> Tokens(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    if (j > i) tokens.push_back(line.substr(i, j - i));
    i = j;
  }
  return tokens;
}

// Accepts "# nodes N", "# nodes: N" and "# node_count N".
std::optional<std::uint64_t> NodeCountComment(std::string_view line) {
  auto tokens = Tokens(line.substr(1));
  if (tokens.size() != 2) return std::nullopt;
  std::string_view key = tokens[0];
  if (!key.empty() && key.back() == ':') key.remove_suffix(1);
  if (key != "nodes" && key != "node_count") return std::nullopt;
  std::uint64_t n = 0;
  if (!ParseUnsigned(tokens[1], n)) return std::nullopt;
  return n;
}

}  // namespace

void WriteEdgeList(std::ostream& out, const Graph& graph) {
  out << "# nodes " << graph.node_count() << '\n';
  out << "# edges " << graph.edge_count() << '\n';
  char buffer[32];
  for (NodeId u = 0; u < graph.node_count(); ++u) {
    for (NodeId v : graph.neighbors(u)) {
      if (v <= u) continue;
      const int len = std::snprintf(buffer, sizeof(buffer), "%u %u\n", u, v);
      out.write(buffer, len);
    }
  }
}

std::string EdgeListText(const Graph& graph) {
  std::ostringstream out;
  WriteEdgeList(out, graph);
  return out.str();
}

Graph ReadEdgeList(std::istream& in) {
  std::optional<std::uint64_t> declared;
  bool first_comment = true;
  std::vector<std::pair<Edge, std::size_t>> edges;
  std::uint64_t max_id = 0;
  bool any_edge = false;

  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto start = line.find_first_not_of(" \t");
    if (start == std::string::npos) continue;
    if (line[start] == '#') {
      if (first_comment) {
        declared = NodeCountComment(std::string_view(line).substr(start));
        first_comment = false;
      }
      continue;
    }
    first_comment = false;
    const auto tokens = Tokens(line);
    std::uint64_t u = 0;
    std::uint64_t v = 0;
    if (tokens.size() != 2 || !ParseUnsigned(tokens[0], u) ||
        !ParseUnsigned(tokens[1], v)) {
      throw MalformedInput("expected two non-negative integer ids", line_no);
    }
    if (u > 0xFFFFFFFEull || v > 0xFFFFFFFEull) {
      throw MalformedInput("node id out of range", line_no);
    }
    if (u == v) throw MalformedInput("self-loop on node " + std::to_string(u), line_no);
    max_id = std::max({max_id, u, v});
    any_edge = true;
    edges.push_back({Edge{static_cast<NodeId>(std::min(u, v)),
                          static_cast<NodeId>(std::max(u, v))},
                     line_no});
  }
  if (in.bad()) throw IoError("failed reading edge list");

  const std::uint64_t node_count =
      declared ? *declared : (any_edge ? max_id + 1 : 0);
  if (node_count > 0xFFFFFFFFull) {
    throw MalformedInput("declared node count exceeds the 32-bit id range", 1);
  }

  std::vector<Edge> plain;
  plain.reserve(edges.size());
  for (const auto& [edge, where] : edges) {
    if (edge.v >= node_count) {
      throw MalformedInput("node id " + std::to_string(edge.v) +
                               " >= declared node count " +
                               std::to_string(node_count),
                           where);
    }
    plain.push_back(edge);
  }
  std::vector<std::size_t> order(edges.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return plain[a] < plain[b];
  });
  for (std::size_t k = 1; k < order.size(); ++k) {
    if (plain[order[k]] == plain[order[k - 1]]) {
      const Edge& e = plain[order[k]];
      throw MalformedInput("duplicate edge " + std::to_string(e.u) + " " +
                               std::to_string(e.v),
                           edges[order[k]].second);
    }
  }
  return BuildGraph(plain, static_cast<NodeId>(node_count));
}

void WriteMetaCsv(std::ostream& out, std::span<const NodeMeta> meta) {
  out << "node,birth_step,node_class,role,corona_parent,copy_id,ancestor_hubs\n";
  for (std::size_t v = 0; v < meta.size(); ++v) {
    const NodeMeta& m = meta[v];
    out << v << ',' << m.birth_step << ',' << ToString(m.node_class) << ','
        << ToString(m.role) << ',';
    if (m.corona_parent) out << *m.corona_parent;
    out << ',' << m.copy_id << ',';
    for (std::size_t k = 0; k < m.ancestor_hubs.size(); ++k) {
      if (k > 0) out << ';';
      out << m.ancestor_hubs[k];
    }
    out << '\n';
  }
}

std::string MetaCsvText(std::span<const NodeMeta> meta) {
  std::ostringstream out;
  WriteMetaCsv(out, meta);
  return out.str();
}

std::vector<NodeId> ReadTraceHubs(std::istream& in) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw MalformedInput(std::string("trace JSON: ") + e.what());
  }
  if (!doc.is_array()) throw MalformedInput("trace JSON: expected an array");
  std::vector<NodeId> hubs;
  for (const auto& step : doc) {
    if (!step.is_object() || !step.contains("hubs") || !step["hubs"].is_array()) {
      throw MalformedInput("trace JSON: each step needs a 'hubs' array");
    }
    for (const auto& hub : step["hubs"]) {
      if (!hub.is_number_unsigned()) {
        throw MalformedInput("trace JSON: hub ids must be non-negative integers");
      }
      hubs.push_back(hub.get<NodeId>());
    }
  }
  return hubs;
}

std::string Sha256Hex(std::string_view data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  if (EVP_Digest(data.data(), data.size(), digest, &length, EVP_sha256(),
                 nullptr) != 1) {
    throw IoError("SHA-256 digest failed");
  }
  static constexpr char kHex[] = "0123456789abcdef";
  std::string hex;
  hex.reserve(2 * length);
  for (unsigned int i = 0; i < length; ++i) {
    hex.push_back(kHex[digest[i] >> 4]);
    hex.push_back(kHex[digest[i] & 0xF]);
  }
  return hex;
}

}  // namespace sccg
