// Copyright 2026 The disagree-kit Authors
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

#include "disagree/validation.h"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <queue>

#include "disagree/errors.h"

namespace disagree {

GraphValidation validate(const WeightedGraph& g) {
  const std::size_t n = g.node_count();
  constexpr auto kUnseen = std::numeric_limits<std::uint32_t>::max();
  std::vector<std::uint32_t> component(n, kUnseen);
  std::vector<std::uint8_t> color(n, 0);
  std::vector<std::size_t> sizes;
  std::vector<NodeId> smallest;
  bool bipartite = true;

  std::queue<NodeId> frontier;
  for (NodeId root = 0; root < n; ++root) {
    if (component[root] != kUnseen) continue;
    const auto id = static_cast<std::uint32_t>(sizes.size());
    sizes.push_back(0);
    smallest.push_back(root);
    component[root] = id;
    frontier.push(root);
    while (!frontier.empty()) {
      const NodeId u = frontier.front();
      frontier.pop();
      ++sizes[id];
      for (NodeId v : g.neighbors(u)) {
        if (component[v] == kUnseen) {
          component[v] = id;
          color[v] = color[u] ^ 1;
          frontier.push(v);
        } else if (color[v] == color[u]) {
          bipartite = false;
        }
      }
    }
  }

  GraphValidation out;
  out.component_count = sizes.size();
  out.connected = sizes.size() <= 1;
  out.bipartite = bipartite;
  if (!out.connected) {
    // Components were discovered in order of their smallest node, so the
    // first maximum wins ties.
    const auto best = static_cast<std::uint32_t>(
        std::max_element(sizes.begin(), sizes.end()) - sizes.begin());
    std::vector<NodeId> nodes;
    nodes.reserve(sizes[best]);
    for (NodeId u = 0; u < n; ++u) {
      if (component[u] == best) nodes.push_back(u);
    }
    out.lcc_nodes = std::move(nodes);
  }
  return out;
}

WeightedGraph induced_subgraph(const WeightedGraph& g, std::span<const NodeId> nodes) {
  constexpr auto kAbsent = std::numeric_limits<NodeId>::max();
  std::vector<NodeId> relabel(g.node_count(), kAbsent);
  for (std::size_t k = 0; k < nodes.size(); ++k) relabel[nodes[k]] = static_cast<NodeId>(k);
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    if (relabel[e.u] != kAbsent && relabel[e.v] != kAbsent) {
      edges.push_back({relabel[e.u], relabel[e.v], e.w});
    }
  }
  return WeightedGraph::from_edges(nodes.size(), edges,
                                   {.allow_self_loops = g.has_self_loops()});
}

void require_connected_non_bipartite(const WeightedGraph& g) {
  const GraphValidation v = validate(g);
  if (!v.connected) throw DomainError("graph is disconnected");
  if (v.bipartite && g.node_count() > 1) {
    throw DomainError("graph is bipartite; the two-step walk is not ergodic");
  }
}

}  // namespace disagree
