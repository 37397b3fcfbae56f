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

#ifndef DISAGREE_VALIDATION_H_
#define DISAGREE_VALIDATION_H_

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "disagree/graph.h"

namespace disagree {

struct GraphValidation {
  bool connected = false;
  // True iff every component is 2-colorable. Any odd cycle, self-loops
  // included, makes this false.
  bool bipartite = false;
  std::size_t component_count = 0;
  // Set only for disconnected graphs: lcc_nodes[k] is the node of g that
  // becomes node k of the largest connected component. Equal-size components
  // are ranked by their smallest node id.
  std::optional<std::vector<NodeId>> lcc_nodes;
};

// Never throws; callers decide what to do with the flags.
GraphValidation validate(const WeightedGraph& g);

// Subgraph induced by `nodes`, relabeled so nodes[k] becomes k.
WeightedGraph induced_subgraph(const WeightedGraph& g, std::span<const NodeId> nodes);

// Throws DomainError unless g is connected and non-bipartite.
void require_connected_non_bipartite(const WeightedGraph& g);

}  // namespace disagree

#endif  // DISAGREE_VALIDATION_H_
