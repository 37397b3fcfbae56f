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

// Plain-text edge lists: one edge per line, whitespace separated, optional
// third weight column, '#' comment lines and blank lines skipped.

#ifndef DISAGREE_EDGE_LIST_H_
#define DISAGREE_EDGE_LIST_H_

#include <cstdint>
#include <istream>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "disagree/graph.h"

namespace disagree {

enum class EdgeListFormat {
  kAuto,        // each line may carry 2 or 3 columns
  kUnweighted,  // exactly `u v`; weight 1
  kWeighted,    // exactly `u v w`
};

struct LoadedGraph {
  WeightedGraph graph;
  // original_ids[k] is the id the input used for dense node k. Dense ids
  // follow ascending order of the original ids.
  std::vector<std::uint64_t> original_ids;
};

LoadedGraph load_edge_list(std::istream& in, EdgeListFormat format = EdgeListFormat::kAuto);
LoadedGraph load_edge_list_file(const std::string& path,
                                EdgeListFormat format = EdgeListFormat::kAuto);

// Writes the canonical edge list, tab separated. The weight column is
// emitted only for weighted graphs. When `original_ids` is empty the dense
// ids are written.
void write_edge_list(std::ostream& out, const WeightedGraph& g,
                     std::span<const std::uint64_t> original_ids = {});

// FNV-1a hash of the canonical edge list; invariant under input edge order.
std::uint64_t graph_fingerprint(const WeightedGraph& g);

}  // namespace disagree

#endif  // DISAGREE_EDGE_LIST_H_
