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

#ifndef DISAGREE_GRAPH_H_
#define DISAGREE_GRAPH_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace disagree {

using NodeId = std::uint32_t;

// Dense-materialization cap shared by every O(N^2)-memory code path.
inline constexpr std::size_t kDefaultDenseCap = 20000;

struct Edge {
  NodeId u;
  NodeId v;
  double w;

  friend bool operator==(const Edge&, const Edge&) = default;
};

struct GraphOptions {
  // Base graphs never carry self-loops; two-step graphs and sparsifiers may.
  bool allow_self_loops = false;
};

// Immutable undirected weighted graph in compressed sparse row form.
//
// Every undirected edge {u, v} with u != v appears in the adjacency of both
// endpoints. A self-loop {u, u} appears once in the adjacency of u and its
// weight is counted once in d_u, so that d_u = sum_j a_uj holds with the
// loop contributing a_uu.
class WeightedGraph {
 public:
  WeightedGraph() = default;

  // Throws DomainError for out-of-range ids, nonpositive or non-finite
  // weights and disallowed self-loops; DuplicateEdgeError when an unordered
  // pair occurs twice.
  static WeightedGraph from_edges(std::size_t node_count, std::span<const Edge> edges,
                                  const GraphOptions& options = {});

  std::size_t node_count() const { return degrees_.size(); }
  // Number of undirected edges, self-loops included.
  std::size_t edge_count() const { return edge_count_; }

  std::span<const NodeId> neighbors(NodeId u) const {
    return {targets_.data() + offsets_[u], targets_.data() + offsets_[u + 1]};
  }
  std::span<const double> neighbor_weights(NodeId u) const {
    return {weights_.data() + offsets_[u], weights_.data() + offsets_[u + 1]};
  }
  std::size_t adjacency_offset(NodeId u) const { return offsets_[u]; }
  std::size_t adjacency_size() const { return targets_.size(); }

  double degree(NodeId u) const { return degrees_[u]; }
  std::span<const double> degrees() const { return degrees_; }
  double total_degree() const { return total_degree_; }
  double max_degree() const { return max_degree_; }

  double min_weight() const { return min_weight_; }
  double max_weight() const { return max_weight_; }
  // True when every edge weight equals 1.
  bool is_unweighted() const { return unweighted_; }
  bool has_self_loops() const { return self_loops_; }

  std::optional<double> edge_weight(NodeId u, NodeId v) const;

  // Canonical edge list: u <= v, sorted by (u, v).
  std::vector<Edge> edges() const;

 private:
  std::vector<std::size_t> offsets_{0};
  std::vector<NodeId> targets_;
  std::vector<double> weights_;
  std::vector<double> degrees_;
  std::size_t edge_count_ = 0;
  double total_degree_ = 0.0;
  double max_degree_ = 0.0;
  double min_weight_ = 0.0;
  double max_weight_ = 0.0;
  bool unweighted_ = true;
  bool self_loops_ = false;
};

// pi_i = d_i / d_sum. A single isolated node gets pi = (1).
struct StationaryDistribution {
  std::vector<double> pi;
};

StationaryDistribution stationary_distribution(const WeightedGraph& g);

// Graph whose random walk is two steps of the walk on g: the weight of
// {u, w} is sum_v a_uv a_vw / d_v, self-loops included. Degrees are those of
// g. Throws ResourceError when g has more than `node_cap` nodes.
WeightedGraph two_step_graph(const WeightedGraph& g, std::size_t node_cap = kDefaultDenseCap);

}  // namespace disagree

#endif  // DISAGREE_GRAPH_H_
