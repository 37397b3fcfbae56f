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

#include "disagree/graph.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <utility>

#include "disagree/errors.h"

namespace disagree {

WeightedGraph WeightedGraph::from_edges(std::size_t node_count, std::span<const Edge> edges,
                                        const GraphOptions& options) {
  std::vector<Edge> canonical;
  canonical.reserve(edges.size());
  for (const Edge& e : edges) {
    if (e.u >= node_count || e.v >= node_count) {
      throw DomainError("edge (" + std::to_string(e.u) + ", " + std::to_string(e.v) +
                        ") references a node outside [0, " + std::to_string(node_count) + ")");
    }
    if (!(e.w > 0.0) || !std::isfinite(e.w)) {
      throw DomainError("edge (" + std::to_string(e.u) + ", " + std::to_string(e.v) +
                        ") has nonpositive or non-finite weight");
    }
    if (e.u == e.v && !options.allow_self_loops) {
      throw DomainError("self-loop at node " + std::to_string(e.u) + " is not allowed");
    }
    canonical.push_back({std::min(e.u, e.v), std::max(e.u, e.v), e.w});
  }
  std::sort(canonical.begin(), canonical.end(), [](const Edge& a, const Edge& b) {
    return std::pair(a.u, a.v) < std::pair(b.u, b.v);
  });
  for (std::size_t i = 1; i < canonical.size(); ++i) {
    if (canonical[i].u == canonical[i - 1].u && canonical[i].v == canonical[i - 1].v) {
      throw DuplicateEdgeError("duplicate edge (" + std::to_string(canonical[i].u) + ", " +
                               std::to_string(canonical[i].v) + ")");
    }
  }

  WeightedGraph g;
  g.degrees_.assign(node_count, 0.0);
  g.offsets_.assign(node_count + 1, 0);
  for (const Edge& e : canonical) {
    ++g.offsets_[e.u + 1];
    if (e.u != e.v) ++g.offsets_[e.v + 1];
  }
  std::partial_sum(g.offsets_.begin(), g.offsets_.end(), g.offsets_.begin());
  g.targets_.resize(g.offsets_.back());
  g.weights_.resize(g.offsets_.back());

  // Canonical order is sorted by (u, v); filling the lower endpoint first and
  // the higher endpoint second keeps every adjacency row sorted by target.
  std::vector<std::size_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
  for (const Edge& e : canonical) {
    g.targets_[cursor[e.v]] = e.u;
    g.weights_[cursor[e.v]] = e.w;
    ++cursor[e.v];
  }
  for (const Edge& e : canonical) {
    if (e.u == e.v) continue;
    g.targets_[cursor[e.u]] = e.v;
    g.weights_[cursor[e.u]] = e.w;
    ++cursor[e.u];
  }
  for (std::size_t u = 0; u < node_count; ++u) {
    for (auto k = g.offsets_[u]; k < g.offsets_[u + 1]; ++k) g.degrees_[u] += g.weights_[k];
  }

  g.edge_count_ = canonical.size();
  g.total_degree_ = std::accumulate(g.degrees_.begin(), g.degrees_.end(), 0.0);
  g.max_degree_ = g.degrees_.empty() ? 0.0 : *std::max_element(g.degrees_.begin(), g.degrees_.end());
  if (!canonical.empty()) {
    g.min_weight_ = g.max_weight_ = canonical.front().w;
  }
  for (const Edge& e : canonical) {
    g.min_weight_ = std::min(g.min_weight_, e.w);
    g.max_weight_ = std::max(g.max_weight_, e.w);
    if (e.w != 1.0) g.unweighted_ = false;
    if (e.u == e.v) g.self_loops_ = true;
  }
  return g;
}

std::optional<double> WeightedGraph::edge_weight(NodeId u, NodeId v) const {
  auto row = neighbors(u);
  auto it = std::lower_bound(row.begin(), row.end(), v);
  if (it == row.end() || *it != v) return std::nullopt;
  return weights_[offsets_[u] + static_cast<std::size_t>(it - row.begin())];
}

std::vector<Edge> WeightedGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (NodeId u = 0; u < node_count(); ++u) {
    auto row = neighbors(u);
    auto w = neighbor_weights(u);
    for (std::size_t k = 0; k < row.size(); ++k) {
      if (row[k] >= u) out.push_back({u, row[k], w[k]});
    }
  }
  return out;
}

StationaryDistribution stationary_distribution(const WeightedGraph& g) {
  StationaryDistribution s;
  const std::size_t n = g.node_count();
  if (n == 1 && g.total_degree() == 0.0) {
    s.pi = {1.0};
    return s;
  }
  s.pi.resize(n);
  for (NodeId i = 0; i < n; ++i) s.pi[i] = g.degree(i) / g.total_degree();
  return s;
}

WeightedGraph two_step_graph(const WeightedGraph& g, std::size_t node_cap) {
  const std::size_t n = g.node_count();
  if (n > node_cap) {
    throw ResourceError("two-step graph of " + std::to_string(n) + " nodes exceeds the cap of " +
                        std::to_string(node_cap));
  }
  std::vector<Edge> edges;
  std::vector<double> acc(n, 0.0);
  std::vector<NodeId> touched;
  for (NodeId u = 0; u < n; ++u) {
    auto nu = g.neighbors(u);
    auto wu = g.neighbor_weights(u);
    for (std::size_t a = 0; a < nu.size(); ++a) {
      const NodeId v = nu[a];
      const double scale = wu[a] / g.degree(v);
      auto nv = g.neighbors(v);
      auto wv = g.neighbor_weights(v);
      for (std::size_t b = 0; b < nv.size(); ++b) {
        const NodeId w = nv[b];
        if (w < u) continue;
        if (acc[w] == 0.0) touched.push_back(w);
        acc[w] += scale * wv[b];
      }
    }
    std::sort(touched.begin(), touched.end());
    for (NodeId w : touched) {
      edges.push_back({u, w, acc[w]});
      acc[w] = 0.0;
    }
    touched.clear();
  }
  return WeightedGraph::from_edges(n, edges, {.allow_self_loops = true});
}

}  // namespace disagree
