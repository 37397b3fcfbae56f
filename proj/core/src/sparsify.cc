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


#include "disagree/sparsify.h"

#include <algorithm>
#include <cmath>

#include "disagree/errors.h"
#include "disagree/rng.h"
#include "disagree/validation.h"
#include "disagree/walk.h"

namespace disagree {

SparsifiedLaplacian::SparsifiedLaplacian(WeightedGraph graph, std::size_t sample_count,
                                         double epsilon)
    : graph_(std::move(graph)),
      edges_(graph_.edges()),
      sample_count_(sample_count),
      epsilon_(epsilon),
      connected_(validate(graph_).connected) {
  if (graph_.has_self_loops()) throw DomainError("sparsified Laplacian must be loop-free");
}

void SparsifiedLaplacian::apply(std::span<const double> x, std::span<double> y) const {
  for (NodeId u = 0; u < graph_.node_count(); ++u) {
    auto row = graph_.neighbors(u);
    auto w = graph_.neighbor_weights(u);
    double acc = graph_.degree(u) * x[u];
    for (std::size_t k = 0; k < row.size(); ++k) acc -= w[k] * x[row[k]];
    y[u] = acc;
  }
}

Eigen::MatrixXd SparsifiedLaplacian::dense() const {
  const auto n = static_cast<Eigen::Index>(node_count());
  Eigen::MatrixXd l = Eigen::MatrixXd::Zero(n, n);
  for (const Edge& e : edges_) {
    l(e.u, e.u) += e.w;
    l(e.v, e.v) += e.w;
    l(e.u, e.v) -= e.w;
    l(e.v, e.u) -= e.w;
  }
  return l;
}

std::size_t sparsifier_sample_count(const WeightedGraph& g, double epsilon, double oversample) {
  const double n = static_cast<double>(g.node_count());
  const double s = oversample * static_cast<double>(g.edge_count()) * std::log2(std::max(n, 2.0)) /
                   (epsilon * epsilon);
  return std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(s)));
}

SparsifiedLaplacian sparsify_two_step(const WeightedGraph& g, double epsilon, std::uint64_t seed,
                                      const SparsifyOptions& options) {
  if (!(epsilon > 0.0 && epsilon <= 0.5)) {
    throw DomainError("sparsifier epsilon must lie in (0, 1/2]");
  }
  if (!(options.oversample > 0.0)) throw DomainError("oversampling constant must be positive");
  const std::size_t n = g.node_count();
  const AliasTable start(g.degrees());
  const TransitionSampler walk(g);
  std::size_t s = options.sample_count_override > 0
                      ? options.sample_count_override
                      : sparsifier_sample_count(g, epsilon, options.oversample);

  std::vector<std::uint64_t> keys;
  for (std::size_t attempt = 0;; ++attempt) {
    Rng rng = Rng::stream(seed, {attempt});
    keys.clear();
    keys.reserve(s);
    for (std::size_t t = 0; t < s; ++t) {
      const auto u = static_cast<NodeId>(start.sample(rng));
      const NodeId w = walk.two_steps(u, rng);
      if (u == w) continue;
      keys.push_back((static_cast<std::uint64_t>(std::min(u, w)) << 32) | std::max(u, w));
    }
    std::sort(keys.begin(), keys.end());

    const double unit = g.total_degree() / (2.0 * static_cast<double>(s));
    std::vector<Edge> edges;
    for (std::size_t a = 0; a < keys.size();) {
      std::size_t b = a;
      while (b < keys.size() && keys[b] == keys[a]) ++b;
      edges.push_back({static_cast<NodeId>(keys[a] >> 32),
                       static_cast<NodeId>(keys[a] & 0xffffffffu),
                       unit * static_cast<double>(b - a)});
      a = b;
    }
    SparsifiedLaplacian lap(WeightedGraph::from_edges(n, edges), s, epsilon);
    if (lap.connected()) return lap;
    if (attempt == options.max_retries) {
      throw ConvergenceError("sparsifier is disconnected after " + std::to_string(attempt + 1) +
                                 " attempts (last s = " + std::to_string(s) + ")",
                             0.0);
    }
    s *= 2;
  }
}

}  // namespace disagree
