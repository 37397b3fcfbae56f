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


#include "disagree/walk.h"

#include <numeric>

#include "disagree/errors.h"

namespace disagree {
namespace {

// Fills prob/alias[0, n) from weights; entries are local indices.
void build_alias(std::span<const double> weights, double* prob, std::uint32_t* alias) {
  const std::size_t n = weights.size();
  const double total = std::accumulate(weights.begin(), weights.end(), 0.0);
  std::vector<double> scaled(n);
  std::vector<std::uint32_t> small, large;
  for (std::size_t k = 0; k < n; ++k) {
    scaled[k] = weights[k] * static_cast<double>(n) / total;
    (scaled[k] < 1.0 ? small : large).push_back(static_cast<std::uint32_t>(k));
  }
  while (!small.empty() && !large.empty()) {
    const std::uint32_t s = small.back();
    small.pop_back();
    const std::uint32_t l = large.back();
    prob[s] = scaled[s];
    alias[s] = l;
    scaled[l] -= 1.0 - scaled[s];
    if (scaled[l] < 1.0) {
      large.pop_back();
      small.push_back(l);
    }
  }
  // Leftovers are 1 up to rounding.
  for (std::uint32_t k : large) prob[k] = 1.0, alias[k] = k;
  for (std::uint32_t k : small) prob[k] = 1.0, alias[k] = k;
}

}  // namespace

AliasTable::AliasTable(std::span<const double> weights)
    : prob_(weights.size()), alias_(weights.size()) {
  if (weights.empty()) throw DomainError("alias table needs at least one weight");
  build_alias(weights, prob_.data(), alias_.data());
}

TransitionSampler::TransitionSampler(const WeightedGraph& g)
    : graph_(&g), uniform_(g.is_unweighted()) {
  for (NodeId u = 0; u < g.node_count(); ++u) {
    if (g.neighbors(u).empty()) {
      throw DomainError("node " + std::to_string(u) + " is isolated; the walk is undefined");
    }
  }
  if (uniform_) return;
  prob_.resize(g.adjacency_size());
  alias_.resize(g.adjacency_size());
  for (NodeId u = 0; u < g.node_count(); ++u) {
    const std::size_t base = g.adjacency_offset(u);
    build_alias(g.neighbor_weights(u), prob_.data() + base, alias_.data() + base);
  }
}

}  // namespace disagree
