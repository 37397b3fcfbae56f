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


#ifndef DISAGREE_WALK_H_
#define DISAGREE_WALK_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "disagree/graph.h"
#include "disagree/rng.h"

namespace disagree {

// Vose alias table over a fixed, nonnegative weight vector.
class AliasTable {
 public:
  AliasTable() = default;
  explicit AliasTable(std::span<const double> weights);

  std::size_t size() const { return prob_.size(); }
  std::size_t sample(Rng& rng) const {
    const std::size_t k = rng.below(prob_.size());
    return rng.uniform() < prob_[k] ? k : alias_[k];
  }

 private:
  std::vector<double> prob_;
  std::vector<std::uint32_t> alias_;
};

// Samples transitions of the simple random walk P = D^{-1} A. Unweighted
// graphs index neighbors directly; weighted graphs use one alias table per
// node laid out alongside the CSR arrays.
class TransitionSampler {
 public:
  explicit TransitionSampler(const WeightedGraph& g);

  NodeId step(NodeId u, Rng& rng) const {
    auto row = graph_->neighbors(u);
    if (uniform_) return row[rng.below(row.size())];
    const std::size_t base = graph_->adjacency_offset(u);
    const std::size_t k = rng.below(row.size());
    return rng.uniform() < prob_[base + k] ? row[k] : row[alias_[base + k]];
  }

  // One move of the walk on P^2.
  NodeId two_steps(NodeId u, Rng& rng) const { return step(step(u, rng), rng); }

  const WeightedGraph& graph() const { return *graph_; }

 private:
  const WeightedGraph* graph_;
  bool uniform_;
  std::vector<double> prob_;
  std::vector<std::uint32_t> alias_;
};

}  // namespace disagree

#endif  // DISAGREE_WALK_H_
