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


// Spectral sparsifier of the two-step Laplacian L(G') = D - A D^{-1} A built
// by sampling two-step paths.

#ifndef DISAGREE_SPARSIFY_H_
#define DISAGREE_SPARSIFY_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "disagree/graph.h"

namespace disagree {

// Loop-free weighted Laplacian with CSR storage.
class SparsifiedLaplacian {
 public:
  SparsifiedLaplacian(WeightedGraph graph, std::size_t sample_count, double epsilon);

  std::size_t node_count() const { return graph_.node_count(); }
  std::size_t edge_count() const { return graph_.edge_count(); }
  const WeightedGraph& graph() const { return graph_; }
  // Canonical edge list; the orientation u < v fixes the incidence rows.
  std::span<const Edge> edges() const { return edges_; }

  // y = L x.
  void apply(std::span<const double> x, std::span<double> y) const;
  std::span<const double> diagonal() const { return graph_.degrees(); }

  double total_degree() const { return graph_.total_degree(); }
  double max_degree() const { return graph_.max_degree(); }
  double min_weight() const { return graph_.min_weight(); }
  double max_weight() const { return graph_.max_weight(); }
  bool connected() const { return connected_; }

  std::size_t sample_count() const { return sample_count_; }
  double epsilon() const { return epsilon_; }

  Eigen::MatrixXd dense() const;

 private:
  WeightedGraph graph_;
  std::vector<Edge> edges_;
  std::size_t sample_count_;
  double epsilon_;
  bool connected_;
};

struct SparsifyOptions {
  double oversample = 1.0;  // c in s = ceil(c M eps^-2 log2 N)
  std::size_t max_retries = 3;
  // Exact sample count; bypasses the formula (tests only).
  std::size_t sample_count_override = 0;
};

std::size_t sparsifier_sample_count(const WeightedGraph& g, double epsilon, double oversample);

// Each sampled path u - v - w adds d_sum / (2 s) to {u, w}; samples with
// u = w add nothing. A disconnected result is retried with doubled s up to
// `max_retries` times, then ConvergenceError.
SparsifiedLaplacian sparsify_two_step(const WeightedGraph& g, double epsilon, std::uint64_t seed,
                                      const SparsifyOptions& options = {});

}  // namespace disagree

#endif  // DISAGREE_SPARSIFY_H_
