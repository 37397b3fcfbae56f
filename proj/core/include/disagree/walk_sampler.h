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


// Sublinear estimator of delta from truncated even-length random walks
// started at a uniform node sample.

#ifndef DISAGREE_WALK_SAMPLER_H_
#define DISAGREE_WALK_SAMPLER_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "disagree/estimate.h"
#include "disagree/graph.h"
#include "disagree/walk.h"

namespace disagree {

enum class ReturnCounting {
  // p^{2j}_ii estimated by the fraction of 2j-step walks that end at i.
  kEndpoint,
  // Debug only: counts visits to i at steps 0..2j-1 of each walk. Estimates
  // a different quantity and carries no accuracy guarantee.
  kPseudocodeVisits,
};

struct SampleParams {
  double epsilon = 0.25;
  double lambda_bound = 0.5;
  std::size_t ell = 1;
  std::size_t walks_per_length = 1;  // r
  std::size_t node_budget = 1;       // |X|
  std::uint64_t seed = 0;
  // One walk of length 2(ell-1) per repetition serves every j.
  bool reuse_walks = false;
  ReturnCounting counting = ReturnCounting::kEndpoint;
};

// ceil(log(2 / (eps (1 - lambda))) / (2 log(1 / lambda))), at least 1.
// Appends a warning when the formula yields a value below 1.
std::size_t truncation_length(double epsilon, double lambda_bound,
                              std::vector<std::string>* warnings = nullptr);
// ceil(2 ell^2 log(2 n^2 ell) / eps^2).
std::size_t walks_per_length(std::size_t n, std::size_t ell, double epsilon);
// min(n, ceil(sqrt(n log n) / ((1 - lambda) eps))).
std::size_t node_budget(std::size_t n, double epsilon, double lambda_bound);

// Throws DomainError unless eps > 0, lambda in (0, 1) and n >= 2.
SampleParams derive_params(std::size_t n, double epsilon, double lambda_bound,
                           std::vector<std::string>* warnings = nullptr);

// Total number of single walk steps sample_delta will take.
double sample_cost(const SampleParams& params);

// Even-step return probability estimates (p^0, p^2, ..., p^{2(ell-1)}) for
// node i; p^0 = 1.
std::vector<double> estimate_returns(const TransitionSampler& sampler, NodeId i,
                                     const SampleParams& params);
std::vector<double> estimate_returns(const WeightedGraph& g, NodeId i, const SampleParams& params);

struct SampleDeltaResult {
  DisagreementEstimate estimate;  // per_node holds the sampled nodes
  SampleParams params;
  // Kemeny constant of G' from the same walks.
  double kemeny = 0.0;
};

// The graph must be connected and non-bipartite; the caller validates.
SampleDeltaResult sample_delta(const WeightedGraph& g, const SampleParams& params);
double estimate_kemeny_two_step(const WeightedGraph& g, const SampleParams& params);

struct GapEstimate {
  double lambda_hat = 0.0;    // power-iteration estimate of max(|lambda_2|, |lambda_N|)
  double lambda_bound = 0.0;  // lambda_hat with the gap 1 - lambda_hat shrunk by 5%
  std::size_t iterations = 0;
};

// Power iteration on S^2 restricted to the complement of psi_1.
GapEstimate estimate_spectral_bound(const WeightedGraph& g, std::size_t iterations = 2000,
                                    std::uint64_t seed = 0);

}  // namespace disagree

#endif  // DISAGREE_WALK_SAMPLER_H_
