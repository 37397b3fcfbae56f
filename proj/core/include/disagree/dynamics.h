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


// Direct simulation baselines: the noisy DeGroot recursion and Monte Carlo
// hitting times of the two-step walk.

#ifndef DISAGREE_DYNAMICS_H_
#define DISAGREE_DYNAMICS_H_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "disagree/graph.h"

namespace disagree {

enum class NoiseKind { kGaussian, kRademacher };

struct MCConfig {
  std::size_t burn_in = 1000;
  std::size_t horizon = 100000;
  std::size_t truncation_cap = 10000;  // max P^2 moves per hitting walk
  std::size_t walks_per_target = 10000;
  std::uint64_t seed = 0;
  NoiseKind noise = NoiseKind::kGaussian;
  std::size_t node_cap = 10000;  // simulate_mc_delta refuses larger graphs
  std::size_t batches = 20;      // batch means for the standard error
};

// 10 * ceil(1 / (1 - lambda)).
std::size_t default_burn_in(double lambda);

struct OpinionState {
  std::vector<double> x;
  std::size_t t = 0;
  std::uint64_t noise_seed = 0;
};

// x <- P x + phi, then recentred so that pi^T x = 0. Centring commutes with
// P and leaves the disagreement unchanged.
void degroot_step(const WeightedGraph& g, OpinionState& state, std::vector<double>& scratch,
                  NoiseKind noise, std::uint64_t seed);

struct DynamicsResult {
  double delta = 0.0;
  double standard_error = 0.0;  // batch means
  std::size_t steps = 0;
  std::vector<std::string> warnings;
};

// Time average of sum_i pi_i (x_i - pi^T x)^2 after burn-in.
DynamicsResult simulate_noisy_degroot(const WeightedGraph& g, const MCConfig& config);

struct MCResult {
  double delta = 0.0;
  // Per target i: mean number of P^2 moves from a pi-distributed start.
  std::vector<double> mean_hitting_time;
  std::vector<double> truncation_rate;
  double max_truncation_rate = 0.0;
  std::vector<std::string> warnings;
};

// delta = sum_i pi_i^2 sum_j pi_j H_ji(P^2). Walks that reach the cap count
// as the cap; a target with more than 10% truncated walks adds a warning.
MCResult simulate_mc_delta(const WeightedGraph& g, const MCConfig& config);

}  // namespace disagree

#endif  // DISAGREE_DYNAMICS_H_
