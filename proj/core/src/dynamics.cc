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


#include "disagree/dynamics.h"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "disagree/errors.h"
#include "disagree/parallel.h"
#include "disagree/rng.h"
#include "disagree/walk.h"

namespace disagree {

std::size_t default_burn_in(double lambda) {
  const double mix = 1.0 / (1.0 - lambda);
  // Shave a relative 1e-9 so exact integers do not round up.
  return 10 * static_cast<std::size_t>(std::ceil(mix - 1e-9 * std::max(1.0, mix)));
}

namespace {

class NoiseSource {
 public:
  NoiseSource(NoiseKind kind, std::uint64_t seed) : kind_(kind), rng_(seed) {}
  double operator()() {
    if (kind_ == NoiseKind::kRademacher) return (rng_() >> 63) ? 1.0 : -1.0;
    return normal_(rng_);
  }

 private:
  NoiseKind kind_;
  Rng rng_;
  std::normal_distribution<double> normal_;
};

void step_with(const WeightedGraph& g, std::span<const double> pi, std::vector<double>& x,
               std::vector<double>& next, NoiseSource& noise) {
  const std::size_t n = g.node_count();
  double mean = 0.0;
  for (NodeId u = 0; u < n; ++u) {
    auto row = g.neighbors(u);
    auto w = g.neighbor_weights(u);
    double acc = 0.0;
    for (std::size_t k = 0; k < row.size(); ++k) acc += w[k] * x[row[k]];
    next[u] = acc / g.degree(u) + noise();
    mean += pi[u] * next[u];
  }
  for (NodeId u = 0; u < n; ++u) next[u] -= mean;
  x.swap(next);
}

}  // namespace

void degroot_step(const WeightedGraph& g, OpinionState& state, std::vector<double>& scratch,
                  NoiseKind noise, std::uint64_t seed) {
  const StationaryDistribution st = stationary_distribution(g);
  NoiseSource source(noise, derive_seed(seed, {state.noise_seed, state.t}));
  scratch.resize(g.node_count());
  step_with(g, st.pi, state.x, scratch, source);
  ++state.t;
}

DynamicsResult simulate_noisy_degroot(const WeightedGraph& g, const MCConfig& config) {
  if (config.horizon < 1) throw DomainError("horizon must be at least 1");
  const std::size_t n = g.node_count();
  const StationaryDistribution st = stationary_distribution(g);
  NoiseSource noise(config.noise, derive_seed(config.seed, {0}));
  std::vector<double> x(n, 0.0), next(n);

  for (std::size_t t = 0; t < config.burn_in; ++t) step_with(g, st.pi, x, next, noise);

  const std::size_t batches = std::max<std::size_t>(1, std::min(config.batches, config.horizon));
  std::vector<double> batch_sum(batches, 0.0);
  std::vector<std::size_t> batch_len(batches, 0);
  double total = 0.0;
  for (std::size_t t = 0; t < config.horizon; ++t) {
    step_with(g, st.pi, x, next, noise);
    double v = 0.0;
    for (std::size_t i = 0; i < n; ++i) v += st.pi[i] * x[i] * x[i];
    if (!std::isfinite(v)) {
      throw ConvergenceError("opinion vector overflowed at step " + std::to_string(t), v);
    }
    total += v;
    const std::size_t b = t * batches / config.horizon;
    batch_sum[b] += v;
    ++batch_len[b];
  }

  DynamicsResult out;
  out.steps = config.burn_in + config.horizon;
  out.delta = total / static_cast<double>(config.horizon);
  if (batches > 1) {
    double ss = 0.0;
    for (std::size_t b = 0; b < batches; ++b) {
      const double m = batch_sum[b] / static_cast<double>(batch_len[b]) - out.delta;
      ss += m * m;
    }
    out.standard_error =
        std::sqrt(ss / static_cast<double>(batches - 1) / static_cast<double>(batches));
  }
  return out;
}

MCResult simulate_mc_delta(const WeightedGraph& g, const MCConfig& config) {
  const std::size_t n = g.node_count();
  if (n > config.node_cap) {
    throw ResourceError("SimulateMC on " + std::to_string(n) + " nodes exceeds the cap of " +
                        std::to_string(config.node_cap));
  }
  if (config.truncation_cap < 1) throw DomainError("truncation cap must be at least 1");
  if (config.walks_per_target < 1) throw DomainError("walks per target must be at least 1");
  const StationaryDistribution st = stationary_distribution(g);
  const AliasTable start(g.degrees());
  const TransitionSampler walk(g);

  MCResult out;
  out.mean_hitting_time.assign(n, 0.0);
  out.truncation_rate.assign(n, 0.0);
  parallel_for(n, [&](std::size_t target) {
    Rng rng = Rng::stream(config.seed, {target});
    const auto i = static_cast<NodeId>(target);
    double total = 0.0;
    std::size_t truncated = 0;
    for (std::size_t k = 0; k < config.walks_per_target; ++k) {
      auto u = static_cast<NodeId>(start.sample(rng));
      std::size_t moves = 0;
      while (u != i && moves < config.truncation_cap) {
        u = walk.two_steps(u, rng);
        ++moves;
      }
      if (u != i) ++truncated;
      total += static_cast<double>(moves);
    }
    const double walks = static_cast<double>(config.walks_per_target);
    out.mean_hitting_time[target] = total / walks;
    out.truncation_rate[target] = static_cast<double>(truncated) / walks;
  });

  for (NodeId i = 0; i < n; ++i) {
    out.delta += st.pi[i] * st.pi[i] * out.mean_hitting_time[i];
    out.max_truncation_rate = std::max(out.max_truncation_rate, out.truncation_rate[i]);
  }
  if (out.max_truncation_rate > 0.1) {
    std::ostringstream msg;
    msg << "severe truncation: up to " << 100.0 * out.max_truncation_rate
        << "% of walks hit the cap of " << config.truncation_cap
        << " moves; the estimate is biased low";
    out.warnings.push_back(msg.str());
  }
  return out;
}

}  // namespace disagree
