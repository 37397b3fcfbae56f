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


#include "disagree/walk_sampler.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <sstream>
#include <unordered_set>

#include "disagree/errors.h"
#include "disagree/parallel.h"
#include "disagree/rng.h"

namespace disagree {
namespace {

// Stream tags keep the node sample and the walks on disjoint streams.
constexpr std::uint64_t kNodeSampleTag = 1;
constexpr std::uint64_t kWalkTag = 2;
constexpr std::uint64_t kGapTag = 3;

// Formula values that land on an integer up to rounding must not round up.
std::size_t ceil_count(double x) {
  return static_cast<std::size_t>(std::ceil(x - 1e-9 * std::max(1.0, std::abs(x))));
}

// Uniform sample of `k` distinct ids from [0, n), sorted. Floyd's algorithm,
// O(k) expected time and memory.
std::vector<NodeId> sample_without_replacement(std::size_t n, std::size_t k, Rng& rng) {
  std::vector<NodeId> out;
  if (k >= n) {
    out.resize(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = static_cast<NodeId>(i);
    return out;
  }
  std::unordered_set<NodeId> chosen;
  chosen.reserve(2 * k);
  for (std::size_t j = n - k; j < n; ++j) {
    const auto t = static_cast<NodeId>(rng.below(j + 1));
    if (!chosen.insert(t).second) chosen.insert(static_cast<NodeId>(j));
  }
  out.assign(chosen.begin(), chosen.end());
  std::sort(out.begin(), out.end());
  return out;
}

void validate_params(const SampleParams& params) {
  if (params.ell < 1) throw DomainError("truncation length must be at least 1");
  if (params.walks_per_length < 1) throw DomainError("walks per length must be at least 1");
  if (params.node_budget < 1) throw DomainError("node budget must be at least 1");
}

}  // namespace

std::size_t truncation_length(double epsilon, double lambda_bound,
                              std::vector<std::string>* warnings) {
  if (!(epsilon > 0.0)) throw DomainError("epsilon must be positive");
  const double arg = 2.0 / (epsilon * (1.0 - lambda_bound));
  if (arg <= 1.0) {
    if (warnings) {
      warnings->push_back("epsilon * (1 - lambda) >= 2 gives a nonpositive truncation length; "
                          "clamped to 1");
    }
    return 1;
  }
  if (lambda_bound <= 0.0) return 1;
  const double ell = std::log(arg) / (2.0 * std::log(1.0 / lambda_bound));
  return std::max<std::size_t>(1, ceil_count(ell));
}

std::size_t walks_per_length(std::size_t n, std::size_t ell, double epsilon) {
  const double nd = static_cast<double>(n), ld = static_cast<double>(ell);
  const double r = 2.0 * ld * ld * std::log(2.0 * nd * nd * ld) / (epsilon * epsilon);
  return std::max<std::size_t>(1, ceil_count(r));
}

std::size_t node_budget(std::size_t n, double epsilon, double lambda_bound) {
  const double nd = static_cast<double>(n);
  const double x = std::sqrt(nd) * std::sqrt(std::log(nd)) / ((1.0 - lambda_bound) * epsilon);
  return std::clamp<std::size_t>(ceil_count(std::min(x, nd)), 1, n);
}

SampleParams derive_params(std::size_t n, double epsilon, double lambda_bound,
                           std::vector<std::string>* warnings) {
  if (!(epsilon > 0.0)) throw DomainError("epsilon must be positive");
  if (!(lambda_bound > 0.0 && lambda_bound < 1.0)) {
    throw DomainError("lambda bound must lie in (0, 1)");
  }
  if (n < 2) throw DomainError("sampling needs at least two nodes");
  SampleParams p;
  p.epsilon = epsilon;
  p.lambda_bound = lambda_bound;
  p.ell = truncation_length(epsilon, lambda_bound, warnings);
  p.walks_per_length = walks_per_length(n, p.ell, epsilon);
  p.node_budget = node_budget(n, epsilon, lambda_bound);
  return p;
}

double sample_cost(const SampleParams& params) {
  const double ell = static_cast<double>(params.ell);
  const double per_walk = params.reuse_walks ? 2.0 * (ell - 1.0) : ell * (ell - 1.0);
  return static_cast<double>(params.node_budget) *
         static_cast<double>(params.walks_per_length) * per_walk;
}

std::vector<double> estimate_returns(const TransitionSampler& sampler, NodeId i,
                                     const SampleParams& params) {
  validate_params(params);
  const std::size_t ell = params.ell, r = params.walks_per_length;
  const bool visits = params.counting == ReturnCounting::kPseudocodeVisits;
  std::vector<std::uint64_t> hits(ell, 0);

  if (params.reuse_walks) {
    Rng rng = Rng::stream(params.seed, {kWalkTag, i});
    for (std::size_t k = 0; k < r; ++k) {
      NodeId u = i;
      std::uint64_t seen = 0;
      for (std::size_t m = 0; m + 2 < 2 * ell; ++m) {
        if (u == i) ++seen;
        u = sampler.step(u, rng);
        if (m % 2 == 1) hits[(m + 1) / 2] += visits ? seen : (u == i);
      }
    }
  } else {
    for (std::size_t j = 1; j < ell; ++j) {
      Rng rng = Rng::stream(params.seed, {kWalkTag, i, j});
      for (std::size_t k = 0; k < r; ++k) {
        NodeId u = i;
        for (std::size_t m = 0; m < 2 * j; ++m) {
          if (visits && u == i) ++hits[j];
          u = sampler.step(u, rng);
        }
        if (!visits && u == i) ++hits[j];
      }
    }
  }

  std::vector<double> p(ell);
  p[0] = 1.0;
  for (std::size_t j = 1; j < ell; ++j) {
    p[j] = static_cast<double>(hits[j]) / static_cast<double>(r);
  }
  return p;
}

std::vector<double> estimate_returns(const WeightedGraph& g, NodeId i,
                                     const SampleParams& params) {
  return estimate_returns(TransitionSampler(g), i, params);
}

SampleDeltaResult sample_delta(const WeightedGraph& g, const SampleParams& params) {
  validate_params(params);
  const auto start = std::chrono::steady_clock::now();
  const std::size_t n = g.node_count();
  SampleDeltaResult result;
  result.params = params;
  result.params.node_budget = std::min(params.node_budget, n);

  Rng node_rng = Rng::stream(params.seed, {kNodeSampleTag});
  const std::vector<NodeId> nodes =
      sample_without_replacement(n, result.params.node_budget, node_rng);
  const TransitionSampler sampler(g);
  std::vector<NodeContribution> per_node(nodes.size());
  parallel_for(nodes.size(), [&](std::size_t x) {
    const NodeId i = nodes[x];
    const double pi = g.degree(i) / g.total_degree();
    const std::vector<double> p = estimate_returns(sampler, i, result.params);
    double ldag = 0.0;
    for (double pj : p) ldag += pj - pi;
    per_node[x] = {i, pi, ldag, pi * ldag};
  });

  const double scale = static_cast<double>(n) / static_cast<double>(nodes.size());
  double delta = 0.0, kemeny = 0.0;
  for (const NodeContribution& c : per_node) {
    delta += c.contribution;
    kemeny += c.ldag;
  }

  DisagreementEstimate& e = result.estimate;
  e.method = "sample";
  e.delta = scale * delta;
  e.per_node = std::move(per_node);
  e.epsilon = params.epsilon;
  e.seed = params.seed;
  if (params.counting == ReturnCounting::kPseudocodeVisits) {
    e.warnings.push_back("visit-counting return estimator is a debug mode without guarantees");
  }
  result.kemeny = scale * kemeny;
  e.wall_time_s =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

double estimate_kemeny_two_step(const WeightedGraph& g, const SampleParams& params) {
  return sample_delta(g, params).kemeny;
}

GapEstimate estimate_spectral_bound(const WeightedGraph& g, std::size_t iterations,
                                    std::uint64_t seed) {
  const std::size_t n = g.node_count();
  if (n < 2) throw DomainError("gap estimation needs at least two nodes");
  std::vector<double> psi(n), inv_sqrt_d(n), x(n), y(n);
  for (NodeId i = 0; i < n; ++i) {
    psi[i] = std::sqrt(g.degree(i) / g.total_degree());
    inv_sqrt_d[i] = 1.0 / std::sqrt(g.degree(i));
  }
  auto apply_s = [&](const std::vector<double>& in, std::vector<double>& out) {
    for (NodeId u = 0; u < n; ++u) {
      auto row = g.neighbors(u);
      auto w = g.neighbor_weights(u);
      double acc = 0.0;
      for (std::size_t k = 0; k < row.size(); ++k) acc += w[k] * inv_sqrt_d[row[k]] * in[row[k]];
      out[u] = acc * inv_sqrt_d[u];
    }
  };
  auto deflate_normalize = [&](std::vector<double>& v) {
    double dot = 0.0;
    for (std::size_t i = 0; i < n; ++i) dot += psi[i] * v[i];
    double norm = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      v[i] -= dot * psi[i];
      norm += v[i] * v[i];
    }
    norm = std::sqrt(norm);
    for (double& vi : v) vi /= norm;
  };

  Rng rng = Rng::stream(seed, {kGapTag});
  for (double& xi : x) xi = rng.uniform() - 0.5;
  deflate_normalize(x);

  GapEstimate out;
  double previous = -1.0;
  for (out.iterations = 1; out.iterations <= iterations; ++out.iterations) {
    apply_s(x, y);
    // x has unit norm, so x^T S^2 x = |S x|^2.
    double rayleigh = 0.0;
    for (double yi : y) rayleigh += yi * yi;
    apply_s(y, x);
    deflate_normalize(x);
    out.lambda_hat = std::sqrt(std::max(0.0, rayleigh));
    if (std::abs(out.lambda_hat - previous) < 1e-12) break;
    previous = out.lambda_hat;
  }
  out.iterations = std::min(out.iterations, iterations);
  out.lambda_bound = out.lambda_hat + 0.05 * (1.0 - out.lambda_hat);
  return out;
}

}  // namespace disagree
