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


#include "disagree/approx_delta.h"

#include <algorithm>
#include <chrono>
#include <cmath>

#include "disagree/errors.h"
#include "disagree/parallel.h"
#include "disagree/rng.h"

namespace disagree {
namespace {

constexpr std::size_t kBlocks = 32;
constexpr std::uint64_t kSparsifyTag = 11;
constexpr std::uint64_t kSignTag = 12;
constexpr std::uint64_t kProbeTag = 13;

}  // namespace

std::size_t jl_dimension(std::size_t n, double epsilon) {
  const double k = 24.0 * std::log(static_cast<double>(std::max<std::size_t>(n, 2))) /
                   (epsilon * epsilon);
  return static_cast<std::size_t>(std::ceil(k));
}

double kappa_bound(const SparsifiedLaplacian& lap, double epsilon) {
  const double n = static_cast<double>(lap.node_count());
  const double dsum = lap.total_degree();
  return epsilon / 3.0 * (dsum - lap.max_degree()) / dsum *
         std::sqrt((1.0 - epsilon) * lap.min_weight() /
                   ((1.0 + epsilon) * n * n * n * n * lap.max_weight()));
}

SketchedSolver::SketchedSolver(const SparsifiedLaplacian& lap, std::size_t k,
                               std::uint64_t sign_seed, double kappa, SolveOptions options,
                               SketchMode mode)
    : lap_(&lap),
      k_(mode == SketchMode::kIdentity ? lap.edge_count() : k),
      sign_seed_(sign_seed),
      kappa_(kappa),
      options_(options),
      mode_(mode) {}

std::vector<double> SketchedSolver::sketch_row(std::size_t i) const {
  std::vector<double> q(lap_->node_count(), 0.0);
  const auto edges = lap_->edges();
  if (mode_ == SketchMode::kIdentity) {
    const Edge& e = edges[i];
    const double w = std::sqrt(e.w);
    q[e.u] += w;
    q[e.v] -= w;
    return q;
  }
  const double scale = 1.0 / std::sqrt(static_cast<double>(k_));
  for (std::size_t m = 0; m < edges.size(); ++m) {
    const Edge& e = edges[m];
    const double c = sketch_sign(sign_seed_, i, m) * scale * std::sqrt(e.w);
    q[e.u] += c;
    q[e.v] -= c;
  }
  return q;
}

SolveResult SketchedSolver::solve_row(std::size_t i) const {
  return laplacian_solve(*lap_, sketch_row(i), kappa_, options_);
}

ApproxDeltaResult approx_delta(const WeightedGraph& g, double epsilon, std::uint64_t seed,
                               const ApproxOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  const SparsifiedLaplacian lap =
      sparsify_two_step(g, epsilon, derive_seed(seed, {kSparsifyTag}), options.sparsify);
  ApproxDeltaResult result = approx_delta(g, lap, epsilon, seed, options);
  result.estimate.wall_time_s =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

ApproxDeltaResult approx_delta(const WeightedGraph& g, const SparsifiedLaplacian& lap,
                               double epsilon, std::uint64_t seed, const ApproxOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  const std::size_t n = g.node_count();
  if (lap.node_count() != n) throw DomainError("sparsifier does not match the graph");

  ApproxDeltaResult result;
  ApproxDiagnostics& diag = result.diagnostics;
  diag.samples = lap.sample_count();
  diag.sparsifier_edges = lap.edge_count();
  diag.kappa_overridden = options.kappa_override.has_value();
  diag.kappa = options.kappa_override.value_or(kappa_bound(lap, epsilon));
  if (!(diag.kappa > 0.0)) throw DomainError("solver tolerance kappa must be positive");

  const SafetyFactor safety =
      estimate_safety_factor(lap, diag.kappa, derive_seed(seed, {kProbeTag}));
  diag.sigma = safety.sigma;
  if (safety.fallback) {
    result.estimate.warnings.push_back("safety-factor probe failed; using sigma = kappa / 10");
  }
  const SketchedSolver solver(lap, jl_dimension(n, epsilon), derive_seed(seed, {kSignTag}),
                              diag.kappa,
                              {.max_iterations = options.max_cg_iterations,
                               .safety_factor = safety.sigma},
                              options.sketch);
  diag.k = solver.k();
  diag.cg_iterations.assign(diag.k, 0);

  const StationaryDistribution st = stationary_distribution(g);
  // Fixed row blocks reduced in block order keep the sum schedule-free.
  const std::size_t blocks = std::min(kBlocks, diag.k);
  std::vector<std::vector<double>> partial(blocks, std::vector<double>(n, 0.0));
  parallel_for(blocks, [&](std::size_t b) {
    const std::size_t lo = b * diag.k / blocks, hi = (b + 1) * diag.k / blocks;
    std::vector<double>& acc = partial[b];
    for (std::size_t i = lo; i < hi; ++i) {
      const SolveResult z = solver.solve_row(i);
      diag.cg_iterations[i] = z.iterations;
      double p = 0.0;
      for (std::size_t j = 0; j < n; ++j) p += z.x[j] * st.pi[j];
      for (std::size_t j = 0; j < n; ++j) {
        const double d = z.x[j] - p;
        acc[j] += d * d;
      }
    }
  });
  result.c.assign(n, 0.0);
  for (const auto& acc : partial) {
    for (std::size_t j = 0; j < n; ++j) result.c[j] += acc[j];
  }

  DisagreementEstimate& e = result.estimate;
  e.method = "approx";
  e.epsilon = epsilon;
  e.seed = seed;
  e.per_node.reserve(n);
  for (NodeId i = 0; i < n; ++i) {
    const double ldag = g.degree(i) * result.c[i];
    e.per_node.push_back({i, st.pi[i], ldag, st.pi[i] * ldag});
    e.delta += st.pi[i] * ldag;
    result.kemeny += ldag;
  }
  e.wall_time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

}  // namespace disagree
