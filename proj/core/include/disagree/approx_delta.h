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


// Sparsify, sketch, solve: estimates C(i) = (e_i - pi)^T L(G')^+ (e_i - pi)
// for every node and delta = d_sum sum_i pi_i^2 C(i).

#ifndef DISAGREE_APPROX_DELTA_H_
#define DISAGREE_APPROX_DELTA_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "disagree/estimate.h"
#include "disagree/graph.h"
#include "disagree/laplacian_solver.h"
#include "disagree/rng.h"
#include "disagree/sparsify.h"

namespace disagree {

// ceil(24 ln n / eps^2).
std::size_t jl_dimension(std::size_t n, double epsilon);

// Global solver tolerance: the per-node bound with d_i replaced by the
// largest degree of the sparsifier, weights taken from the sparsifier.
double kappa_bound(const SparsifiedLaplacian& lap, double epsilon);

// Entry (row, edge) of the sign matrix before the 1/sqrt(k) scale.
inline double sketch_sign(std::uint64_t seed, std::uint64_t row, std::uint64_t edge) {
  return (derive_seed(seed, {row, edge}) & 1) ? 1.0 : -1.0;
}

enum class SketchMode {
  kJL,
  // Test hook: Q is the identity, so k equals the sparsifier edge count and
  // C(i) is computed without projection error.
  kIdentity,
};

// Rows q_i of Q W^{1/2} B streamed from the implicit sign matrix, and their
// Laplacian solves.
class SketchedSolver {
 public:
  SketchedSolver(const SparsifiedLaplacian& lap, std::size_t k, std::uint64_t sign_seed,
                 double kappa, SolveOptions options, SketchMode mode = SketchMode::kJL);

  std::size_t k() const { return k_; }
  double kappa() const { return kappa_; }
  std::vector<double> sketch_row(std::size_t i) const;
  SolveResult solve_row(std::size_t i) const;

 private:
  const SparsifiedLaplacian* lap_;
  std::size_t k_;
  std::uint64_t sign_seed_;
  double kappa_;
  SolveOptions options_;
  SketchMode mode_;
};

struct ApproxOptions {
  SparsifyOptions sparsify;
  std::size_t max_cg_iterations = 10000;
  std::optional<double> kappa_override;
  SketchMode sketch = SketchMode::kJL;
};

struct ApproxDiagnostics {
  std::size_t samples = 0;            // s
  std::size_t sparsifier_edges = 0;
  std::size_t k = 0;
  double kappa = 0.0;
  bool kappa_overridden = false;
  double sigma = 0.0;
  std::vector<std::size_t> cg_iterations;  // per sketch row
};

struct ApproxDeltaResult {
  DisagreementEstimate estimate;  // per_node holds every node, ldag = d_i C(i)
  ApproxDiagnostics diagnostics;
  std::vector<double> c;          // C(i) estimates
  double kemeny = 0.0;            // sum_i d_i C(i)
};

// The graph must be connected and non-bipartite; the caller validates.
ApproxDeltaResult approx_delta(const WeightedGraph& g, double epsilon, std::uint64_t seed,
                               const ApproxOptions& options = {});

// Same pipeline on a prebuilt sparsifier.
ApproxDeltaResult approx_delta(const WeightedGraph& g, const SparsifiedLaplacian& lap,
                               double epsilon, std::uint64_t seed,
                               const ApproxOptions& options = {});

}  // namespace disagree

#endif  // DISAGREE_APPROX_DELTA_H_
