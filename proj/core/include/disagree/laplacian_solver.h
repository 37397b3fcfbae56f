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


#ifndef DISAGREE_LAPLACIAN_SOLVER_H_
#define DISAGREE_LAPLACIAN_SOLVER_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "disagree/sparsify.h"

namespace disagree {

struct SolveOptions {
  std::size_t max_iterations = 10000;
  // sigma in the stopping rule |r| / |y| <= kappa * sigma. Estimated when
  // absent.
  std::optional<double> safety_factor;
};

struct SolveResult {
  std::vector<double> x;  // mean zero
  std::size_t iterations = 0;
  double relative_residual = 0.0;  // |y - L x| / |y|
};

// Jacobi-preconditioned conjugate gradient on the complement of the
// all-ones vector. y is projected onto that complement first. With sigma =
// sqrt(lambda_min / lambda_max), the residual test guarantees
// |x - L^+ y|_L <= kappa |L^+ y|_L. Throws ConvergenceError at the
// iteration cap.
SolveResult laplacian_solve(const SparsifiedLaplacian& lap, std::span<const double> y,
                            double kappa, const SolveOptions& options = {});

struct SafetyFactor {
  double sigma = 0.0;
  double lambda_min = 0.0;    // inverse-power estimate; 0 when the fallback was used
  double lambda_upper = 0.0;  // 2 * max degree
  bool fallback = false;      // sigma = kappa / 10
};

// sqrt(lambda_min / lambda_upper) from `probes` inverse-power iterations.
SafetyFactor estimate_safety_factor(const SparsifiedLaplacian& lap, double kappa,
                                    std::uint64_t seed = 0, std::size_t probes = 10);

}  // namespace disagree

#endif  // DISAGREE_LAPLACIAN_SOLVER_H_
