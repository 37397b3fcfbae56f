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


#include "disagree/laplacian_solver.h"

#include <cmath>
#include <numeric>

#include "disagree/errors.h"
#include "disagree/rng.h"

namespace disagree {
namespace {

double dot(std::span<const double> a, std::span<const double> b) {
  return std::inner_product(a.begin(), a.end(), b.begin(), 0.0);
}

void center(std::span<double> v) {
  const double mean = std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
  for (double& x : v) x -= mean;
}

}  // namespace

SolveResult laplacian_solve(const SparsifiedLaplacian& lap, std::span<const double> y,
                            double kappa, const SolveOptions& options) {
  const std::size_t n = lap.node_count();
  if (y.size() != n) throw DomainError("right-hand side has the wrong length");
  if (!(kappa > 0.0)) throw DomainError("solver tolerance kappa must be positive");
  const double sigma = options.safety_factor
                           ? *options.safety_factor
                           : estimate_safety_factor(lap, kappa).sigma;
  const double tolerance = kappa * sigma;

  SolveResult result;
  result.x.assign(n, 0.0);
  std::vector<double> r(y.begin(), y.end());
  center(r);
  const double ynorm = std::sqrt(dot(r, r));
  if (ynorm == 0.0) return result;

  std::span<const double> diag = lap.diagonal();
  std::vector<double> z(n), p(n), q(n);
  for (std::size_t i = 0; i < n; ++i) z[i] = r[i] / diag[i];
  center(z);
  p = z;
  double rz = dot(r, z);
  double rnorm = ynorm;
  while (rnorm / ynorm > tolerance) {
    if (result.iterations == options.max_iterations) {
      throw ConvergenceError("conjugate gradient hit the cap of " +
                                 std::to_string(options.max_iterations) +
                                 " iterations at relative residual " +
                                 std::to_string(rnorm / ynorm),
                             rnorm / ynorm);
    }
    ++result.iterations;
    lap.apply(p, q);
    const double alpha = rz / dot(p, q);
    for (std::size_t i = 0; i < n; ++i) {
      result.x[i] += alpha * p[i];
      r[i] -= alpha * q[i];
    }
    rnorm = std::sqrt(dot(r, r));
    for (std::size_t i = 0; i < n; ++i) z[i] = r[i] / diag[i];
    center(z);
    const double rz_next = dot(r, z);
    const double beta = rz_next / rz;
    rz = rz_next;
    for (std::size_t i = 0; i < n; ++i) p[i] = z[i] + beta * p[i];
  }
  center(result.x);

  lap.apply(result.x, q);
  double true_residual = 0.0;
  const double mean_y = std::accumulate(y.begin(), y.end(), 0.0) / static_cast<double>(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double d = (y[i] - mean_y) - q[i];
    true_residual += d * d;
  }
  result.relative_residual = std::sqrt(true_residual) / ynorm;
  return result;
}

SafetyFactor estimate_safety_factor(const SparsifiedLaplacian& lap, double kappa,
                                    std::uint64_t seed, std::size_t probes) {
  const std::size_t n = lap.node_count();
  SafetyFactor out;
  out.lambda_upper = 2.0 * lap.max_degree();
  if (n < 2) {
    out.sigma = 1.0;
    return out;
  }
  Rng rng = Rng::stream(seed, {0x5afe});
  std::vector<double> x(n), lx(n);
  for (double& v : x) v = rng.uniform() - 0.5;
  center(x);
  SolveOptions inner{.max_iterations = 20 * n + 100, .safety_factor = 1.0};
  try {
    for (std::size_t k = 0; k < probes; ++k) {
      const double norm = std::sqrt(dot(x, x));
      for (double& v : x) v /= norm;
      x = laplacian_solve(lap, x, 1e-6, inner).x;
    }
  } catch (const ConvergenceError&) {
    out.fallback = true;
    out.sigma = kappa / 10.0;
    return out;
  }
  const double norm = std::sqrt(dot(x, x));
  for (double& v : x) v /= norm;
  lap.apply(x, lx);
  out.lambda_min = dot(x, lx);
  out.sigma = std::sqrt(std::min(1.0, out.lambda_min / out.lambda_upper));
  return out;
}

}  // namespace disagree
