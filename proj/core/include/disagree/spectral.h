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


// Dense spectral oracle: eigendecomposition of S = D^{-1/2} A D^{-1/2} and
// the exact quantities derived from it for the two-step graph G'.

#ifndef DISAGREE_SPECTRAL_H_
#define DISAGREE_SPECTRAL_H_

#include <cstddef>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "disagree/estimate.h"
#include "disagree/graph.h"

namespace disagree {

struct SpectralOptions {
  std::size_t dense_cap = kDefaultDenseCap;
  // Accept bipartite graphs and drop the lambda = -1 eigenspace along with
  // lambda = 1 from every eigenvalue sum.
  bool allow_bipartite_pseudoinverse = false;
  // Allowed deviation of lambda_1 from 1.
  double unit_tolerance = 1e-8;
};

struct SpectralSummary {
  Eigen::VectorXd eigenvalues;   // descending
  Eigen::MatrixXd eigenvectors;  // column k pairs with eigenvalues[k]
  // max(|lambda_2|, |lambda_N|); 0 for a single node.
  double gap_bound = 0.0;
  bool bipartite_bypass = false;
  std::vector<std::string> warnings;

  std::size_t size() const { return static_cast<std::size_t>(eigenvalues.size()); }
  // 1 / (1 - lambda_k^2) for k >= 2, and 0 for k = 1 and for any eigenvalue
  // excluded by the bipartite bypass.
  Eigen::VectorXd two_step_weights() const;
};

// Throws DomainError for disconnected input, and for bipartite input unless
// the bypass is enabled; ResourceError above the dense cap.
SpectralSummary decompose(const WeightedGraph& g, const SpectralOptions& options = {});

Eigen::MatrixXd normalized_adjacency(const WeightedGraph& g);
Eigen::MatrixXd dense_laplacian(const WeightedGraph& g);

// Pseudoinverse of the Laplacian of a connected graph.
Eigen::MatrixXd laplacian_pseudoinverse(const Eigen::MatrixXd& laplacian);

struct DisagreementExact {
  double delta = 0.0;
  std::vector<NodeContribution> per_node;
  std::vector<std::string> warnings;
};

DisagreementExact exact_delta(const WeightedGraph& g, const SpectralSummary& s);

// Same quantity without eigenvectors: one Cholesky factorization of
// I - S^2 + sqrt(pi) sqrt(pi)^T. Several times faster than decompose() at
// large N. Bipartite input always throws DomainError.
DisagreementExact exact_delta_cholesky(const WeightedGraph& g,
                                       std::size_t dense_cap = kDefaultDenseCap);

// Expected steps for the walk on P^2 started at i to reach j.
double exact_hitting_time_two_step(const SpectralSummary& s, const WeightedGraph& g, NodeId i,
                                   NodeId j);

// Kemeny constant of G': sum_{k>=2} 1 / (1 - lambda_k^2).
double exact_kemeny_two_step(const SpectralSummary& s);

enum class HittingVariant { kOneStep, kTwoStep };

// Partial mean hitting time H_i = sum_j pi_j H_ji for every node, on P or P^2.
std::vector<double> partial_mean_hitting_times(const WeightedGraph& g, const SpectralSummary& s,
                                               HittingVariant variant);
// Single-target form; throws DomainError when `target` is out of range.
double partial_mean_hitting_time(const WeightedGraph& g, const SpectralSummary& s, NodeId target,
                                 HittingVariant variant);

// Dense pseudoinverse of the normalized Laplacian I - S^2 of G'.
Eigen::MatrixXd two_step_normalized_pseudoinverse(const SpectralSummary& s);

// sum_{j<ell} (P^{2j}_ii - pi_i) for every node, by repeated squaring-free
// multiplication of S^2.
std::vector<double> truncated_diagonal_series(const WeightedGraph& g, std::size_t ell);

struct IdentityCheckReport {
  std::size_t series_terms = 0;
  // Max entrywise discrepancies against (I - S^2 + psi_1 psi_1^T)^{-1} - psi_1 psi_1^T.
  double spectral_discrepancy = 0.0;   // eigenvalue sum
  double transform_discrepancy = 0.0;  // projected D^{1/2} L(G')^+ D^{1/2}
  double series_discrepancy = 0.0;     // truncated sum of (S^{2i} - psi_1 psi_1^T)
  bool diagonal_nonnegative = false;
};

// Test-only cross-check of three routes to the pseudoinverse; N <= 200.
IdentityCheckReport pseudoinverse_identity_check(const WeightedGraph& g,
                                                 double series_epsilon = 1e-5);

}  // namespace disagree

#endif  // DISAGREE_SPECTRAL_H_
