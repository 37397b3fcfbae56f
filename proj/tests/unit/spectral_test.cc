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

#include <algorithm>
#include <cmath>

#include <Eigen/QR>
#include <gtest/gtest.h>

#include "disagree/errors.h"
#include "disagree/generators.h"
#include "disagree/rng.h"
#include "disagree/spectral.h"
#include "disagree/walk_sampler.h"
#include "support/oracles.h"
#include "support/test_graphs.h"

namespace disagree {
namespace {

using testing::random_connected_graph;

TEST(DecomposeTest, TriangleEigenvalues) {
  const SpectralSummary s = decompose(testing::triangle());
  ASSERT_EQ(s.size(), 3u);
  EXPECT_NEAR(s.eigenvalues[0], 1.0, 1e-12);
  EXPECT_NEAR(s.eigenvalues[1], -0.5, 1e-12);
  EXPECT_NEAR(s.eigenvalues[2], -0.5, 1e-12);
  EXPECT_NEAR(s.gap_bound, 0.5, 1e-12);
}

TEST(DecomposeTest, PathIsRejectedUnlessBypassed) {
  EXPECT_THROW(decompose(testing::path(5)), DomainError);
  const SpectralSummary s = decompose(testing::path(5), {.allow_bipartite_pseudoinverse = true});
  EXPECT_TRUE(s.bipartite_bypass);
  EXPECT_FALSE(s.warnings.empty());
}

TEST(DecomposeTest, DisconnectedAndOversizedInputs) {
  const Edge two_triangles[] = {{0, 1, 1}, {1, 2, 1}, {0, 2, 1}, {3, 4, 1}, {4, 5, 1}, {3, 5, 1}};
  EXPECT_THROW(decompose(WeightedGraph::from_edges(6, two_triangles)), DomainError);
  EXPECT_THROW(decompose(testing::complete(10), {.dense_cap = 5}), ResourceError);
}

TEST(DecomposeTest, PsfwMatchesClosedSpectrum) {
  const SpectralSummary s = decompose(generate_psfw(2));
  std::vector<double> closed;
  for (const auto& [v, m] : psfw_spectrum(2).eigenvalue_multiplicity) closed.insert(closed.end(), m, v);
  ASSERT_EQ(closed.size(), s.size());
  for (std::size_t k = 0; k < closed.size(); ++k) {
    EXPECT_NEAR(s.eigenvalues[static_cast<Eigen::Index>(k)], closed[k], 1e-10);
  }
}

TEST(DecomposeTest, SummaryInvariants) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const WeightedGraph g = random_connected_graph(30, 0.1, seed, seed % 2 == 0);
    const SpectralSummary s = decompose(g);
    const auto n = static_cast<Eigen::Index>(g.node_count());
    EXPECT_NEAR(s.eigenvalues[0], 1.0, 1e-8);
    EXPECT_GT(s.eigenvalues[n - 1], -1.0);
    for (Eigen::Index k = 1; k < n; ++k) EXPECT_LE(s.eigenvalues[k], s.eigenvalues[k - 1]);
    EXPECT_LT((s.eigenvectors.transpose() * s.eigenvectors - Eigen::MatrixXd::Identity(n, n))
                  .cwiseAbs()
                  .maxCoeff(),
              1e-8);
    for (Eigen::Index i = 0; i < n; ++i) {
      EXPECT_NEAR(s.eigenvectors(i, 0), std::sqrt(g.degree(static_cast<NodeId>(i)) / g.total_degree()),
                  1e-10);
    }
    EXPECT_NEAR(s.gap_bound, std::max(std::abs(s.eigenvalues[1]), std::abs(s.eigenvalues[n - 1])),
                0.0);
  }
}

TEST(ExactDeltaTest, TriangleIsEightNinths) {
  const WeightedGraph g = testing::triangle();
  const DisagreementExact d = exact_delta(g, decompose(g));
  EXPECT_NEAR(d.delta, 8.0 / 9.0, 1e-12);
  EXPECT_NEAR(testing::delta_from_laplacian(g), 8.0 / 9.0, 1e-12);
}

TEST(ExactDeltaTest, PathTableThroughBypass) {
  const WeightedGraph g = testing::path(5);
  const DisagreementExact d =
      exact_delta(g, decompose(g, {.allow_bipartite_pseudoinverse = true}));
  const double ldag[] = {1.25, 1.0, 0.5, 1.0, 1.25};
  const double contrib[] = {0.15625, 0.25, 0.125, 0.25, 0.15625};
  ASSERT_EQ(d.per_node.size(), 5u);
  for (std::size_t i = 0; i < 5; ++i) {
    EXPECT_NEAR(d.per_node[i].ldag, ldag[i], 1e-12);
    EXPECT_NEAR(d.per_node[i].contribution, contrib[i], 1e-12);
  }
  EXPECT_NEAR(d.delta, 0.9375, 1e-12);
}

TEST(ExactDeltaTest, Zachary) {
  const WeightedGraph g = testing::zachary();
  EXPECT_NEAR(exact_delta(g, decompose(g)).delta, 1.287, 0.001);
}

TEST(ExactDeltaTest, MatchesIndependentOracles) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const WeightedGraph g = random_connected_graph(8 + seed, 0.2, 300 + seed, seed % 3 == 0);
    const SpectralSummary s = decompose(g);
    const DisagreementExact d = exact_delta(g, s);
    EXPECT_NEAR(d.delta, testing::delta_from_laplacian(g), 1e-9 * d.delta);
    EXPECT_NEAR(d.delta, testing::delta_from_hitting_times(g), 1e-9 * d.delta);
    double sum = 0.0;
    for (const NodeContribution& c : d.per_node) {
      EXPECT_GE(c.ldag, 0.0);
      EXPECT_NEAR(c.contribution, c.pi * c.ldag, 1e-15);
      sum += c.contribution;
    }
    EXPECT_NEAR(d.delta, sum, 1e-10);
    // delta = sum_i pi_i^2 H_i(G').
    const auto h = partial_mean_hitting_times(g, s, HittingVariant::kTwoStep);
    double via_h = 0.0;
    for (const NodeContribution& c : d.per_node) via_h += c.pi * c.pi * h[c.node];
    EXPECT_NEAR(d.delta, via_h, 1e-10);
  }
}

TEST(DecomposeTest, OrthonormalResidualAtN200) {
  const WeightedGraph g = random_connected_graph(200, 0.05, 91, true);
  const SpectralSummary s = decompose(g);
  const auto n = static_cast<Eigen::Index>(g.node_count());
  const Eigen::MatrixXd& z = s.eigenvectors;
  EXPECT_LT((z.transpose() * z - Eigen::MatrixXd::Identity(n, n)).cwiseAbs().maxCoeff(), 1e-10);
  EXPECT_LT((normalized_adjacency(g) * z - z * s.eigenvalues.asDiagonal()).cwiseAbs().maxCoeff(),
            1e-10);
  EXPECT_NEAR(exact_delta(g, s).delta, testing::delta_from_laplacian(g), 1e-9);
}

TEST(ExactDeltaCholeskyTest, MatchesEigenPath) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const WeightedGraph g = random_connected_graph(10 + 15 * seed, 0.15, 700 + seed, seed % 2 == 1);
    const DisagreementExact eig = exact_delta(g, decompose(g));
    const DisagreementExact chol = exact_delta_cholesky(g);
    EXPECT_NEAR(chol.delta, eig.delta, 1e-9 * eig.delta);
    EXPECT_NEAR(chol.delta, testing::delta_from_laplacian(g), 1e-9 * eig.delta);
    ASSERT_EQ(chol.per_node.size(), eig.per_node.size());
    for (std::size_t i = 0; i < eig.per_node.size(); ++i) {
      EXPECT_NEAR(chol.per_node[i].ldag, eig.per_node[i].ldag, 1e-9 * eig.per_node[i].ldag);
    }
  }
  EXPECT_NEAR(exact_delta_cholesky(testing::triangle()).delta, 8.0 / 9.0, 1e-12);
}

TEST(ExactDeltaCholeskyTest, RejectsBipartiteAndOversized) {
  EXPECT_THROW(exact_delta_cholesky(testing::path(5)), DomainError);
  EXPECT_THROW(exact_delta_cholesky(testing::triangle(), 2), ResourceError);
}

TEST(HittingTwoStepTest, TriangleMatchesLinearSolve) {
  const WeightedGraph g = testing::triangle();
  const SpectralSummary s = decompose(g);
  const Eigen::MatrixXd p = testing::transition_matrix(g);
  const Eigen::MatrixXd h = testing::brute_force_hitting_times(p * p);
  for (NodeId i = 0; i < 3; ++i) {
    EXPECT_EQ(exact_hitting_time_two_step(s, g, i, i), 0.0);
    for (NodeId j = 0; j < 3; ++j) {
      if (i != j) EXPECT_NEAR(exact_hitting_time_two_step(s, g, i, j), h(i, j), 1e-9);
    }
  }
}

TEST(HittingTwoStepTest, DeltaFromHittingTimesOnRandomGraphs) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const WeightedGraph g = random_connected_graph(10 + seed, 0.15, 500 + seed, seed % 2 == 1);
    const SpectralSummary s = decompose(g);
    const auto pi = stationary_distribution(g).pi;
    const std::size_t n = g.node_count();
    double delta = 0.0;
    for (NodeId i = 0; i < n; ++i) {
      double hi = 0.0;
      for (NodeId j = 0; j < n; ++j) hi += pi[j] * exact_hitting_time_two_step(s, g, j, i);
      delta += pi[i] * pi[i] * hi;
    }
    EXPECT_NEAR(delta, exact_delta(g, s).delta, 1e-9);
  }
}

TEST(KemenyTest, TriangleSingleNodeAndOracle) {
  EXPECT_NEAR(exact_kemeny_two_step(decompose(testing::triangle())), 8.0 / 3.0, 1e-12);
  EXPECT_EQ(exact_kemeny_two_step(decompose(WeightedGraph::from_edges(1, {}))), 0.0);
  for (unsigned g = 2; g <= 6; ++g) {
    const double k = exact_kemeny_two_step(decompose(generate_psfw(g)));
    EXPECT_NEAR(k, psfw_kemeny_closed_form(g), 1e-8 * k);
  }
}

TEST(KemenyTest, MatchesStationaryWeightedHittingTimes) {
  const WeightedGraph g = random_connected_graph(25, 0.2, 17, true);
  const SpectralSummary s = decompose(g);
  const Eigen::MatrixXd p = testing::transition_matrix(g);
  const Eigen::MatrixXd h = testing::brute_force_hitting_times(p * p);
  const Eigen::VectorXd pi = testing::stationary(g);
  // K = sum_j pi_j H_ij for any i.
  for (Eigen::Index i : {0, 7, 24}) {
    EXPECT_NEAR(h.row(i).dot(pi), exact_kemeny_two_step(s), 1e-8);
  }
}

TEST(IdentityCheckTest, Triangle) {
  const IdentityCheckReport r = pseudoinverse_identity_check(testing::triangle(), 1e-10);
  EXPECT_LT(r.spectral_discrepancy, 1e-8);
  EXPECT_LT(r.transform_discrepancy, 1e-8);
  EXPECT_LT(r.series_discrepancy, 1e-8);
  EXPECT_TRUE(r.diagonal_nonnegative);
}

TEST(IdentityCheckTest, RandomGraphN30) {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const IdentityCheckReport r =
        pseudoinverse_identity_check(random_connected_graph(30, 0.15, 40 + seed), 1e-5);
    EXPECT_LT(r.spectral_discrepancy, 1e-6);
    EXPECT_LT(r.transform_discrepancy, 1e-6);
    EXPECT_LT(r.series_discrepancy, 1e-6);
    EXPECT_TRUE(r.diagonal_nonnegative);
    EXPECT_GT(r.series_terms, 1u);
  }
  EXPECT_THROW(pseudoinverse_identity_check(testing::complete(201)), ResourceError);
}

TEST(TruncationBoundTest, DiagonalSeriesAndAggregate) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const WeightedGraph g = random_connected_graph(20 + 3 * seed, 0.1, 700 + seed, seed % 2 == 0);
    const SpectralSummary s = decompose(g);
    const DisagreementExact d = exact_delta(g, s);
    for (double eps : {0.1, 0.01}) {
      const std::size_t ell = truncation_length(eps, s.gap_bound);
      const auto series = truncated_diagonal_series(g, ell);
      double delta_bar = 0.0;
      for (const NodeContribution& c : d.per_node) {
        EXPECT_LE(std::abs(c.ldag - series[c.node]), eps / 2);
        delta_bar += c.pi * series[c.node];
      }
      EXPECT_LE(std::abs(d.delta - delta_bar), eps / 2);
    }
  }
}

// Replace each repeated-eigenvalue block of eigenvectors by a random
// orthogonal mix of itself.
SpectralSummary rotate_degenerate_blocks(SpectralSummary s, std::uint64_t seed) {
  Rng rng(seed);
  const auto n = static_cast<Eigen::Index>(s.size());
  Eigen::Index start = 0;
  while (start < n) {
    Eigen::Index end = start + 1;
    while (end < n && std::abs(s.eigenvalues[end] - s.eigenvalues[start]) < 1e-9) ++end;
    const Eigen::Index m = end - start;
    if (m > 1) {
      Eigen::MatrixXd r(m, m);
      for (Eigen::Index a = 0; a < m; ++a) {
        for (Eigen::Index b = 0; b < m; ++b) r(a, b) = rng.uniform() - 0.5;
      }
      const Eigen::MatrixXd q = Eigen::HouseholderQR<Eigen::MatrixXd>(r).householderQ();
      s.eigenvectors.middleCols(start, m) = s.eigenvectors.middleCols(start, m) * q;
    }
    start = end;
  }
  return s;
}

TEST(DegeneracyTest, ResultsDependOnlyOnProjectors) {
  for (const WeightedGraph& g : {testing::complete(7), generate_psfw(3)}) {
    const SpectralSummary s = decompose(g);
    const SpectralSummary r = rotate_degenerate_blocks(s, 77);
    EXPECT_GT((s.eigenvectors - r.eigenvectors).cwiseAbs().maxCoeff(), 1e-3);
    EXPECT_NEAR(exact_delta(g, s).delta, exact_delta(g, r).delta, 1e-9);
    EXPECT_NEAR(exact_kemeny_two_step(s), exact_kemeny_two_step(r), 1e-9);
    EXPECT_NEAR(exact_hitting_time_two_step(s, g, 1, 2), exact_hitting_time_two_step(r, g, 1, 2),
                1e-9);
    const auto hs = partial_mean_hitting_times(g, s, HittingVariant::kTwoStep);
    const auto hr = partial_mean_hitting_times(g, r, HittingVariant::kTwoStep);
    for (std::size_t i = 0; i < hs.size(); ++i) EXPECT_NEAR(hs[i], hr[i], 1e-9);
  }
}

}  // namespace
}  // namespace disagree
