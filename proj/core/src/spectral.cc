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


#include "disagree/spectral.h"

#include <cmath>
#include <sstream>

#include "disagree/errors.h"
#include "disagree/validation.h"
#include "disagree/walk_sampler.h"

namespace disagree {
namespace {

constexpr double kNearBipartite = 1e-12;
constexpr double kBypassTolerance = 1e-9;

Eigen::VectorXd sqrt_pi(const WeightedGraph& g) {
  Eigen::VectorXd psi(g.node_count());
  for (NodeId i = 0; i < g.node_count(); ++i) psi[i] = std::sqrt(g.degree(i) / g.total_degree());
  return psi;
}

void require_dense(std::size_t n, std::size_t cap) {
  if (n > cap) {
    throw ResourceError("dense computation on " + std::to_string(n) +
                        " nodes exceeds the cap of " + std::to_string(cap));
  }
}

double max_abs_diff(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

}  // namespace

Eigen::VectorXd SpectralSummary::two_step_weights() const {
  Eigen::VectorXd w = Eigen::VectorXd::Zero(eigenvalues.size());
  for (Eigen::Index k = 1; k < eigenvalues.size(); ++k) {
    const double l2 = eigenvalues[k] * eigenvalues[k];
    if (bipartite_bypass && std::abs(1.0 - l2) < kBypassTolerance) continue;
    w[k] = 1.0 / (1.0 - l2);
  }
  return w;
}

Eigen::MatrixXd normalized_adjacency(const WeightedGraph& g) {
  const auto n = static_cast<Eigen::Index>(g.node_count());
  Eigen::MatrixXd s = Eigen::MatrixXd::Zero(n, n);
  for (NodeId u = 0; u < n; ++u) {
    auto row = g.neighbors(u);
    auto w = g.neighbor_weights(u);
    for (std::size_t k = 0; k < row.size(); ++k) {
      s(u, row[k]) = w[k] / std::sqrt(g.degree(u) * g.degree(row[k]));
    }
  }
  return s;
}

Eigen::MatrixXd dense_laplacian(const WeightedGraph& g) {
  const auto n = static_cast<Eigen::Index>(g.node_count());
  Eigen::MatrixXd l = Eigen::MatrixXd::Zero(n, n);
  for (NodeId u = 0; u < n; ++u) {
    l(u, u) = g.degree(u);
    auto row = g.neighbors(u);
    auto w = g.neighbor_weights(u);
    for (std::size_t k = 0; k < row.size(); ++k) l(u, row[k]) -= w[k];
  }
  return l;
}

Eigen::MatrixXd laplacian_pseudoinverse(const Eigen::MatrixXd& laplacian) {
  const Eigen::Index n = laplacian.rows();
  const Eigen::MatrixXd j = Eigen::MatrixXd::Constant(n, n, 1.0 / static_cast<double>(n));
  Eigen::MatrixXd inv = (laplacian + j).ldlt().solve(Eigen::MatrixXd::Identity(n, n));
  return inv - j;
}

SpectralSummary decompose(const WeightedGraph& g, const SpectralOptions& options) {
  const std::size_t n = g.node_count();
  if (n == 0) throw DomainError("graph has no nodes");
  require_dense(n, options.dense_cap);
  const GraphValidation v = validate(g);
  if (!v.connected) throw DomainError("graph is disconnected");

  SpectralSummary s;
  if (n == 1) {
    s.eigenvalues = Eigen::VectorXd::Ones(1);
    s.eigenvectors = Eigen::MatrixXd::Ones(1, 1);
    return s;
  }
  if (v.bipartite && !options.allow_bipartite_pseudoinverse) {
    throw DomainError("graph is bipartite: lambda_N = -1 and 1 / (1 - lambda^2) is singular");
  }
  s.bipartite_bypass = options.allow_bipartite_pseudoinverse;

  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(normalized_adjacency(g));
  if (solver.info() != Eigen::Success) {
    throw ConvergenceError("symmetric eigensolver did not converge", 0.0);
  }
  // Ascending from the solver; flip to descending.
  s.eigenvalues = solver.eigenvalues().reverse();
  s.eigenvectors = solver.eigenvectors().rowwise().reverse();

  const double lead = s.eigenvalues[0];
  if (std::abs(lead - 1.0) > options.unit_tolerance) {
    throw ConvergenceError("leading eigenvalue deviates from 1", std::abs(lead - 1.0));
  }
  if (s.eigenvectors.col(0).sum() < 0.0) s.eigenvectors.col(0) *= -1.0;

  const auto last = static_cast<Eigen::Index>(n - 1);
  s.gap_bound = std::max(std::abs(s.eigenvalues[1]), std::abs(s.eigenvalues[last]));
  for (Eigen::Index k = 1; k <= last; ++k) {
    const double lk = s.eigenvalues[k];
    if (s.bipartite_bypass && std::abs(1.0 - lk * lk) < kBypassTolerance) {
      std::ostringstream msg;
      msg << "bipartite bypass: eigenvalue " << lk << " at k = " << k + 1
          << " excluded from the pseudoinverse";
      s.warnings.push_back(msg.str());
    } else if (std::abs(lk) > 1.0 - kNearBipartite) {
      std::ostringstream msg;
      msg.precision(17);
      msg << "near-bipartite: eigenvalue " << lk << " at k = " << k + 1
          << " makes 1 / (1 - lambda^2) ill-conditioned";
      s.warnings.push_back(msg.str());
    }
  }
  return s;
}

DisagreementExact exact_delta(const WeightedGraph& g, const SpectralSummary& s) {
  const StationaryDistribution st = stationary_distribution(g);
  const Eigen::VectorXd ldag = s.eigenvectors.cwiseAbs2() * s.two_step_weights();
  DisagreementExact out;
  out.warnings = s.warnings;
  out.per_node.reserve(g.node_count());
  for (NodeId i = 0; i < g.node_count(); ++i) {
    const double c = st.pi[i] * ldag[i];
    out.per_node.push_back({i, st.pi[i], ldag[i], c});
    out.delta += c;
  }
  return out;
}

DisagreementExact exact_delta_cholesky(const WeightedGraph& g, std::size_t dense_cap) {
  const std::size_t n = g.node_count();
  if (n == 0) throw DomainError("graph has no nodes");
  require_dense(n, dense_cap);
  require_connected_non_bipartite(g);
  const StationaryDistribution st = stationary_distribution(g);
  DisagreementExact out;
  if (n == 1) {
    out.per_node.push_back({0, 1.0, 0.0, 0.0});
    return out;
  }

  // S^2 is the normalized adjacency of the two-step graph.
  const auto ni = static_cast<Eigen::Index>(n);
  Eigen::MatrixXd m = -normalized_adjacency(two_step_graph(g, n));
  m.diagonal().array() += 1.0;
  const Eigen::Map<const Eigen::VectorXd> pi(st.pi.data(), ni);
  const Eigen::VectorXd root = pi.cwiseSqrt();
  m.selfadjointView<Eigen::Lower>().rankUpdate(root);

  Eigen::LLT<Eigen::MatrixXd> llt(m);
  if (llt.info() != Eigen::Success) {
    throw ConvergenceError("I - S^2 + pi projection is not positive definite", 0.0);
  }
  Eigen::MatrixXd inv_l = Eigen::MatrixXd::Identity(ni, ni);
  llt.matrixL().solveInPlace(inv_l);
  // diag(M^-1) = column norms of L^-1; the sqrt(pi) direction adds pi_i.
  const Eigen::VectorXd diag = inv_l.colwise().squaredNorm().transpose() - pi;

  out.per_node.reserve(n);
  for (NodeId i = 0; i < n; ++i) {
    const double c = st.pi[i] * diag[i];
    out.per_node.push_back({i, st.pi[i], diag[i], c});
    out.delta += c;
  }
  return out;
}

double exact_hitting_time_two_step(const SpectralSummary& s, const WeightedGraph& g, NodeId i,
                                   NodeId j) {
  if (i == j) return 0.0;
  const Eigen::VectorXd w = s.two_step_weights();
  const double di = g.degree(i), dj = g.degree(j);
  double h = 0.0;
  for (Eigen::Index k = 1; k < w.size(); ++k) {
    const double pi = s.eigenvectors(i, k), pj = s.eigenvectors(j, k);
    h += w[k] * (pj * pj / dj - pi * pj / std::sqrt(di * dj));
  }
  return g.total_degree() * h;
}

double exact_kemeny_two_step(const SpectralSummary& s) { return s.two_step_weights().sum(); }

std::vector<double> partial_mean_hitting_times(const WeightedGraph& g, const SpectralSummary& s,
                                               HittingVariant variant) {
  Eigen::VectorXd w;
  if (variant == HittingVariant::kTwoStep) {
    w = s.two_step_weights();
  } else {
    w = Eigen::VectorXd::Zero(s.eigenvalues.size());
    for (Eigen::Index k = 1; k < w.size(); ++k) w[k] = 1.0 / (1.0 - s.eigenvalues[k]);
  }
  const Eigen::VectorXd diag = s.eigenvectors.cwiseAbs2() * w;
  const StationaryDistribution st = stationary_distribution(g);
  std::vector<double> h(g.node_count());
  for (NodeId i = 0; i < g.node_count(); ++i) h[i] = diag[i] / st.pi[i];
  return h;
}

double partial_mean_hitting_time(const WeightedGraph& g, const SpectralSummary& s, NodeId target,
                                 HittingVariant variant) {
  if (target >= g.node_count()) {
    throw DomainError("target " + std::to_string(target) + " is not a node");
  }
  return partial_mean_hitting_times(g, s, variant)[target];
}

Eigen::MatrixXd two_step_normalized_pseudoinverse(const SpectralSummary& s) {
  return s.eigenvectors * s.two_step_weights().asDiagonal() * s.eigenvectors.transpose();
}

std::vector<double> truncated_diagonal_series(const WeightedGraph& g, std::size_t ell) {
  require_dense(g.node_count(), kDefaultDenseCap);
  const StationaryDistribution st = stationary_distribution(g);
  const Eigen::MatrixXd s = normalized_adjacency(g);
  const Eigen::MatrixXd s2 = s * s;
  const auto n = static_cast<Eigen::Index>(g.node_count());
  Eigen::MatrixXd power = Eigen::MatrixXd::Identity(n, n);
  std::vector<double> acc(g.node_count(), 0.0);
  for (std::size_t j = 0; j < ell; ++j) {
    // P^t and S^t share their diagonal.
    for (Eigen::Index i = 0; i < n; ++i) acc[i] += power(i, i) - st.pi[i];
    if (j + 1 < ell) power = power * s2;
  }
  return acc;
}

IdentityCheckReport pseudoinverse_identity_check(const WeightedGraph& g, double series_epsilon) {
  require_dense(g.node_count(), 200);
  const auto n = static_cast<Eigen::Index>(g.node_count());
  const Eigen::MatrixXd id = Eigen::MatrixXd::Identity(n, n);
  const Eigen::VectorXd psi = sqrt_pi(g);
  const Eigen::MatrixXd p1 = psi * psi.transpose();
  const Eigen::MatrixXd s = normalized_adjacency(g);
  const Eigen::MatrixXd s2 = s * s;

  const Eigen::MatrixXd direct = (id - s2 + p1).llt().solve(id) - p1;

  const SpectralSummary summary = decompose(g);
  const Eigen::MatrixXd spectral = two_step_normalized_pseudoinverse(summary);

  const Eigen::MatrixXd ldag = laplacian_pseudoinverse(dense_laplacian(two_step_graph(g)));
  Eigen::VectorXd sqrt_d(n);
  for (Eigen::Index i = 0; i < n; ++i) sqrt_d[i] = std::sqrt(g.degree(static_cast<NodeId>(i)));
  const Eigen::MatrixXd proj = id - p1;
  const Eigen::MatrixXd transform =
      proj * sqrt_d.asDiagonal() * ldag * sqrt_d.asDiagonal() * proj;

  IdentityCheckReport report;
  report.series_terms = truncation_length(series_epsilon, summary.gap_bound);
  Eigen::MatrixXd series = Eigen::MatrixXd::Zero(n, n);
  Eigen::MatrixXd power = id;
  for (std::size_t i = 0; i < report.series_terms; ++i) {
    series += power - p1;
    power = power * s2;
  }

  report.spectral_discrepancy = max_abs_diff(spectral, direct);
  report.transform_discrepancy = max_abs_diff(transform, direct);
  report.series_discrepancy = max_abs_diff(series, direct);
  report.diagonal_nonnegative = direct.diagonal().minCoeff() >= -1e-12;
  return report;
}

}  // namespace disagree
