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
#include <sstream>

#include <Eigen/Eigenvalues>
#include <gtest/gtest.h>

#include "disagree/edge_list.h"
#include "disagree/errors.h"
#include "disagree/generators.h"
#include "disagree/validation.h"

namespace disagree {
namespace {

std::string edge_text(const WeightedGraph& g) {
  std::ostringstream out;
  write_edge_list(out, g);
  return out.str();
}

bool is_complete(const WeightedGraph& g) {
  const std::size_t n = g.node_count();
  return g.edge_count() == n * (n - 1) / 2;
}

// Discrete power-law MLE, continuous approximation with the usual half shift.
double tail_exponent(const WeightedGraph& g, double k_min) {
  double log_sum = 0.0;
  std::size_t count = 0;
  for (double d : g.degrees()) {
    if (d < k_min) continue;
    log_sum += std::log(d / (k_min - 0.5));
    ++count;
  }
  return 1.0 + static_cast<double>(count) / log_sum;
}

TEST(BaTest, SeedOnlyIsTriangle) {
  const WeightedGraph g = generate_ba({.m0 = 3, .m = 2, .n = 3}, 99);
  EXPECT_EQ(g.node_count(), 3u);
  EXPECT_TRUE(is_complete(g));
}

TEST(BaTest, EveryNewNodeAddsExactlyMEdges) {
  const WeightedGraph g = generate_ba({.m0 = 4, .m = 3, .n = 500}, 5);
  EXPECT_EQ(g.edge_count(), 4u + 3u * (500 - 4));
  EXPECT_TRUE(g.is_unweighted());
}

TEST(BaTest, AverageDegreeAndTail) {
  const WeightedGraph g = generate_ba({.m0 = 3, .m = 2, .n = 10000}, 7);
  const double mean = g.total_degree() / static_cast<double>(g.node_count());
  EXPECT_NEAR(mean, 4.0, 0.2);
  const double alpha = tail_exponent(g, 10.0);
  EXPECT_GE(alpha, 2.5);
  EXPECT_LE(alpha, 3.5);
}

TEST(BaTest, RejectsBadParameters) {
  EXPECT_THROW(generate_ba({.m0 = 2, .m = 3, .n = 10}, 0), DomainError);
  EXPECT_THROW(generate_ba({.m0 = 3, .m = 2, .n = 2}, 0), DomainError);
  EXPECT_THROW(generate_ba({.m0 = 3, .m = 0, .n = 10}, 0), DomainError);
}

TEST(ApollonianTest, InitialCliqueAndFirstStep) {
  EXPECT_TRUE(is_complete(generate_apollonian({.d = 2, .n = 4}, 1)));
  const WeightedGraph g = generate_apollonian({.d = 2, .n = 5}, 1);
  EXPECT_EQ(g.edge_count(), 9u);
  EXPECT_DOUBLE_EQ(g.degree(4), 3.0);
  // The new node's neighbors form a triangle of the K4.
  auto nb = g.neighbors(4);
  for (NodeId a : nb) {
    for (NodeId b : nb) {
      if (a != b) EXPECT_TRUE(g.edge_weight(a, b).has_value());
    }
  }
}

TEST(ApollonianTest, EdgeCountRecurrence) {
  const WeightedGraph g = generate_apollonian({.d = 2, .n = 10000}, 3);
  EXPECT_EQ(g.edge_count(), 3u * (10000 - 4) + 6);
  const WeightedGraph h = generate_apollonian({.d = 3, .n = 200}, 3);
  EXPECT_EQ(h.edge_count(), 4u * (200 - 5) + 10);
}

TEST(ApollonianTest, RejectsBadParameters) {
  EXPECT_THROW(generate_apollonian({.d = 1, .n = 10}, 0), DomainError);
  EXPECT_THROW(generate_apollonian({.d = 2, .n = 3}, 0), DomainError);
}

TEST(GswTest, EdgeCountsAtExtremes) {
  EXPECT_TRUE(is_complete(generate_gsw({.p = 0.0, .n = 3}, 4)));
  for (std::size_t n : {3u, 10u, 257u, 4000u}) {
    EXPECT_EQ(generate_gsw({.p = 1.0, .n = n}, n).edge_count(), n);
    EXPECT_EQ(generate_gsw({.p = 0.0, .n = n}, n).edge_count(), 2 * n - 3);
  }
}

TEST(GswTest, IntermediateEdgeCountIsBetweenExtremes) {
  const WeightedGraph g = generate_gsw({.p = 0.5, .n = 5000}, 11);
  // About half the insertions remove an edge.
  EXPECT_NEAR(static_cast<double>(g.edge_count()), 1.5 * 5000, 150.0);
}

TEST(GswTest, RejectsBadParameters) {
  EXPECT_THROW(generate_gsw({.p = 1.5, .n = 10}, 0), DomainError);
  EXPECT_THROW(generate_gsw({.p = 0.5, .n = 2}, 0), DomainError);
}

TEST(PsfwTest, SmallGenerations) {
  const WeightedGraph g0 = generate_psfw(0);
  EXPECT_EQ(g0.node_count(), 3u);
  EXPECT_EQ(g0.edge_count(), 3u);
  const WeightedGraph g1 = generate_psfw(1);
  EXPECT_EQ(g1.node_count(), 6u);
  EXPECT_EQ(g1.edge_count(), 9u);
  const WeightedGraph g4 = generate_psfw(4);
  EXPECT_EQ(g4.node_count(), 123u);
  EXPECT_EQ(g4.edge_count(), 243u);
}

TEST(PsfwTest, CountsMatchClosedFormsThroughG8) {
  std::size_t pow3 = 3;
  for (unsigned g = 0; g <= 8; ++g, pow3 *= 3) {
    const WeightedGraph f = generate_psfw(g);
    EXPECT_EQ(f.node_count(), (pow3 + 3) / 2);
    EXPECT_EQ(f.edge_count(), pow3);
    EXPECT_EQ(psfw_node_count(g), f.node_count());
    EXPECT_EQ(psfw_edge_count(g), f.edge_count());
  }
}

TEST(PsfwTest, NodeCapRaisesResourceError) {
  EXPECT_THROW(generate_psfw(6, 100), ResourceError);
}

TEST(PsfwSpectrumTest, MultiplicitiesAtG2) {
  const PsfwSpectrum sp = psfw_spectrum(2);
  std::size_t total = 0;
  for (const auto& [value, mult] : sp.eigenvalue_multiplicity) {
    total += mult;
    if (std::abs(value + 0.5) < 1e-12) EXPECT_EQ(mult, 6u);
  }
  EXPECT_EQ(total, 15u);
  EXPECT_THROW(psfw_spectrum(1), DomainError);
}

std::vector<double> expand(const PsfwSpectrum& sp) {
  std::vector<double> out;
  for (const auto& [value, mult] : sp.eigenvalue_multiplicity) out.insert(out.end(), mult, value);
  return out;
}

TEST(PsfwSpectrumTest, MatchesDenseEigensolve) {
  for (unsigned g : {2u, 3u, 4u}) {
    const WeightedGraph f = generate_psfw(g);
    const auto n = static_cast<Eigen::Index>(f.node_count());
    Eigen::MatrixXd s = Eigen::MatrixXd::Zero(n, n);
    for (const Edge& e : f.edges()) {
      const double v = e.w / std::sqrt(f.degree(e.u) * f.degree(e.v));
      s(e.u, e.v) = v;
      s(e.v, e.u) = v;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(s, Eigen::EigenvaluesOnly);
    std::vector<double> dense(es.eigenvalues().begin(), es.eigenvalues().end());
    std::sort(dense.rbegin(), dense.rend());
    const std::vector<double> closed = expand(psfw_spectrum(g));
    ASSERT_EQ(closed.size(), dense.size());
    for (std::size_t k = 0; k < dense.size(); ++k) EXPECT_NEAR(closed[k], dense[k], 1e-8);
  }
}

TEST(PsfwKemenyTest, ClosedFormMatchesSpectrum) {
  for (unsigned g = 2; g <= 6; ++g) {
    const std::vector<double> lambda = expand(psfw_spectrum(g));
    double k = 0.0;
    for (std::size_t i = 1; i < lambda.size(); ++i) k += 1.0 / (1.0 - lambda[i] * lambda[i]);
    EXPECT_NEAR(psfw_kemeny_closed_form(g), k, 1e-8 * k) << "g=" << g;
  }
  EXPECT_THROW(psfw_kemeny_closed_form(1), DomainError);
}

TEST(PsfwKemenyTest, LargeGenerationMagnitudes) {
  EXPECT_NEAR(psfw_kemeny_closed_form(12) / 1.15e6, 1.0, 0.01);
  EXPECT_NEAR(psfw_kemeny_closed_form(13) / 3.45e6, 1.0, 0.01);
}

TEST(GeneratorInvariantTest, ConnectedAcrossSeeds) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    EXPECT_TRUE(validate(generate_ba({.m0 = 3, .m = 2, .n = 200}, seed)).connected);
    EXPECT_TRUE(validate(generate_apollonian({.d = 2, .n = 200}, seed)).connected);
    EXPECT_TRUE(validate(generate_gsw({.p = 0.5, .n = 200}, seed)).connected);
    EXPECT_TRUE(validate(generate_gsw({.p = 1.0, .n = 200}, seed)).connected);
  }
  for (unsigned g = 0; g <= 6; ++g) EXPECT_TRUE(validate(generate_psfw(g)).connected);
}

TEST(GeneratorInvariantTest, SameSeedSameBytes) {
  const GeneratorSpec specs[] = {
      {BaParams{.m0 = 3, .m = 2, .n = 300}, 42},
      {ApollonianParams{.d = 2, .n = 300}, 42},
      {GswParams{.p = 0.5, .n = 300}, 42},
      {PsfwParams{.g = 4}, 0},
  };
  for (const GeneratorSpec& spec : specs) {
    EXPECT_EQ(edge_text(generate(spec)), edge_text(generate(spec))) << family_name(spec);
  }
  EXPECT_NE(edge_text(generate_ba({.m0 = 3, .m = 2, .n = 300}, 1)),
            edge_text(generate_ba({.m0 = 3, .m = 2, .n = 300}, 2)));
}

TEST(GeneratorInvariantTest, SpecJson) {
  const nlohmann::json j = to_json(GeneratorSpec{GswParams{.p = 0.25, .n = 64}, 9});
  EXPECT_EQ(j.at("family"), "gsw");
  EXPECT_EQ(j.at("seed"), 9);
  EXPECT_DOUBLE_EQ(j.at("params").at("p").get<double>(), 0.25);
}

}  // namespace
}  // namespace disagree
