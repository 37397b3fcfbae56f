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


// Seeded generators for the model networks: Barabasi-Albert, Apollonian,
// growing small-world and the pseudofractal scale-free web (PSFW).

#ifndef DISAGREE_GENERATORS_H_
#define DISAGREE_GENERATORS_H_

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "disagree/graph.h"

namespace disagree {

struct BaParams {
  std::size_t m0 = 3;  // seed cycle length
  std::size_t m = 2;   // edges per new node
  std::size_t n = 0;
};

struct ApollonianParams {
  std::size_t d = 2;
  std::size_t n = 0;
};

struct GswParams {
  double p = 0.5;  // probability of dropping the edge across the insertion gap
  std::size_t n = 0;
};

struct PsfwParams {
  unsigned g = 0;
};

struct GeneratorSpec {
  std::variant<BaParams, ApollonianParams, GswParams, PsfwParams> params;
  std::uint64_t seed = 0;
};

// Seed graph is the cycle on m0 nodes (a single edge for m0 = 2). Each new
// node attaches to m distinct existing nodes drawn proportionally to degree.
WeightedGraph generate_ba(const BaParams& params, std::uint64_t seed);

// Starts from K_{d+2}; every step splits a uniformly chosen active
// (d+1)-clique.
WeightedGraph generate_apollonian(const ApollonianParams& params, std::uint64_t seed);

// Starts from a triangle; every step inserts a node into a uniformly chosen
// gap of the perimeter cycle.
WeightedGraph generate_gsw(const GswParams& params, std::uint64_t seed);

inline constexpr std::size_t kDefaultPsfwNodeCap = 10'000'000;

// Deterministic. Throws ResourceError when N(g) exceeds `node_cap`.
WeightedGraph generate_psfw(unsigned g, std::size_t node_cap = kDefaultPsfwNodeCap);

std::size_t psfw_node_count(unsigned g);
std::size_t psfw_edge_count(unsigned g);

// Distinct eigenvalues of the PSFW transition matrix with multiplicities,
// sorted descending. g >= 2.
struct PsfwSpectrum {
  std::vector<std::pair<double, std::size_t>> eigenvalue_multiplicity;
};
PsfwSpectrum psfw_spectrum(unsigned g);

// Kemeny constant of the two-step graph, closed form. g >= 2.
double psfw_kemeny_closed_form(unsigned g);

WeightedGraph generate(const GeneratorSpec& spec);
std::string family_name(const GeneratorSpec& spec);
nlohmann::json to_json(const GeneratorSpec& spec);

}  // namespace disagree

#endif  // DISAGREE_GENERATORS_H_
