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


#include "disagree/generators.h"

#include <algorithm>
#include <cmath>
#include <unordered_set>

#include "disagree/errors.h"
#include "disagree/rng.h"

namespace disagree {
namespace {

std::uint64_t pair_key(NodeId a, NodeId b) {
  if (a > b) std::swap(a, b);
  return (static_cast<std::uint64_t>(a) << 32) | b;
}

}  // namespace

WeightedGraph generate_ba(const BaParams& params, std::uint64_t seed) {
  const auto [m0, m, n] = params;
  if (m < 1 || m0 < m || n < m0) {
    throw DomainError("ba requires 1 <= m <= m0 <= n (got m=" + std::to_string(m) +
                      ", m0=" + std::to_string(m0) + ", n=" + std::to_string(n) + ")");
  }
  std::vector<Edge> edges;
  // Endpoint multiset: node u appears deg(u) times.
  std::vector<NodeId> endpoints;
  auto add = [&](NodeId u, NodeId v) {
    edges.push_back({u, v, 1.0});
    endpoints.push_back(u);
    endpoints.push_back(v);
  };
  if (m0 == 2) add(0, 1);
  if (m0 >= 3) {
    for (NodeId u = 0; u < m0; ++u) add(u, static_cast<NodeId>((u + 1) % m0));
  }

  Rng rng(seed);
  std::vector<NodeId> targets;
  for (auto v = static_cast<NodeId>(m0); v < n; ++v) {
    targets.clear();
    while (targets.size() < m) {
      // A lone seed node has no endpoints yet.
      const NodeId t = endpoints.empty() ? static_cast<NodeId>(rng.below(v))
                                         : endpoints[rng.below(endpoints.size())];
      if (std::find(targets.begin(), targets.end(), t) == targets.end()) targets.push_back(t);
    }
    for (NodeId t : targets) add(v, t);
  }
  return WeightedGraph::from_edges(n, edges);
}

WeightedGraph generate_apollonian(const ApollonianParams& params, std::uint64_t seed) {
  const auto [d, n] = params;
  if (d < 2 || n < d + 2) {
    throw DomainError("apollonian requires d >= 2 and n >= d + 2");
  }
  const std::size_t width = d + 1;
  std::vector<Edge> edges;
  for (NodeId u = 0; u < d + 2; ++u) {
    for (NodeId v = u + 1; v < d + 2; ++v) edges.push_back({u, v, 1.0});
  }
  // Active cliques, stride `width`.
  std::vector<NodeId> active;
  for (NodeId skip = 0; skip < d + 2; ++skip) {
    for (NodeId u = 0; u < d + 2; ++u) {
      if (u != skip) active.push_back(u);
    }
  }

  Rng rng(seed);
  std::vector<NodeId> clique(width);
  for (auto v = static_cast<NodeId>(d + 2); v < n; ++v) {
    const std::size_t count = active.size() / width;
    const std::size_t pick = rng.below(count);
    std::copy_n(active.begin() + pick * width, width, clique.begin());
    std::copy_n(active.end() - width, width, active.begin() + pick * width);
    active.resize(active.size() - width);
    for (NodeId u : clique) edges.push_back({u, v, 1.0});
    for (std::size_t drop = 0; drop < width; ++drop) {
      for (std::size_t k = 0; k < width; ++k) active.push_back(k == drop ? v : clique[k]);
    }
  }
  return WeightedGraph::from_edges(n, edges);
}

WeightedGraph generate_gsw(const GswParams& params, std::uint64_t seed) {
  const auto [p, n] = params;
  if (!(p >= 0.0 && p <= 1.0) || n < 3) {
    throw DomainError("gsw requires p in [0, 1] and n >= 3");
  }
  std::unordered_set<std::uint64_t> present{pair_key(0, 1), pair_key(1, 2), pair_key(0, 2)};
  present.reserve(2 * n);
  std::vector<NodeId> next(n);
  next[0] = 1;
  next[1] = 2;
  next[2] = 0;

  Rng rng(seed);
  for (auto c = static_cast<NodeId>(3); c < n; ++c) {
    const auto a = static_cast<NodeId>(rng.below(c));
    const NodeId b = next[a];
    present.insert(pair_key(a, c));
    present.insert(pair_key(c, b));
    if (rng.bernoulli(p)) present.erase(pair_key(a, b));
    next[a] = c;
    next[c] = b;
  }

  std::vector<Edge> edges;
  edges.reserve(present.size());
  for (std::uint64_t key : present) {
    edges.push_back({static_cast<NodeId>(key >> 32), static_cast<NodeId>(key & 0xffffffffu), 1.0});
  }
  return WeightedGraph::from_edges(n, edges);
}

std::size_t psfw_edge_count(unsigned g) {
  std::size_t m = 3;
  for (unsigned k = 0; k < g; ++k) m *= 3;
  return m;
}

std::size_t psfw_node_count(unsigned g) { return (psfw_edge_count(g) + 3) / 2; }

WeightedGraph generate_psfw(unsigned g, std::size_t node_cap) {
  if (g > 30 || psfw_node_count(g) > node_cap) {
    throw ResourceError("psfw g=" + std::to_string(g) + " exceeds the node cap of " +
                        std::to_string(node_cap));
  }
  std::vector<Edge> edges{{0, 1, 1.0}, {1, 2, 1.0}, {0, 2, 1.0}};
  NodeId next = 3;
  for (unsigned gen = 0; gen < g; ++gen) {
    const std::size_t old = edges.size();
    edges.reserve(3 * old);
    for (std::size_t k = 0; k < old; ++k) {
      const Edge e = edges[k];
      edges.push_back({e.u, next, 1.0});
      edges.push_back({e.v, next, 1.0});
      ++next;
    }
  }
  return WeightedGraph::from_edges(next, edges);
}

PsfwSpectrum psfw_spectrum(unsigned g) {
  if (g < 2) throw DomainError("psfw spectrum is stated for g >= 2");
  auto pow3 = [](unsigned e) { return static_cast<std::size_t>(std::llround(std::pow(3.0, e))); };
  PsfwSpectrum out;
  out.eigenvalue_multiplicity.emplace_back(1.0, 1);
  for (unsigned s = 0; s <= g; ++s) {
    out.eigenvalue_multiplicity.emplace_back(1.0 - 3.0 / std::ldexp(1.0, s + 1),
                                             (pow3(g - s) + 3) / 2);
  }
  for (unsigned s = 0; s + 2 <= g; ++s) {
    out.eigenvalue_multiplicity.emplace_back(1.0 - 4.0 / std::ldexp(1.0, s + 2),
                                             (pow3(g - s) - 3) / 2);
  }
  std::sort(out.eigenvalue_multiplicity.begin(), out.eigenvalue_multiplicity.end(),
            [](const auto& a, const auto& b) { return a.first > b.first; });
  return out;
}

double psfw_kemeny_closed_form(unsigned g) {
  if (g < 2) throw DomainError("psfw Kemeny closed form is stated for g >= 2");
  const double gd = g;
  double k = 0.0;
  for (unsigned s = 0; s <= g; ++s) {
    k += std::ldexp(1.0, 2 * static_cast<int>(s) + 1) * (std::pow(3.0, gd - s - 1) + 1.0) /
         (std::ldexp(1.0, s + 2) - 3.0);
  }
  for (unsigned s = 0; s + 2 <= g; ++s) {
    k += std::ldexp(1.0, 2 * static_cast<int>(s) - 1) * (std::pow(3.0, gd - s) - 3.0) /
         (std::ldexp(1.0, s + 1) - 1.0);
  }
  return k;
}

WeightedGraph generate(const GeneratorSpec& spec) {
  return std::visit(
      [&](const auto& p) -> WeightedGraph {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, BaParams>) return generate_ba(p, spec.seed);
        if constexpr (std::is_same_v<T, ApollonianParams>) {
          return generate_apollonian(p, spec.seed);
        }
        if constexpr (std::is_same_v<T, GswParams>) return generate_gsw(p, spec.seed);
        if constexpr (std::is_same_v<T, PsfwParams>) return generate_psfw(p.g);
      },
      spec.params);
}

std::string family_name(const GeneratorSpec& spec) {
  static constexpr const char* kNames[] = {"ba", "apollonian", "gsw", "psfw"};
  return kNames[spec.params.index()];
}

nlohmann::json to_json(const GeneratorSpec& spec) {
  nlohmann::json j{{"family", family_name(spec)}, {"seed", spec.seed}};
  std::visit(
      [&](const auto& p) {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, BaParams>) {
          j["params"] = {{"m0", p.m0}, {"m", p.m}, {"n", p.n}};
        } else if constexpr (std::is_same_v<T, ApollonianParams>) {
          j["params"] = {{"d", p.d}, {"n", p.n}};
        } else if constexpr (std::is_same_v<T, GswParams>) {
          j["params"] = {{"p", p.p}, {"n", p.n}};
        } else {
          j["params"] = {{"g", p.g}};
        }
      },
      spec.params);
  return j;
}

}  // namespace disagree
