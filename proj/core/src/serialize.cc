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


#include "disagree/serialize.h"

namespace disagree {

nlohmann::json to_json(const NodeContribution& c) {
  return {{"node", c.node}, {"pi", c.pi}, {"ldag", c.ldag}, {"contribution", c.contribution}};
}

nlohmann::json to_json(const DisagreementExact& d) {
  nlohmann::json per_node = nlohmann::json::array();
  for (const auto& c : d.per_node) per_node.push_back(to_json(c));
  return {{"method", "exact"}, {"delta", d.delta}, {"per_node", per_node},
          {"warnings", d.warnings}};
}

nlohmann::json to_json(const DisagreementEstimate& e) {
  nlohmann::json per_node = nlohmann::json::array();
  for (const auto& c : e.per_node) per_node.push_back(to_json(c));
  return {{"method", e.method},   {"delta", e.delta},           {"epsilon", e.epsilon},
          {"seed", e.seed},       {"wall_time_s", e.wall_time_s}, {"per_node", per_node},
          {"warnings", e.warnings}};
}

nlohmann::json to_json(const SampleParams& p) {
  return {{"epsilon", p.epsilon},
          {"lambda_bound", p.lambda_bound},
          {"ell", p.ell},
          {"walks_per_length", p.walks_per_length},
          {"node_budget", p.node_budget},
          {"seed", p.seed},
          {"reuse_walks", p.reuse_walks},
          {"return_counting",
           p.counting == ReturnCounting::kEndpoint ? "endpoint" : "pseudocode-visits"}};
}

nlohmann::json to_json(const ApproxDiagnostics& d) {
  return {{"s", d.samples},
          {"sparsifier_edges", d.sparsifier_edges},
          {"k", d.k},
          {"kappa", d.kappa},
          {"kappa_overridden", d.kappa_overridden},
          {"sigma", d.sigma},
          {"cg_iterations", d.cg_iterations}};
}

nlohmann::json to_json(const MCConfig& c) {
  return {{"burn_in", c.burn_in},
          {"horizon", c.horizon},
          {"truncation_cap", c.truncation_cap},
          {"walks_per_target", c.walks_per_target},
          {"seed", c.seed},
          {"noise", c.noise == NoiseKind::kGaussian ? "gaussian" : "rademacher"},
          {"node_cap", c.node_cap}};
}

}  // namespace disagree
