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


#ifndef DISAGREE_ESTIMATE_H_
#define DISAGREE_ESTIMATE_H_

#include <cstdint>
#include <string>
#include <vector>

#include "disagree/graph.h"

namespace disagree {

struct NodeContribution {
  NodeId node = 0;
  double pi = 0.0;
  double ldag = 0.0;  // diagonal entry of the normalized-Laplacian pseudoinverse of G'
  double contribution = 0.0;
};

// Common result record for the randomized estimators.
struct DisagreementEstimate {
  std::string method;
  double delta = 0.0;
  // Sampled nodes only for "sample"; every node for "approx".
  std::vector<NodeContribution> per_node;
  double epsilon = 0.0;
  std::uint64_t seed = 0;
  double wall_time_s = 0.0;
  std::vector<std::string> warnings;
};

}  // namespace disagree

#endif  // DISAGREE_ESTIMATE_H_
