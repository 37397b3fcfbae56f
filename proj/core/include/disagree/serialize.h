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


// JSON forms of the result records.

#ifndef DISAGREE_SERIALIZE_H_
#define DISAGREE_SERIALIZE_H_

#include <nlohmann/json.hpp>

#include "disagree/approx_delta.h"
#include "disagree/dynamics.h"
#include "disagree/estimate.h"
#include "disagree/spectral.h"
#include "disagree/walk_sampler.h"

namespace disagree {

nlohmann::json to_json(const NodeContribution& c);
nlohmann::json to_json(const DisagreementExact& d);
nlohmann::json to_json(const DisagreementEstimate& e);
nlohmann::json to_json(const SampleParams& p);
nlohmann::json to_json(const ApproxDiagnostics& d);
nlohmann::json to_json(const MCConfig& c);

}  // namespace disagree

#endif  // DISAGREE_SERIALIZE_H_
