// Copyright 2026 The BeliefRisk Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef BELIEFRISK_SRC_CLI_SET_FUNCTION_JSON_H_
#define BELIEFRISK_SRC_CLI_SET_FUNCTION_JSON_H_

#include "beliefrisk/belief.h"
#include "cli/json_util.h"

namespace beliefrisk::cli::internal {

Json MassJson(const MassAssignment& m);
Json ProbabilityJson(const ProbabilityDistribution& p);

}  // namespace beliefrisk::cli::internal

#endif  // BELIEFRISK_SRC_CLI_SET_FUNCTION_JSON_H_
