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

// Files holding a mass assignment, belief function or probability:
//
//   {
//     "kind": "mass",
//     "frame": ["x0", "x1", "x2"],
//     "assignments": [
//       {"subset": ["x0", "x1"], "value": 0.75},
//       {"subset": ["x0", "x1", "x2"], "value": 0.25}
//     ]
//   }
//
// "kind" is "mass" (the default), "belief" or "probability". Subsets that
// are not listed get 0; a subset may be listed once. Probability files list
// singletons only.

#ifndef BELIEFRISK_CLI_SET_FUNCTION_FILE_H_
#define BELIEFRISK_CLI_SET_FUNCTION_FILE_H_

#include <filesystem>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "absl/strings/string_view.h"
#include "beliefrisk/belief.h"
#include "beliefrisk/frame.h"

namespace beliefrisk::cli {

enum class SetFunctionKind { kMass, kBelief, kProbability };

absl::string_view SetFunctionKindName(SetFunctionKind kind);

struct SetFunctionFile {
  Frame frame;
  SetFunctionKind kind;
  // Dense over subsets for mass and belief; one value per element for
  // probability. Not validated beyond the file structure.
  std::vector<double> values;
};

// `source` prefixes error messages.
absl::StatusOr<SetFunctionFile> ParseSetFunctionFile(absl::string_view text,
                                                     absl::string_view source);
absl::StatusOr<SetFunctionFile> LoadSetFunctionFile(
    const std::filesystem::path& path);

// A valid mass from a "mass" file.
absl::StatusOr<MassAssignment> LoadMass(const std::filesystem::path& path);
// A distribution from a "probability" file, or from a singleton-carried
// "mass" file.
absl::StatusOr<ProbabilityDistribution> LoadProbability(
    const std::filesystem::path& path);

// Non-zero entries only, subsets in increasing bit order.
std::string SerializeMass(const MassAssignment& m);
std::string SerializeProbability(const ProbabilityDistribution& p);

}  // namespace beliefrisk::cli

#endif  // BELIEFRISK_CLI_SET_FUNCTION_FILE_H_
