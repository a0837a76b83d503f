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

// Run configuration, a JSON document:
//
//   {
//     "input": "ages.csv",
//     "output": "report.json",
//     "scheme": {
//       "age": {"intervals": [[15, 19], [20, 25]]},
//       "zip": {"groups": {"north": ["n1", "n2"], "south": ["s1"]}},
//       "sex": "identity"
//     },
//     "attribute_subsets": [["age"], ["age", "zip"]],
//     "measures": ["nonspecificity", "pignistic_entropy", "compatibility"],
//     "seed": 7
//   }
//
// Only "input" and "scheme" are required. Relative paths resolve against
// the directory holding the configuration file. Without
// "attribute_subsets" each single attribute and the full set are
// evaluated; without "measures" all three are computed.

#ifndef BELIEFRISK_CLI_CONFIG_H_
#define BELIEFRISK_CLI_CONFIG_H_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "absl/strings/string_view.h"
#include "beliefrisk/reident.h"

namespace beliefrisk::cli {

enum class Measure { kNonspecificity, kPignisticEntropy, kCompatibility };

absl::string_view MeasureName(Measure measure);
absl::StatusOr<Measure> MeasureByName(absl::string_view name);

struct RunConfig {
  std::filesystem::path input;
  std::optional<std::filesystem::path> output;
  GeneralizationScheme scheme;
  // Empty means the default subsets.
  std::vector<std::vector<std::string>> attribute_subsets;
  std::set<Measure> measures;
  std::optional<std::uint64_t> seed;
};

absl::StatusOr<RunConfig> ParseRunConfig(absl::string_view text,
                                         const std::filesystem::path& base);
absl::StatusOr<RunConfig> LoadRunConfig(const std::filesystem::path& path);

// Checks the scheme and subsets against the table columns and resolves the
// subsets to evaluate.
absl::StatusOr<std::vector<AttributeSubset>> ResolveSubsets(
    const RunConfig& config, const Table& table);

}  // namespace beliefrisk::cli

#endif  // BELIEFRISK_CLI_CONFIG_H_
