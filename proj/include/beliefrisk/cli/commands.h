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

// The beliefrisk subcommands as functions returning the document they write.
//
// Exit codes: 0 success; 1 configuration, parse or precondition error; 2 an
// internal consistency check failed (a compatibility check that must hold
// did not); 3 the input was read but rejected (a validation report with
// violations, or a combination that is not acceptable).

#ifndef BELIEFRISK_CLI_COMMANDS_H_
#define BELIEFRISK_CLI_COMMANDS_H_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "beliefrisk/cli/config.h"
#include "beliefrisk/cli/risk_report.h"

namespace beliefrisk::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfigError = 1;
inline constexpr int kExitInconsistent = 2;
inline constexpr int kExitRejected = 3;

// kInternal maps to kExitInconsistent, anything else to kExitConfigError.
int ExitCodeFor(const absl::Status& status);

struct CommandOutput {
  std::string text;
  int exit_code = kExitOk;
};

// Masked CSV of the configured input table.
absl::StatusOr<CommandOutput> RunMask(const RunConfig& config);

absl::StatusOr<RiskReport> RunRiskReport(const RunConfig& config, int threads);
// Serialized report; exit code 2 when an evaluation came out incompatible.
absl::StatusOr<CommandOutput> RunRisk(const RunConfig& config, int threads);

struct CombineOptions {
  std::vector<std::filesystem::path> masses;
  std::filesystem::path truth;
  std::string rule = "conjunctive";
};

// On success {"ok": true, "rule", "result": <mass file>,
// "nonspecificity_trace"}; an unacceptable combination gives exit code 3
// and {"ok": false, "rule", "failure": {"clause", "step", "detail"}}.
absl::StatusOr<CommandOutput> RunCombine(const CombineOptions& options);

struct DemoN3Options {
  std::uint64_t seed = 0;
  // Records in the table: the target, its three unit neighbours, and
  // table_size - 4 random extra points at L1 distance >= 2 from the target.
  int table_size = 4;
  // Drops one of the four canonical records (0 = the target itself).
  std::optional<int> omit;
  // Reports what becomes of the pignistic guess once alpha is known.
  std::optional<int> reveal_alpha;
};

absl::StatusOr<CommandOutput> RunDemoN3(const DemoN3Options& options);

// Validation report for a mass, belief or probability file; exit code 3
// when it has violations.
absl::StatusOr<CommandOutput> RunValidate(const std::filesystem::path& path);

}  // namespace beliefrisk::cli

#endif  // BELIEFRISK_CLI_COMMANDS_H_
