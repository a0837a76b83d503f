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

// beliefrisk: mask tables, report re-identification risk, combine and
// validate evidence files, and run the N^3 noise demonstration.

#include <cstdint>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "absl/status/statusor.h"
#include "beliefrisk/cli/commands.h"
#include "beliefrisk/cli/config.h"
#include "beliefrisk/cli/csv.h"

namespace {

using beliefrisk::cli::CommandOutput;

int Emit(const absl::StatusOr<CommandOutput>& out,
         const std::optional<std::string>& output) {
  if (!out.ok()) {
    std::cerr << "beliefrisk: " << out.status().message() << "\n";
    return beliefrisk::cli::ExitCodeFor(out.status());
  }
  if (output.has_value()) {
    absl::Status written = beliefrisk::cli::WriteFile(*output, out->text);
    if (!written.ok()) {
      std::cerr << "beliefrisk: " << written.message() << "\n";
      return beliefrisk::cli::kExitConfigError;
    }
  } else {
    std::cout << out->text;
  }
  return out->exit_code;
}

// --output wins over the config's "output".
std::optional<std::string> OutputPath(
    const std::string& flag, const beliefrisk::cli::RunConfig& config) {
  if (!flag.empty()) return flag;
  if (config.output.has_value()) return config.output->string();
  return std::nullopt;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Belief-function re-identification risk for masked tables"};
  app.require_subcommand(1);

  std::string config_path;
  std::string output;
  int threads = 0;

  CLI::App* mask = app.add_subcommand("mask", "Write the generalized table");
  mask->add_option("--config", config_path, "Run configuration")->required();
  mask->add_option("--output", output, "Output CSV (default: stdout)");

  CLI::App* risk = app.add_subcommand("risk", "Write the risk report");
  risk->add_option("--config", config_path, "Run configuration")->required();
  risk->add_option("--output", output, "Output JSON (default: stdout)");
  risk->add_option("--threads", threads, "Worker threads (0: all cores)")
      ->check(CLI::NonNegativeNumber);

  beliefrisk::cli::CombineOptions combine_options;
  std::vector<std::string> mass_paths;
  std::string truth_path;
  CLI::App* combine =
      app.add_subcommand("combine", "Fold mass files under a checked rule");
  combine->add_option("masses", mass_paths, "Mass files, in fold order")
      ->required()
      ->expected(2, -1);
  combine->add_option("--truth", truth_path, "True probability file")
      ->required();
  combine->add_option("--rule", combine_options.rule,
                      "conjunctive or dempster_normalized");
  combine->add_option("--output", output, "Output JSON (default: stdout)");

  beliefrisk::cli::DemoN3Options demo_options;
  int omit = -1;
  int reveal_alpha = -1;
  CLI::App* demo =
      app.add_subcommand("demo-n3", "Additive noise on N^3 example");
  demo->add_option("--seed", demo_options.seed, "Random seed");
  demo->add_option("--table-size", demo_options.table_size,
                   "Records in the table (4 to 24)");
  demo->add_option("--omit", omit, "Drop canonical record 0..3");
  demo->add_option("--reveal-alpha", reveal_alpha, "Condition on alpha (0/1)");
  demo->add_option("--output", output, "Output JSON (default: stdout)");

  std::string validate_path;
  CLI::App* validate =
      app.add_subcommand("validate", "Check a mass, belief or probability file");
  validate->add_option("file", validate_path, "File to check")->required();
  validate->add_option("--output", output, "Output JSON (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : beliefrisk::cli::kExitConfigError;
  }

  std::optional<std::string> out_path;
  if (!output.empty()) out_path = output;

  if (mask->parsed() || risk->parsed()) {
    absl::StatusOr<beliefrisk::cli::RunConfig> config =
        beliefrisk::cli::LoadRunConfig(config_path);
    if (!config.ok()) {
      std::cerr << "beliefrisk: " << config.status().message() << "\n";
      return beliefrisk::cli::kExitConfigError;
    }
    out_path = OutputPath(output, *config);
    if (mask->parsed()) {
      return Emit(beliefrisk::cli::RunMask(*config), out_path);
    }
    return Emit(beliefrisk::cli::RunRisk(*config, threads), out_path);
  }
  if (combine->parsed()) {
    for (const auto& p : mass_paths) combine_options.masses.emplace_back(p);
    combine_options.truth = truth_path;
    return Emit(beliefrisk::cli::RunCombine(combine_options), out_path);
  }
  if (demo->parsed()) {
    if (omit >= 0) demo_options.omit = omit;
    if (reveal_alpha >= 0) demo_options.reveal_alpha = reveal_alpha;
    return Emit(beliefrisk::cli::RunDemoN3(demo_options), out_path);
  }
  return Emit(beliefrisk::cli::RunValidate(validate_path), out_path);
}
