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

#include "beliefrisk/cli/commands.h"

#include <cstdlib>
#include <random>
#include <set>
#include <utility>

#include "absl/strings/str_cat.h"
#include "beliefrisk/belief.h"
#include "beliefrisk/cli/csv.h"
#include "beliefrisk/cli/set_function_file.h"
#include "beliefrisk/combination.h"
#include "beliefrisk/compatibility.h"
#include "beliefrisk/measures.h"
#include "beliefrisk/reident.h"
#include "cli/json_util.h"
#include "cli/set_function_json.h"
#include "cli/status_macros.h"

namespace beliefrisk::cli {

namespace {

using internal::Json;

absl::StatusOr<Table> LoadTable(const std::filesystem::path& path) {
  BR_ASSIGN_OR_RETURN(std::string text, ReadFile(path));
  auto doc = ParseCsv(text);
  if (!doc.ok()) {
    return absl::InvalidArgumentError(
        absl::StrCat(path.string(), ": ", doc.status().message()));
  }
  return TableFromCsv(*doc);
}

Json DistributionJson(const ProbabilityDistribution& p) {
  Json support = Json::array();
  Json values = Json::array();
  for (int x = 0; x < p.size(); ++x) {
    if (p[x] != 0.0) {
      support.push_back(p.frame().label(x));
      values.push_back(p[x]);
    }
  }
  return Json{{"support", std::move(support)}, {"values", std::move(values)}};
}

Json VerdictJson(const CompatibilityVerdict& verdict, const Frame& frame) {
  if (verdict.compatible()) return Json{{"verdict", "compatible"}};
  const CompatibilityViolation& v = *verdict.violation;
  return Json{{"verdict", "incompatible"},
              {"subset", frame.LabelsOf(v.subset)},
              {"probability", v.probability},
              {"belief", v.belief}};
}

Json TripleJson(const Triple& t) { return Json{t[0], t[1], t[2]}; }

std::int64_t L1(const Triple& t) {
  return std::llabs(t[0]) + std::llabs(t[1]) + std::llabs(t[2]);
}

}  // namespace

int ExitCodeFor(const absl::Status& status) {
  if (status.ok()) return kExitOk;
  return status.code() == absl::StatusCode::kInternal ? kExitInconsistent
                                                      : kExitConfigError;
}

absl::StatusOr<CommandOutput> RunMask(const RunConfig& config) {
  BR_ASSIGN_OR_RETURN(Table table, LoadTable(config.input));
  BR_RETURN_IF_ERROR(ResolveSubsets(config, table).status());
  BR_ASSIGN_OR_RETURN(MaskedTable masked, MaskGeneralize(table, config.scheme));
  return CommandOutput{WriteCsv(MaskedTableToCsv(masked)), kExitOk};
}

absl::StatusOr<RiskReport> RunRiskReport(const RunConfig& config,
                                         int threads) {
  BR_ASSIGN_OR_RETURN(Table table, LoadTable(config.input));
  RiskOptions options;
  BR_ASSIGN_OR_RETURN(options.subsets, ResolveSubsets(config, table));
  options.measures = config.measures;
  options.threads = threads;
  return ComputeRiskReport(table, config.scheme, options);
}

absl::StatusOr<CommandOutput> RunRisk(const RunConfig& config, int threads) {
  BR_ASSIGN_OR_RETURN(RiskReport report, RunRiskReport(config, threads));
  return CommandOutput{SerializeRiskReport(report),
                       report.summary.incompatible_evaluations > 0
                           ? kExitInconsistent
                           : kExitOk};
}

absl::StatusOr<CommandOutput> RunCombine(const CombineOptions& options) {
  BR_ASSIGN_OR_RETURN(CombinationRule rule, RuleByName(options.rule));
  std::vector<MassAssignment> masses;
  for (const auto& path : options.masses) {
    BR_ASSIGN_OR_RETURN(MassAssignment m, LoadMass(path));
    masses.push_back(std::move(m));
  }
  BR_ASSIGN_OR_RETURN(ProbabilityDistribution truth,
                      LoadProbability(options.truth));
  absl::StatusOr<CombinedEvidence> combined =
      CombineMany(rule, masses, truth);
  if (!combined.ok()) {
    std::optional<CombinationFailure> failure =
        GetCombinationFailure(combined.status());
    if (!failure.has_value()) return combined.status();
    Json doc{{"ok", false},
             {"rule", rule.name},
             {"failure",
              {{"clause", std::string(AcceptabilityClauseName(failure->clause))},
               {"step", failure->step},
               {"detail", failure->detail}}}};
    return CommandOutput{doc.dump(2) + "\n", kExitRejected};
  }
  Json doc{{"ok", true},
           {"rule", rule.name},
           {"result", internal::MassJson(combined->result)},
           {"nonspecificity_trace", combined->nonspecificity_trace}};
  if (std::optional<ProbabilityDistribution> p =
          AsProbability(combined->result)) {
    doc["singleton_carried"] = true;
    doc["distribution"] = DistributionJson(*p);
  } else {
    doc["singleton_carried"] = false;
  }
  return CommandOutput{doc.dump(2) + "\n", kExitOk};
}

absl::StatusOr<CommandOutput> RunDemoN3(const DemoN3Options& options) {
  if (options.table_size < 4 || options.table_size > kMaxFrame) {
    return absl::InvalidArgumentError(absl::StrCat(
        "table size must lie in [4, ", kMaxFrame, "]; got ",
        options.table_size));
  }
  if (options.omit.has_value() && (*options.omit < 0 || *options.omit > 3)) {
    return absl::InvalidArgumentError("omit must name a record in 0..3");
  }
  if (options.reveal_alpha.has_value() && *options.reveal_alpha != 0 &&
      *options.reveal_alpha != 1) {
    return absl::InvalidArgumentError("alpha is 0 or 1");
  }

  const Triple y{0, 0, 0};
  std::vector<Triple> canonical = {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  std::vector<Triple> points;
  for (int i = 0; i < 4; ++i) {
    if (options.omit != i) points.push_back(canonical[i]);
  }
  std::mt19937_64 rng(options.seed);
  std::uniform_int_distribution<std::int64_t> coord(0, 4);
  std::set<Triple> used(canonical.begin(), canonical.end());
  while (static_cast<int>(points.size()) <
         options.table_size) {
    Triple t{coord(rng), coord(rng), coord(rng)};
    if (L1(t) < 2 || !used.insert(t).second) continue;
    points.push_back(t);
  }

  BR_ASSIGN_OR_RETURN(N3Construction construction, N3ReidentBelief(y, points));
  BR_ASSIGN_OR_RETURN(ProbabilityDistribution posterior,
                      N3Posterior(y, points));
  const Frame& frame = construction.belief.frame();
  const ProbabilityDistribution pignistic = Pignistic(construction.belief);
  const int argmax = pignistic.ArgMax();
  BR_ASSIGN_OR_RETURN(
      ProbabilityDistribution uniform_a,
      ProbabilityDistribution::UniformOn(frame, construction.neighbours));
  BR_ASSIGN_OR_RETURN(CompatibilityVerdict vs_uniform,
                      IsCompatible(construction.belief, uniform_a));
  BR_ASSIGN_OR_RETURN(CompatibilityVerdict vs_posterior,
                      IsCompatible(construction.belief, posterior));

  // One masked release drawn from the noise model, for illustration.
  std::uniform_int_distribution<int> pick(0,
                                          static_cast<int>(points.size()) - 1);
  const int source = pick(rng);
  const N3Noise noise = DrawN3Noise(rng);
  BR_ASSIGN_OR_RETURN(Triple released,
                      NoiseMaskN3(points[source], noise.alpha, noise.beta));

  Json records = Json::array();
  for (std::size_t i = 0; i < points.size(); ++i) {
    records.push_back(
        Json{{"label", frame.label(static_cast<int>(i))},
             {"value", TripleJson(points[i])}});
  }
  Json doc{
      {"seed", options.seed},
      {"target", TripleJson(y)},
      {"records", std::move(records)},
      {"sample_release",
       {{"source", frame.label(source)},
        {"alpha", noise.alpha},
        {"beta", noise.beta},
        {"released", TripleJson(released)}}},
      {"posterior", DistributionJson(posterior)},
      {"target_record", frame.label(construction.x0)},
      {"neighbours", frame.LabelsOf(construction.neighbours)},
      {"belief", internal::MassJson(construction.belief)},
      {"pignistic", DistributionJson(pignistic)},
      {"argmax", frame.label(argmax)},
      {"argmax_in_neighbours", construction.neighbours.contains(argmax)},
      {"compatibility",
       {{"uniform_on_neighbours", VerdictJson(vs_uniform, frame)},
        {"posterior", VerdictJson(vs_posterior, frame)}}},
  };

  if (options.reveal_alpha.has_value()) {
    const int alpha = *options.reveal_alpha;
    std::vector<double> weight(points.size(), 0.0);
    double total = 0;
    for (std::size_t i = 0; i < points.size(); ++i) {
      for (int beta = 1; beta <= 3; ++beta) {
        absl::StatusOr<Triple> out = NoiseMaskN3(points[i], alpha, beta);
        if (out.ok() && *out == y) weight[i] += 1.0 / 3.0;
      }
      total += weight[i];
    }
    Json revealed{{"alpha", alpha}};
    if (total > 0) {
      for (double& w : weight) w /= total;
      BR_ASSIGN_OR_RETURN(ProbabilityDistribution conditional,
                          ProbabilityDistribution::Create(frame, weight));
      revealed["conditional_posterior"] = DistributionJson(conditional);
      revealed["argmax_ruled_out"] = conditional[argmax] == 0.0;
    } else {
      // No record produces the target with this alpha.
      revealed["conditional_posterior"] = nullptr;
      revealed["argmax_ruled_out"] = true;
    }
    doc["revealed_alpha"] = std::move(revealed);
  }

  const bool consistent = vs_uniform.compatible() && vs_posterior.compatible();
  return CommandOutput{doc.dump(2) + "\n",
                       consistent ? kExitOk : kExitInconsistent};
}

absl::StatusOr<CommandOutput> RunValidate(const std::filesystem::path& path) {
  BR_ASSIGN_OR_RETURN(SetFunctionFile file, LoadSetFunctionFile(path));
  Json doc{{"source", path.string()},
           {"kind", std::string(SetFunctionKindName(file.kind))},
           {"frame", file.frame.labels()}};
  bool ok = true;
  if (file.kind == SetFunctionKind::kProbability) {
    absl::StatusOr<ProbabilityDistribution> p =
        ProbabilityDistribution::Create(file.frame, file.values);
    ok = p.ok();
    Json violations = Json::array();
    if (!ok) {
      violations.push_back(Json{{"kind", "invalid_probability"},
                                {"message", std::string(p.status().message())}});
    }
    doc["ok"] = ok;
    doc["total_violations"] = ok ? 0 : 1;
    doc["violations"] = std::move(violations);
  } else {
    const ValidationReport report =
        file.kind == SetFunctionKind::kMass
            ? ValidateMass(file.frame, file.values)
            : ValidateBelief(file.frame, file.values,
                             BeliefCheck::kMobiusAndDirect);
    ok = report.ok();
    Json violations = Json::array();
    for (const Violation& v : report.violations) {
      Json subsets = Json::array();
      for (SubsetMask s : v.subsets) subsets.push_back(file.frame.LabelsOf(s));
      violations.push_back(Json{{"kind", std::string(ViolationKindName(v.kind))},
                                {"subsets", std::move(subsets)},
                                {"value", v.value},
                                {"message", v.message}});
    }
    doc["ok"] = ok;
    doc["total_violations"] = report.total_violations;
    doc["cross_checked"] = report.cross_checked;
    doc["violations"] = std::move(violations);
  }
  return CommandOutput{doc.dump(2) + "\n", ok ? kExitOk : kExitRejected};
}

}  // namespace beliefrisk::cli
