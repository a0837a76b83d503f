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

#include "beliefrisk/combination.h"

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "absl/strings/cord.h"
#include "absl/strings/numbers.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_format.h"
#include "absl/strings/str_split.h"
#include "beliefrisk/measures.h"

namespace beliefrisk {

namespace {

constexpr char kFailureTypeUrl[] = "type.beliefrisk/CombinationFailure";

absl::Status FailureStatus(AcceptabilityClause clause, int step,
                           std::string detail) {
  absl::Status status = absl::FailedPreconditionError(
      absl::StrCat("step ", step, ": ", AcceptabilityClauseName(clause), ": ",
                   detail));
  status.SetPayload(kFailureTypeUrl,
                    absl::Cord(absl::StrCat(static_cast<int>(clause), ";",
                                            step, ";", detail)));
  return status;
}

absl::Status Restep(const absl::Status& status, int step) {
  std::optional<CombinationFailure> failure = GetCombinationFailure(status);
  if (!failure.has_value()) return status;
  return FailureStatus(failure->clause, step, failure->detail);
}

std::vector<double> Conjunctive(const MassAssignment& m1,
                                const MassAssignment& m2) {
  std::vector<double> q1(m1.values().begin(), m1.values().end());
  std::vector<double> q2(m2.values().begin(), m2.values().end());
  SupersetZetaInPlace(q1);
  SupersetZetaInPlace(q2);
  for (std::size_t a = 0; a < q1.size(); ++a) q1[a] *= q2[a];
  SupersetMobiusInPlace(q1);
  // Round-off from the transforms can leave tiny negatives.
  for (double& v : q1) {
    if (v < 0 && v > -kTolSum * 1e-3) v = 0;
  }
  return q1;
}

std::string CompatibilityDetail(const Frame& frame,
                                const CompatibilityViolation& v) {
  return absl::StrFormat("P(%s) = %.9g < Bel = %.9g", frame.Describe(v.subset),
                         v.probability, v.belief);
}

}  // namespace

CombinationRule ConjunctiveRule() { return {"conjunctive", Conjunctive}; }

CombinationRule DempsterNormalizedRule() {
  return {"dempster_normalized",
          [](const MassAssignment& m1, const MassAssignment& m2) {
            std::vector<double> out = Conjunctive(m1, m2);
            const double kept = 1.0 - out[0];
            out[0] = 0;
            // Total conflict: leave the empty-set mass for the caller to
            // reject.
            if (kept <= kTolSum) {
              out.assign(out.size(), 0.0);
              out[0] = 1.0;
              return out;
            }
            for (double& v : out) v /= kept;
            return out;
          }};
}

absl::StatusOr<CombinationRule> RuleByName(absl::string_view name) {
  if (name == "conjunctive") return ConjunctiveRule();
  if (name == "dempster_normalized") return DempsterNormalizedRule();
  return absl::InvalidArgumentError(
      absl::StrCat("unknown combination rule '", name,
                   "'; expected conjunctive or dempster_normalized"));
}

absl::string_view AcceptabilityClauseName(AcceptabilityClause clause) {
  switch (clause) {
    case AcceptabilityClause::kInputIncompatible:
      return "input_incompatible";
    case AcceptabilityClause::kFrameMismatch:
      return "frame_mismatch";
    case AcceptabilityClause::kConflict:
      return "conflict";
    case AcceptabilityClause::kInvalidOutput:
      return "invalid_output";
    case AcceptabilityClause::kIncompatibleOutput:
      return "incompatible_output";
    case AcceptabilityClause::kNonspecificityIncrease:
      return "nonspecificity_increase";
  }
  return "unknown";
}

std::optional<CombinationFailure> GetCombinationFailure(
    const absl::Status& status) {
  auto payload = status.GetPayload(kFailureTypeUrl);
  if (!payload.has_value()) return std::nullopt;
  std::vector<std::string> parts =
      absl::StrSplit(std::string(*payload), absl::MaxSplits(';', 2));
  int clause = 0;
  int step = 0;
  if (parts.size() != 3 || !absl::SimpleAtoi(parts[0], &clause) ||
      !absl::SimpleAtoi(parts[1], &step)) {
    return std::nullopt;
  }
  return CombinationFailure{static_cast<AcceptabilityClause>(clause), step,
                            parts[2]};
}

absl::StatusOr<MassAssignment> CombineChecked(
    const CombinationRule& rule, const MassAssignment& m1,
    const MassAssignment& m2, const ProbabilityDistribution& p) {
  const Frame& frame = p.frame();
  if (m1.frame() != frame || m2.frame() != frame) {
    return FailureStatus(AcceptabilityClause::kFrameMismatch, 1,
                         "inputs and true probability use different frames");
  }
  std::vector<double> raw = rule.apply(m1, m2);
  if (raw.size() != frame.PowersetSize()) {
    return FailureStatus(AcceptabilityClause::kInvalidOutput, 1,
                         absl::StrCat("rule '", rule.name, "' returned ",
                                      raw.size(), " values"));
  }
  if (raw[0] > kTolSum) {
    return FailureStatus(
        AcceptabilityClause::kConflict, 1,
        absl::StrFormat("rule '%s' assigns mass %.9g to the empty set",
                        rule.name, raw[0]));
  }
  raw[0] = 0;
  int index = 1;
  for (const MassAssignment* input : {&m1, &m2}) {
    absl::StatusOr<CompatibilityVerdict> v = IsCompatible(*input, p);
    if (!v.ok()) return v.status();
    if (!v->compatible()) {
      return FailureStatus(
          AcceptabilityClause::kInputIncompatible, 1,
          absl::StrCat("input ", index, ": ",
                       CompatibilityDetail(frame, *v->violation)));
    }
    ++index;
  }

  absl::StatusOr<MassAssignment> combined =
      MassAssignment::Create(frame, std::move(raw));
  if (!combined.ok()) {
    return FailureStatus(AcceptabilityClause::kInvalidOutput, 1,
                         std::string(combined.status().message()));
  }

  absl::StatusOr<CompatibilityVerdict> v = IsCompatible(*combined, p);
  if (!v.ok()) return v.status();
  if (!v->compatible()) {
    return FailureStatus(AcceptabilityClause::kIncompatibleOutput, 1,
                         CompatibilityDetail(frame, *v->violation));
  }
  const double n_out = Nonspecificity(*combined);
  const double n_min = std::min(Nonspecificity(m1), Nonspecificity(m2));
  if (n_out > n_min + kTolSum) {
    return FailureStatus(
        AcceptabilityClause::kNonspecificityIncrease, 1,
        absl::StrFormat("N(result) = %.9g exceeds min input N = %.9g", n_out,
                        n_min));
  }
  return combined;
}

absl::StatusOr<CombinedEvidence> CombineMany(
    const CombinationRule& rule, std::span<const MassAssignment> masses,
    const ProbabilityDistribution& p) {
  if (masses.size() < 2) {
    return absl::InvalidArgumentError(
        absl::StrCat("combination needs at least two masses, got ",
                     masses.size()));
  }
  CombinedEvidence out{masses[0], {Nonspecificity(masses[0])}};
  for (std::size_t i = 1; i < masses.size(); ++i) {
    absl::StatusOr<MassAssignment> next =
        CombineChecked(rule, out.result, masses[i], p);
    if (!next.ok()) return Restep(next.status(), static_cast<int>(i));
    out.result = *std::move(next);
    out.nonspecificity_trace.push_back(Nonspecificity(out.result));
  }
  return out;
}

}  // namespace beliefrisk
