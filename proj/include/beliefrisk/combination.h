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

// Combination of belief-valued evidence about which record a protected
// record came from.
//
// A combination is acceptable with respect to a true probability P when its
// result is compatible with P and is no less specific than either input:
// N(result) <= min(N(m1), N(m2)). CombineChecked enforces both clauses at
// run time; it does not trust the rule. Failures carry a
// CombinationFailure payload retrievable with GetCombinationFailure.

#ifndef BELIEFRISK_COMBINATION_H_
#define BELIEFRISK_COMBINATION_H_

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "absl/strings/string_view.h"
#include "beliefrisk/belief.h"
#include "beliefrisk/compatibility.h"

namespace beliefrisk {

// A binary rule. The output is a raw dense set function over the common
// frame; it may put mass on the empty set (conflict), which CombineChecked
// rejects.
struct CombinationRule {
  std::string name;
  std::function<std::vector<double>(const MassAssignment&,
                                    const MassAssignment&)>
      apply;
};

// Unnormalized conjunctive rule: m(C) = sum over A n B = C of m1(A) m2(B).
// Evaluated as a pointwise product of commonality functions.
CombinationRule ConjunctiveRule();

// Dempster's rule: the conjunctive result with the empty-set mass removed
// and the rest renormalized. Conflict is hidden, so acceptability may fail
// on the compatibility clause instead.
CombinationRule DempsterNormalizedRule();

// Looks up "conjunctive" or "dempster_normalized".
absl::StatusOr<CombinationRule> RuleByName(absl::string_view name);

enum class AcceptabilityClause {
  kInputIncompatible,       // an input is not compatible with P
  kFrameMismatch,           // inputs or P live on different frames
  kConflict,                // rule put mass on the empty set
  kInvalidOutput,           // rule output is not a valid mass
  kIncompatibleOutput,      // result not compatible with P
  kNonspecificityIncrease,  // N(result) > min(N(m1), N(m2))
};

absl::string_view AcceptabilityClauseName(AcceptabilityClause clause);

struct CombinationFailure {
  AcceptabilityClause clause;
  // Fold step (1-based) at which the failure happened; 1 for a single
  // CombineChecked call.
  int step = 1;
  std::string detail;
};

// Extracts the structured failure attached to a status returned by
// CombineChecked or CombineMany.
std::optional<CombinationFailure> GetCombinationFailure(
    const absl::Status& status);

// Clauses are checked in this order: frames, conflict, input compatibility,
// output validity, output compatibility, nonspecificity. Conflict comes
// before the inputs so that contradictory evidence is reported as such.
absl::StatusOr<MassAssignment> CombineChecked(const CombinationRule& rule,
                                              const MassAssignment& m1,
                                              const MassAssignment& m2,
                                              const ProbabilityDistribution& p);

struct CombinedEvidence {
  MassAssignment result;
  // Nonspecificity of the first input followed by that of each fold result.
  std::vector<double> nonspecificity_trace;
};

// Left fold: C(C(...C(m1, m2)...), mr). Requires at least two inputs.
absl::StatusOr<CombinedEvidence> CombineMany(
    const CombinationRule& rule, std::span<const MassAssignment> masses,
    const ProbabilityDistribution& p);

}  // namespace beliefrisk

#endif  // BELIEFRISK_COMBINATION_H_
