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

// Dense phase-one simplex deciding whether {x >= 0 : rows hold} is empty.
// Sized for the small systems produced by compatibility checks (a few
// thousand rows and columns at most).

#ifndef BELIEFRISK_LINEAR_FEASIBILITY_H_
#define BELIEFRISK_LINEAR_FEASIBILITY_H_

#include <utility>
#include <vector>

#include "absl/status/statusor.h"

namespace beliefrisk {

enum class Relation { kLessEqual, kEqual, kGreaterEqual };

struct LinearConstraint {
  // Sparse (variable, coefficient) pairs.
  std::vector<std::pair<int, double>> terms;
  Relation relation = Relation::kLessEqual;
  double rhs = 0;
};

// All variables are implicitly non-negative.
struct FeasibilityProblem {
  int num_variables = 0;
  std::vector<LinearConstraint> constraints;
};

struct FeasibilityOptions {
  // A phase-one optimum above this is reported infeasible.
  double feasibility_tolerance = 1e-9;
  double pivot_tolerance = 1e-12;
  int max_pivots = 200000;
};

struct FeasibilityResult {
  bool feasible = false;
  // A feasible point when `feasible`.
  std::vector<double> point;
  // Largest constraint violation of `point`, or the phase-one optimum when
  // infeasible.
  double residual = 0;
  int pivots = 0;
};

// Fails with InvalidArgument on malformed input and ResourceExhausted when
// the pivot budget runs out.
absl::StatusOr<FeasibilityResult> SolveFeasibility(
    const FeasibilityProblem& problem, const FeasibilityOptions& options = {});

// Largest violation of `problem`'s constraints (and of x >= 0) at `point`.
double MaxViolation(const FeasibilityProblem& problem,
                    const std::vector<double>& point);

}  // namespace beliefrisk

#endif  // BELIEFRISK_LINEAR_FEASIBILITY_H_
