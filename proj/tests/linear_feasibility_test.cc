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

#include "beliefrisk/linear_feasibility.h"

#include <random>
#include <vector>

#include "gtest/gtest.h"

namespace beliefrisk {
namespace {

TEST(SolveFeasibilityTest, EmptyProblemIsFeasible) {
  FeasibilityProblem problem;
  problem.num_variables = 2;
  absl::StatusOr<FeasibilityResult> r = SolveFeasibility(problem);
  ASSERT_TRUE(r.ok());
  EXPECT_TRUE(r->feasible);
  EXPECT_EQ(r->point.size(), 2u);
}

TEST(SolveFeasibilityTest, SimplexWithBounds) {
  // x + y = 1, x >= 0.7, y >= 0.2.
  FeasibilityProblem problem;
  problem.num_variables = 2;
  problem.constraints = {
      {{{0, 1.0}, {1, 1.0}}, Relation::kEqual, 1.0},
      {{{0, 1.0}}, Relation::kGreaterEqual, 0.7},
      {{{1, 1.0}}, Relation::kGreaterEqual, 0.2},
  };
  absl::StatusOr<FeasibilityResult> r = SolveFeasibility(problem);
  ASSERT_TRUE(r.ok());
  ASSERT_TRUE(r->feasible);
  EXPECT_GE(r->point[0], 0.7 - 1e-12);
  EXPECT_GE(r->point[1], 0.2 - 1e-12);
  EXPECT_NEAR(r->point[0] + r->point[1], 1.0, 1e-12);
  EXPECT_LE(MaxViolation(problem, r->point), 1e-9);
}

TEST(SolveFeasibilityTest, DetectsInfeasibility) {
  // x + y = 1, x >= 0.7, y >= 0.4.
  FeasibilityProblem problem;
  problem.num_variables = 2;
  problem.constraints = {
      {{{0, 1.0}, {1, 1.0}}, Relation::kEqual, 1.0},
      {{{0, 1.0}}, Relation::kGreaterEqual, 0.7},
      {{{1, 1.0}}, Relation::kGreaterEqual, 0.4},
  };
  absl::StatusOr<FeasibilityResult> r = SolveFeasibility(problem);
  ASSERT_TRUE(r.ok());
  EXPECT_FALSE(r->feasible);
  EXPECT_NEAR(r->residual, 0.1, 1e-9);
  EXPECT_TRUE(r->point.empty());
}

TEST(SolveFeasibilityTest, NegativeRightHandSides) {
  // -x <= -2 and x <= 3.
  FeasibilityProblem problem;
  problem.num_variables = 1;
  problem.constraints = {
      {{{0, -1.0}}, Relation::kLessEqual, -2.0},
      {{{0, 1.0}}, Relation::kLessEqual, 3.0},
  };
  absl::StatusOr<FeasibilityResult> r = SolveFeasibility(problem);
  ASSERT_TRUE(r.ok());
  ASSERT_TRUE(r->feasible);
  EXPECT_GE(r->point[0], 2.0 - 1e-12);
  EXPECT_LE(r->point[0], 3.0 + 1e-12);

  problem.constraints[1].rhs = 1.0;
  r = SolveFeasibility(problem);
  ASSERT_TRUE(r.ok());
  EXPECT_FALSE(r->feasible);
}

TEST(SolveFeasibilityTest, RejectsMalformedProblems) {
  FeasibilityProblem problem;
  problem.num_variables = 1;
  problem.constraints = {{{{3, 1.0}}, Relation::kEqual, 1.0}};
  EXPECT_FALSE(SolveFeasibility(problem).ok());
  problem.constraints = {{{{0, 1.0}}, Relation::kEqual, 1.0 / 0.0}};
  EXPECT_FALSE(SolveFeasibility(problem).ok());
}

TEST(SolveFeasibilityTest, RandomSystemsWithPlantedSolution) {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> coef(-1.0, 1.0);
  std::uniform_real_distribution<double> value(0.0, 1.0);
  std::uniform_int_distribution<int> relation(0, 2);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 3 + trial % 8;
    std::vector<double> planted(n);
    for (double& v : planted) v = value(rng);
    FeasibilityProblem problem;
    problem.num_variables = n;
    for (int r = 0; r < n + 2; ++r) {
      LinearConstraint row;
      double lhs = 0;
      for (int j = 0; j < n; ++j) {
        const double c = coef(rng);
        row.terms.emplace_back(j, c);
        lhs += c * planted[j];
      }
      row.relation = static_cast<Relation>(relation(rng));
      // Loosen inequalities so the planted point is interior-ish.
      row.rhs = row.relation == Relation::kLessEqual      ? lhs + value(rng)
                : row.relation == Relation::kGreaterEqual ? lhs - value(rng)
                                                          : lhs;
      problem.constraints.push_back(std::move(row));
    }
    absl::StatusOr<FeasibilityResult> r = SolveFeasibility(problem);
    ASSERT_TRUE(r.ok());
    ASSERT_TRUE(r->feasible) << "trial " << trial;
    EXPECT_LE(MaxViolation(problem, r->point), 1e-9);
  }
}

}  // namespace
}  // namespace beliefrisk
