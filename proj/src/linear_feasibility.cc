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

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <vector>

#include "absl/strings/str_cat.h"

namespace beliefrisk {

namespace {

// Row-major tableau with the objective stored as the last row and the
// right-hand side as the last column.
class Tableau {
 public:
  Tableau(int rows, int cols)
      : rows_(rows), cols_(cols), data_((rows + 1) * (cols + 1), 0.0) {}

  double& at(int r, int c) { return data_[r * (cols_ + 1) + c]; }
  double at(int r, int c) const { return data_[r * (cols_ + 1) + c]; }
  double& rhs(int r) { return at(r, cols_); }
  double& cost(int c) { return at(rows_, c); }
  double objective() const { return at(rows_, cols_); }

  void Pivot(int pr, int pc) {
    double* prow = &data_[pr * (cols_ + 1)];
    const double inv = 1.0 / prow[pc];
    for (int c = 0; c <= cols_; ++c) prow[c] *= inv;
    prow[pc] = 1.0;
    for (int r = 0; r <= rows_; ++r) {
      if (r == pr) continue;
      double* row = &data_[r * (cols_ + 1)];
      const double factor = row[pc];
      if (factor == 0) continue;
      for (int c = 0; c <= cols_; ++c) row[c] -= factor * prow[c];
      row[pc] = 0.0;
    }
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

 private:
  int rows_;
  int cols_;
  std::vector<double> data_;
};

}  // namespace

double MaxViolation(const FeasibilityProblem& problem,
                    const std::vector<double>& point) {
  double worst = 0;
  for (double v : point) worst = std::max(worst, -v);
  for (const LinearConstraint& row : problem.constraints) {
    double lhs = 0;
    for (const auto& [var, coef] : row.terms) lhs += coef * point[var];
    switch (row.relation) {
      case Relation::kLessEqual:
        worst = std::max(worst, lhs - row.rhs);
        break;
      case Relation::kGreaterEqual:
        worst = std::max(worst, row.rhs - lhs);
        break;
      case Relation::kEqual:
        worst = std::max(worst, std::abs(lhs - row.rhs));
        break;
    }
  }
  return worst;
}

absl::StatusOr<FeasibilityResult> SolveFeasibility(
    const FeasibilityProblem& problem, const FeasibilityOptions& options) {
  const int n = problem.num_variables;
  const int m = static_cast<int>(problem.constraints.size());
  if (n < 0) return absl::InvalidArgumentError("negative variable count");
  for (const LinearConstraint& row : problem.constraints) {
    for (const auto& [var, coef] : row.terms) {
      if (var < 0 || var >= n) {
        return absl::InvalidArgumentError(
            absl::StrCat("constraint refers to variable ", var, " of ", n));
      }
      if (!std::isfinite(coef)) {
        return absl::InvalidArgumentError("non-finite coefficient");
      }
    }
    if (!std::isfinite(row.rhs)) {
      return absl::InvalidArgumentError("non-finite right-hand side");
    }
  }

  // Column layout: structural | slack/surplus | artificial.
  int num_slack = 0;
  int num_artificial = 0;
  for (const LinearConstraint& row : problem.constraints) {
    const bool flip = row.rhs < 0;
    Relation rel = row.relation;
    if (flip && rel != Relation::kEqual) {
      rel = rel == Relation::kLessEqual ? Relation::kGreaterEqual
                                        : Relation::kLessEqual;
    }
    if (rel != Relation::kEqual) ++num_slack;
    if (rel != Relation::kLessEqual) ++num_artificial;
  }
  const int first_slack = n;
  const int first_artificial = n + num_slack;
  const int cols = n + num_slack + num_artificial;

  Tableau t(m, cols);
  std::vector<int> basis(m);
  int next_slack = first_slack;
  int next_artificial = first_artificial;
  for (int r = 0; r < m; ++r) {
    const LinearConstraint& row = problem.constraints[r];
    const double sign = row.rhs < 0 ? -1.0 : 1.0;
    Relation rel = row.relation;
    if (sign < 0 && rel != Relation::kEqual) {
      rel = rel == Relation::kLessEqual ? Relation::kGreaterEqual
                                        : Relation::kLessEqual;
    }
    for (const auto& [var, coef] : row.terms) t.at(r, var) += sign * coef;
    t.rhs(r) = sign * row.rhs;
    if (rel == Relation::kLessEqual) {
      t.at(r, next_slack) = 1.0;
      basis[r] = next_slack++;
    } else {
      if (rel == Relation::kGreaterEqual) t.at(r, next_slack++) = -1.0;
      t.at(r, next_artificial) = 1.0;
      basis[r] = next_artificial++;
    }
  }

  // Phase-one objective: minimize the sum of artificials, expressed in
  // terms of the non-basic columns.
  for (int r = 0; r < m; ++r) {
    if (basis[r] < first_artificial) continue;
    for (int c = 0; c <= cols; ++c) {
      if (c >= first_artificial && c < cols) continue;
      t.at(m, c) -= t.at(r, c);
    }
  }

  FeasibilityResult result;
  int degenerate_streak = 0;
  while (true) {
    // Dantzig pricing; Bland's rule after a run of degenerate pivots.
    const bool bland = degenerate_streak > 50;
    int pc = -1;
    double best = -options.pivot_tolerance;
    for (int c = 0; c < cols; ++c) {
      const double rc = t.cost(c);
      if (rc < best) {
        pc = c;
        if (bland) break;
        best = rc;
      }
    }
    if (pc < 0) break;

    int pr = -1;
    double best_ratio = std::numeric_limits<double>::infinity();
    for (int r = 0; r < m; ++r) {
      const double a = t.at(r, pc);
      if (a <= options.pivot_tolerance) continue;
      const double ratio = t.rhs(r) / a;
      if (ratio < best_ratio - 1e-15 ||
          (ratio <= best_ratio + 1e-15 && pr >= 0 && basis[r] < basis[pr])) {
        best_ratio = ratio;
        pr = r;
      }
    }
    // Phase one is bounded below by zero, so an entering column always has
    // a blocking row; treat the contrary as numerical breakdown.
    if (pr < 0) {
      t.cost(pc) = 0;
      continue;
    }
    degenerate_streak = best_ratio <= 1e-15 ? degenerate_streak + 1 : 0;
    t.Pivot(pr, pc);
    basis[pr] = pc;
    if (++result.pivots > options.max_pivots) {
      return absl::ResourceExhaustedError(
          absl::StrCat("simplex exceeded ", options.max_pivots, " pivots"));
    }
  }

  // The stored objective is minus the artificial sum.
  const double artificial_sum = -t.objective();
  std::vector<double> point(n, 0.0);
  for (int r = 0; r < m; ++r) {
    if (basis[r] < n) point[basis[r]] = std::max(0.0, t.rhs(r));
  }
  result.point = std::move(point);
  result.residual = MaxViolation(problem, result.point);
  result.feasible = artificial_sum <= options.feasibility_tolerance &&
                    result.residual <= options.feasibility_tolerance;
  if (!result.feasible) {
    result.residual = std::max(result.residual, artificial_sum);
    result.point.clear();
  }
  return result;
}

}  // namespace beliefrisk
