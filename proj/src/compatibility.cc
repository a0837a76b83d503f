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

#include "beliefrisk/compatibility.h"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "absl/strings/str_cat.h"
#include "absl/strings/str_format.h"
#include "beliefrisk/linear_feasibility.h"

namespace beliefrisk {

namespace {

absl::Status CheckSameFrame(const Frame& a, const Frame& b) {
  if (a == b) return absl::OkStatus();
  return absl::InvalidArgumentError(
      absl::StrCat("frame mismatch: ", a.size(), " vs ", b.size(),
                   " elements or different labels"));
}

// Dense P(A) for every subset A.
std::vector<double> SubsetProbabilities(const ProbabilityDistribution& p) {
  std::vector<double> out(p.frame().PowersetSize(), 0.0);
  for (int i = 0; i < p.size(); ++i) {
    out[SubsetMask::Singleton(i).index()] = p[i];
  }
  ZetaInPlace(out);
  return out;
}

CompatibilityVerdict CompareDense(std::span<const double> prob,
                                  std::span<const double> bel) {
  CompatibilityVerdict verdict;
  for (std::size_t a = 0; a < prob.size(); ++a) {
    if (prob[a] < bel[a] - kTolSum) {
      verdict.violation =
          CompatibilityViolation{SubsetMask(a), prob[a], bel[a]};
      break;
    }
  }
  return verdict;
}

}  // namespace

absl::StatusOr<CompatibilityVerdict> IsCompatible(
    const BeliefFunction& bel, const ProbabilityDistribution& p) {
  if (absl::Status s = CheckSameFrame(bel.frame(), p.frame()); !s.ok()) {
    return s;
  }
  return CompareDense(SubsetProbabilities(p), bel.values());
}

absl::StatusOr<CompatibilityVerdict> IsCompatible(
    const MassAssignment& m, const ProbabilityDistribution& p) {
  if (absl::Status s = CheckSameFrame(m.frame(), p.frame()); !s.ok()) {
    return s;
  }
  // Zeta is linear, so one sweep over (p - m) yields P(A) - Bel(A).
  std::vector<double> slack(m.values().begin(), m.values().end());
  for (double& v : slack) v = -v;
  for (int i = 0; i < p.size(); ++i) {
    slack[SubsetMask::Singleton(i).index()] += p[i];
  }
  ZetaInPlace(slack);
  CompatibilityVerdict verdict;
  for (std::size_t a = 0; a < slack.size(); ++a) {
    if (slack[a] < -kTolSum) {
      const SubsetMask subset(a);
      double bel = 0;
      for (std::size_t b = a;; b = (b - 1) & a) {
        bel += m.values()[b];
        if (b == 0) break;
      }
      verdict.violation = CompatibilityViolation{subset, p.Of(subset), bel};
      break;
    }
  }
  return verdict;
}

absl::StatusOr<CompatibilityVerdict> IsCompatible(const BeliefFunction& bel,
                                                  const TrueProbability& p) {
  return IsCompatible(bel, p.distribution());
}

absl::StatusOr<CompatibilityVerdict> IsCompatible(const MassAssignment& m,
                                                  const TrueProbability& p) {
  return IsCompatible(m, p.distribution());
}

absl::string_view ProbabilityVerdictName(ProbabilityVerdict verdict) {
  switch (verdict) {
    case ProbabilityVerdict::kVerified:
      return "verified";
    case ProbabilityVerdict::kRefuted:
      return "refuted";
    case ProbabilityVerdict::kFeasible:
      return "feasible";
    case ProbabilityVerdict::kInfeasible:
      return "infeasible";
  }
  return "unknown";
}

namespace {

// Checks a candidate witness; returns the failing condition or "".
absl::StatusOr<std::string> WitnessFailure(
    const MassAssignment& witness, const ProbabilityDistribution& p_prime,
    const ProbabilityDistribution& p) {
  absl::StatusOr<CompatibilityVerdict> compatible = IsCompatible(witness, p);
  if (!compatible.ok()) return compatible.status();
  if (!compatible->compatible()) {
    const CompatibilityViolation& v = *compatible->violation;
    return absl::StrFormat(
        "witness belief is not compatible: P(%s) = %.9g < Bel = %.9g",
        p.frame().Describe(v.subset), v.probability, v.belief);
  }
  ProbabilityDistribution pignistic = Pignistic(witness);
  for (int i = 0; i < p.size(); ++i) {
    if (std::abs(pignistic[i] - p_prime[i]) > kPignisticMatchTolerance) {
      return absl::StrFormat(
          "pignistic of witness differs at '%s': %.9g vs %.9g",
          p.frame().label(i), pignistic[i], p_prime[i]);
    }
  }
  return std::string();
}

// Variables: m(A) for every non-empty A, variable index A.bits() - 1.
FeasibilityProblem PignisticFeasibility(const ProbabilityDistribution& p_prime,
                                        const ProbabilityDistribution& p) {
  const Frame& frame = p.frame();
  const std::size_t subsets = frame.PowersetSize();
  const std::vector<double> prob = SubsetProbabilities(p);

  FeasibilityProblem problem;
  problem.num_variables = static_cast<int>(subsets - 1);

  LinearConstraint total{{}, Relation::kEqual, 1.0};
  for (std::size_t a = 1; a < subsets; ++a) {
    total.terms.emplace_back(static_cast<int>(a - 1), 1.0);
  }
  problem.constraints.push_back(std::move(total));

  for (int x = 0; x < frame.size(); ++x) {
    LinearConstraint row{{}, Relation::kEqual, p_prime[x]};
    for (std::size_t a = 1; a < subsets; ++a) {
      SubsetMask subset(a);
      if (subset.contains(x)) {
        row.terms.emplace_back(static_cast<int>(a - 1), 1.0 / subset.size());
      }
    }
    problem.constraints.push_back(std::move(row));
  }

  // Bel(A) <= P(A); the A = X row duplicates the total.
  const std::size_t full = frame.Full().index();
  for (std::size_t a = 1; a < subsets; ++a) {
    if (a == full) continue;
    LinearConstraint row{{}, Relation::kLessEqual, prob[a]};
    for (std::size_t b = a; b != 0; b = (b - 1) & a) {
      row.terms.emplace_back(static_cast<int>(b - 1), 1.0);
    }
    problem.constraints.push_back(std::move(row));
  }
  return problem;
}

}  // namespace

absl::StatusOr<ProbabilityCompatibility> IsCompatibleProbability(
    const ProbabilityDistribution& p_prime, const ProbabilityDistribution& p,
    const std::optional<MassAssignment>& witness) {
  if (absl::Status s = CheckSameFrame(p_prime.frame(), p.frame()); !s.ok()) {
    return s;
  }
  if (witness.has_value()) {
    if (absl::Status s = CheckSameFrame(witness->frame(), p.frame());
        !s.ok()) {
      return s;
    }
    absl::StatusOr<std::string> failure = WitnessFailure(*witness, p_prime, p);
    if (!failure.ok()) return failure.status();
    if (failure->empty()) {
      return ProbabilityCompatibility{ProbabilityVerdict::kVerified, witness,
                                      ""};
    }
    return ProbabilityCompatibility{ProbabilityVerdict::kRefuted, witness,
                                    *std::move(failure)};
  }

  if (p.size() > kMaxFeasibilityFrame) {
    return absl::ResourceExhaustedError(
        absl::StrCat("witness-free search supports frames of at most ",
                     kMaxFeasibilityFrame, " elements, got ", p.size()));
  }
  absl::StatusOr<FeasibilityResult> solved =
      SolveFeasibility(PignisticFeasibility(p_prime, p));
  if (!solved.ok()) return solved.status();
  if (!solved->feasible) {
    return ProbabilityCompatibility{
        ProbabilityVerdict::kInfeasible, std::nullopt,
        absl::StrFormat("no compatible belief has this pignistic "
                        "(phase-one residual %.3g)",
                        solved->residual)};
  }

  std::vector<double> mass(p.frame().PowersetSize(), 0.0);
  for (std::size_t a = 1; a < mass.size(); ++a) {
    mass[a] = solved->point[a - 1];
  }
  absl::StatusOr<MassAssignment> found =
      MassAssignment::Create(p.frame(), std::move(mass));
  if (!found.ok()) {
    return absl::InternalError(absl::StrCat(
        "feasible point is not a valid mass: ", found.status().message()));
  }
  absl::StatusOr<std::string> failure = WitnessFailure(*found, p_prime, p);
  if (!failure.ok()) return failure.status();
  if (!failure->empty()) {
    return absl::InternalError(
        absl::StrCat("feasible point fails verification: ", *failure));
  }
  return ProbabilityCompatibility{ProbabilityVerdict::kFeasible,
                                  *std::move(found), ""};
}

SubsetMask Support(const ProbabilityDistribution& p) {
  SubsetMask out;
  for (int i = 0; i < p.size(); ++i) {
    if (p[i] > kTolSum) out = out.With(i);
  }
  return out;
}

std::optional<int> IsDirac(const ProbabilityDistribution& p) {
  for (int i = 0; i < p.size(); ++i) {
    if (p[i] >= 1 - kTolSum) return i;
  }
  return std::nullopt;
}

}  // namespace beliefrisk
