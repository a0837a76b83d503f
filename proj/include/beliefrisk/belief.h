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

// Basic probability assignments (masses), belief functions and point-mass
// distributions over a finite frame, together with the conversions between
// them and report-valued validity checks.
//
// All set functions are stored densely: the value for subset A lives at
// index A.bits() of a vector of length 2^|X|.

#ifndef BELIEFRISK_BELIEF_H_
#define BELIEFRISK_BELIEF_H_

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "absl/status/statusor.h"
#include "absl/strings/string_view.h"
#include "beliefrisk/frame.h"

namespace beliefrisk {

class ProbabilityDistribution {
 public:
  // Requires one non-negative value per element summing to 1 (kTolSum).
  static absl::StatusOr<ProbabilityDistribution> Create(
      Frame frame, std::vector<double> p);
  static ProbabilityDistribution Dirac(Frame frame, int element);
  // Uniform over a non-empty subset, zero elsewhere.
  static absl::StatusOr<ProbabilityDistribution> UniformOn(Frame frame,
                                                           SubsetMask subset);

  const Frame& frame() const { return frame_; }
  std::span<const double> values() const { return p_; }
  double operator[](int element) const { return p_[element]; }
  int size() const { return frame_.size(); }

  // P(A) = sum of p(x) over x in A.
  double Of(SubsetMask subset) const;
  // Smallest element attaining the maximum.
  int ArgMax() const;

  friend bool operator==(const ProbabilityDistribution&,
                         const ProbabilityDistribution&) = default;

 private:
  ProbabilityDistribution(Frame frame, std::vector<double> p)
      : frame_(std::move(frame)), p_(std::move(p)) {}

  Frame frame_;
  std::vector<double> p_;
};

class MassAssignment {
 public:
  // Dense constructor: `mass` has 2^|X| entries. Fails unless m(empty) = 0,
  // every value is >= -kTolSum and the total is 1 within kTolSum.
  static absl::StatusOr<MassAssignment> Create(Frame frame,
                                               std::vector<double> mass);
  // Sparse constructor from focal elements; repeated subsets accumulate.
  static absl::StatusOr<MassAssignment> FromFocal(
      Frame frame, std::span<const std::pair<SubsetMask, double>> focal);
  // m(X) = 1: total ignorance.
  static MassAssignment Vacuous(Frame frame);
  // m(subset) = 1 for a non-empty subset.
  static absl::StatusOr<MassAssignment> Categorical(Frame frame,
                                                    SubsetMask subset);
  // Singleton-carried mass reproducing `p`.
  static MassAssignment FromProbability(const ProbabilityDistribution& p);

  const Frame& frame() const { return frame_; }
  std::span<const double> values() const { return mass_; }
  double operator[](SubsetMask subset) const { return mass_[subset.index()]; }

  // Subsets with mass above kTolSum, in increasing bit order.
  std::vector<std::pair<SubsetMask, double>> FocalElements() const;
  // True iff every subset with |A| > 1 has mass below kTolSum.
  bool IsSingletonCarried() const;

  friend bool operator==(const MassAssignment&,
                         const MassAssignment&) = default;

 private:
  MassAssignment(Frame frame, std::vector<double> mass)
      : frame_(std::move(frame)), mass_(std::move(mass)) {}

  Frame frame_;
  std::vector<double> mass_;
};

class BeliefFunction {
 public:
  // Fails with the first violation reported by ValidateBelief.
  static absl::StatusOr<BeliefFunction> Create(Frame frame,
                                               std::vector<double> bel);

  const Frame& frame() const { return frame_; }
  std::span<const double> values() const { return bel_; }
  double operator[](SubsetMask subset) const { return bel_[subset.index()]; }

 private:
  friend BeliefFunction BeliefFromMass(const MassAssignment& m);

  BeliefFunction(Frame frame, std::vector<double> bel)
      : frame_(std::move(frame)), bel_(std::move(bel)) {}

  Frame frame_;
  std::vector<double> bel_;
};

// Bel(A) = sum over B subset of A of m(B).
BeliefFunction BeliefFromMass(const MassAssignment& m);

// Moebius inversion of a belief function.
MassAssignment MassFromBelief(const BeliefFunction& bel);
// Same, for raw values that have not been validated. Fails naming the first
// subset whose Moebius coefficient is negative beyond kTolSum, or the first
// other axiom violation.
absl::StatusOr<MassAssignment> MassFromBelief(const Frame& frame,
                                              std::span<const double> bel);

// P_Bel({x}) = sum over B containing x of m(B) / |B|.
ProbabilityDistribution Pignistic(const MassAssignment& m);

// The singleton masses as a distribution, or nullopt when some |A| > 1
// carries mass of at least kTolSum.
std::optional<ProbabilityDistribution> AsProbability(const MassAssignment& m);

// ---------------------------------------------------------------------------
// Validation

enum class ViolationKind {
  kWrongLength,        // value vector is not 2^|X| long
  kEmptySetMass,       // m(empty) != 0
  kNegativeMass,       // m(A) < 0
  kMassNotNormalized,  // sum of m != 1
  kOutOfRange,         // Bel(A) outside [0,1]
  kBoundary,           // Bel(empty) != 0 or Bel(X) != 1
  kMonotonicity,       // A subset of B but Bel(A) > Bel(B)
  kTotalMonotonicity,  // negative Moebius coefficient
  kInclusionExclusion, // direct k-set inequality fails (k = 2 or 3)
};

absl::string_view ViolationKindName(ViolationKind kind);

struct Violation {
  ViolationKind kind;
  // Witness subsets; for monotonicity (A, B), for inclusion-exclusion the
  // family A_1..A_k, otherwise the single offending subset.
  std::vector<SubsetMask> subsets;
  // Offending value (the mass, belief, or inequality slack).
  double value = 0;
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;
  // Violations found in total; `violations` keeps the first
  // kMaxReportedViolations of them.
  std::size_t total_violations = 0;
  // Set when the direct inclusion-exclusion cross-check ran.
  bool cross_checked = false;

  bool ok() const { return total_violations == 0; }
  const Violation* first() const {
    return violations.empty() ? nullptr : &violations.front();
  }
};

inline constexpr std::size_t kMaxReportedViolations = 64;

// How axiom (iii) is checked for belief functions.
enum class BeliefCheck {
  // Moebius coefficients must be >= -kTolSum.
  kMobius,
  // Moebius check plus the direct inequality for all pairs and triples of
  // subsets. The direct part only runs on frames of at most
  // kMaxDirectCheckFrame elements (cost 8^|X|).
  kMobiusAndDirect,
};

inline constexpr int kMaxDirectCheckFrame = 7;

ValidationReport ValidateMass(const Frame& frame, std::span<const double> mass);
ValidationReport ValidateBelief(const Frame& frame, std::span<const double> bel,
                                BeliefCheck mode = BeliefCheck::kMobius);

}  // namespace beliefrisk

#endif  // BELIEFRISK_BELIEF_H_
