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

// Compatibility of belief functions and of derived (pignistic) probabilities
// with the true re-identification probability.
//
// A belief function Bel is compatible with a probability P when
// P(A) >= Bel(A) for every subset A. A probability P' is compatible with P
// when P' is the pignistic transform of some belief function compatible
// with P.

#ifndef BELIEFRISK_COMPATIBILITY_H_
#define BELIEFRISK_COMPATIBILITY_H_

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "absl/status/statusor.h"
#include "absl/strings/string_view.h"
#include "beliefrisk/belief.h"
#include "beliefrisk/frame.h"

namespace beliefrisk {

// Where a true probability came from: the masking, and the protected row it
// is conditioned on.
struct Provenance {
  std::string masking;
  std::vector<std::string> protected_row;
};

// Ground-truth posterior P(x | y) for one protected record y.
class TrueProbability {
 public:
  TrueProbability(ProbabilityDistribution dist, Provenance provenance)
      : dist_(std::move(dist)), provenance_(std::move(provenance)) {}

  const ProbabilityDistribution& distribution() const { return dist_; }
  const Provenance& provenance() const { return provenance_; }
  const Frame& frame() const { return dist_.frame(); }

 private:
  ProbabilityDistribution dist_;
  Provenance provenance_;
};

struct CompatibilityViolation {
  SubsetMask subset;
  double probability = 0;  // P(subset)
  double belief = 0;       // Bel(subset)
};

struct CompatibilityVerdict {
  // First violating subset in increasing bit order, if any.
  std::optional<CompatibilityViolation> violation;

  bool compatible() const { return !violation.has_value(); }
};

// P(A) >= Bel(A) - kTolSum for all A. InvalidArgument on frame mismatch.
absl::StatusOr<CompatibilityVerdict> IsCompatible(
    const BeliefFunction& bel, const ProbabilityDistribution& p);
absl::StatusOr<CompatibilityVerdict> IsCompatible(
    const MassAssignment& m, const ProbabilityDistribution& p);
absl::StatusOr<CompatibilityVerdict> IsCompatible(const BeliefFunction& bel,
                                                  const TrueProbability& p);
absl::StatusOr<CompatibilityVerdict> IsCompatible(const MassAssignment& m,
                                                  const TrueProbability& p);

// Largest frame for the witness-free feasibility search (2^10 - 1 mass
// variables).
inline constexpr int kMaxFeasibilityFrame = 10;

// Pignistic values of a witness must match p_prime within this.
inline constexpr double kPignisticMatchTolerance = 1e-6;

enum class ProbabilityVerdict {
  kVerified,    // the supplied witness checks out
  kRefuted,     // the supplied witness fails; see `reason`
  kFeasible,    // a witness was found by the feasibility search
  kInfeasible,  // no compatible belief has p_prime as its pignistic
};

absl::string_view ProbabilityVerdictName(ProbabilityVerdict verdict);

struct ProbabilityCompatibility {
  ProbabilityVerdict verdict;
  std::optional<MassAssignment> witness;
  std::string reason;

  bool compatible() const {
    return verdict == ProbabilityVerdict::kVerified ||
           verdict == ProbabilityVerdict::kFeasible;
  }
};

// With a witness, checks the witness. Without one, decides existence of a
// witness by linear feasibility over the masses of all non-empty subsets;
// that search needs frame size <= kMaxFeasibilityFrame (ResourceExhausted
// otherwise).
absl::StatusOr<ProbabilityCompatibility> IsCompatibleProbability(
    const ProbabilityDistribution& p_prime, const ProbabilityDistribution& p,
    const std::optional<MassAssignment>& witness = std::nullopt);

// Elements with probability above kTolSum.
SubsetMask Support(const ProbabilityDistribution& p);

// The element x0 with p(x0) >= 1 - kTolSum, if there is one.
std::optional<int> IsDirac(const ProbabilityDistribution& p);

}  // namespace beliefrisk

#endif  // BELIEFRISK_COMPATIBILITY_H_
