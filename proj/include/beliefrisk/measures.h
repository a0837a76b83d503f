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

#ifndef BELIEFRISK_MEASURES_H_
#define BELIEFRISK_MEASURES_H_

#include "absl/status/statusor.h"
#include "beliefrisk/belief.h"
#include "beliefrisk/frame.h"

namespace beliefrisk {

// Shannon entropy of a distribution in nats, with 0 ln 0 = 0.
double EntropyNats(const ProbabilityDistribution& p);

// Entropy of the pignistic distribution of `m`, in nats.
double PignisticEntropy(const MassAssignment& m);

// Dubois-Prade nonspecificity: sum over A of m(A) log2 |A|, in bits.
// Zero exactly for singleton-carried masses; log2 |X| for the vacuous mass.
double Nonspecificity(const MassAssignment& m);

// Moves `delta` of mass from `from` to its strict, non-empty subset `to`:
// m'(to) = m(to) + delta, m'(from) = m(from) - delta. Requires
// 0 <= delta <= m(from).
absl::StatusOr<MassAssignment> TransferMass(const MassAssignment& m,
                                            SubsetMask to, SubsetMask from,
                                            double delta);

// True when `a` majorizes `b`: with both sorted in decreasing order, every
// prefix sum of `a` is >= the matching prefix sum of `b` (within kTolSum).
bool Majorizes(const ProbabilityDistribution& a,
               const ProbabilityDistribution& b);

}  // namespace beliefrisk

#endif  // BELIEFRISK_MEASURES_H_
