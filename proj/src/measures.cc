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

#include "beliefrisk/measures.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <vector>

#include "absl/strings/str_format.h"

namespace beliefrisk {

double EntropyNats(const ProbabilityDistribution& p) {
  double h = 0;
  for (double v : p.values()) {
    if (v > 0) h -= v * std::log(v);
  }
  return h;
}

double PignisticEntropy(const MassAssignment& m) {
  return EntropyNats(Pignistic(m));
}

double Nonspecificity(const MassAssignment& m) {
  std::span<const double> mass = m.values();
  double n = 0;
  for (std::size_t a = 1; a < mass.size(); ++a) {
    if (mass[a] != 0) n += mass[a] * std::log2(SubsetMask(a).size());
  }
  return n;
}

absl::StatusOr<MassAssignment> TransferMass(const MassAssignment& m,
                                            SubsetMask to, SubsetMask from,
                                            double delta) {
  const Frame& frame = m.frame();
  if (!frame.Owns(to) || !frame.Owns(from)) {
    return absl::InvalidArgumentError("transfer sets are outside the frame");
  }
  if (to.empty()) {
    return absl::InvalidArgumentError(
        "cannot transfer mass to the empty set");
  }
  if (!to.IsSubsetOf(from) || to == from) {
    return absl::InvalidArgumentError(absl::StrFormat(
        "%s is not a strict subset of %s", frame.Describe(to),
        frame.Describe(from)));
  }
  if (!(delta >= 0) || delta > m[from] + kTolSum) {
    return absl::InvalidArgumentError(absl::StrFormat(
        "delta %.12g outside [0, m(%s) = %.12g]", delta, frame.Describe(from),
        m[from]));
  }
  std::vector<double> mass(m.values().begin(), m.values().end());
  mass[to.index()] += delta;
  mass[from.index()] = std::max(0.0, mass[from.index()] - delta);
  return MassAssignment::Create(frame, std::move(mass));
}

bool Majorizes(const ProbabilityDistribution& a,
               const ProbabilityDistribution& b) {
  std::vector<double> sa(a.values().begin(), a.values().end());
  std::vector<double> sb(b.values().begin(), b.values().end());
  if (sa.size() != sb.size()) return false;
  std::sort(sa.begin(), sa.end(), std::greater<>());
  std::sort(sb.begin(), sb.end(), std::greater<>());
  double prefix_a = 0;
  double prefix_b = 0;
  for (std::size_t i = 0; i < sa.size(); ++i) {
    prefix_a += sa[i];
    prefix_b += sb[i];
    if (prefix_a < prefix_b - kTolSum) return false;
  }
  return true;
}

}  // namespace beliefrisk
