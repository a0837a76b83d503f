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

#include "beliefrisk/belief.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "absl/strings/str_cat.h"
#include "absl/strings/str_format.h"

namespace beliefrisk {

namespace {

// Plain summation; at most 2^24 terms in [0,1].
double Total(std::span<const double> values) {
  return std::accumulate(values.begin(), values.end(), 0.0);
}

class ReportBuilder {
 public:
  explicit ReportBuilder(const Frame& frame) : frame_(frame) {}

  void Add(ViolationKind kind, std::vector<SubsetMask> subsets, double value,
           std::string message) {
    ++report_.total_violations;
    if (report_.violations.size() < kMaxReportedViolations) {
      report_.violations.push_back(
          {kind, std::move(subsets), value, std::move(message)});
    }
  }

  std::string Describe(SubsetMask subset) const {
    return frame_.Describe(subset);
  }

  ValidationReport& report() { return report_; }

 private:
  const Frame& frame_;
  ValidationReport report_;
};

absl::Status ReportToStatus(const Frame& frame,
                            const ValidationReport& report) {
  if (report.ok()) return absl::OkStatus();
  const Violation& first = report.violations.front();
  std::string witnesses;
  for (SubsetMask s : first.subsets) {
    absl::StrAppend(&witnesses, witnesses.empty() ? "" : " ",
                    frame.Describe(s));
  }
  return absl::InvalidArgumentError(
      absl::StrCat(ViolationKindName(first.kind), " at ", witnesses, ": ",
                   first.message));
}

void CheckInclusionExclusion(std::span<const double> bel,
                             ReportBuilder& builder) {
  const std::size_t n = bel.size();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      double slack = bel[a | b] - (bel[a] + bel[b] - bel[a & b]);
      if (slack < -kTolSum) {
        builder.Add(ViolationKind::kInclusionExclusion,
                    {SubsetMask(a), SubsetMask(b)}, slack,
                    absl::StrFormat("Bel(A1 u A2) falls short by %.3g",
                                    -slack));
      }
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      for (std::size_t c = b + 1; c < n; ++c) {
        double rhs = bel[a] + bel[b] + bel[c] - bel[a & b] - bel[a & c] -
                     bel[b & c] + bel[a & b & c];
        double slack = bel[a | b | c] - rhs;
        if (slack < -kTolSum) {
          builder.Add(ViolationKind::kInclusionExclusion,
                      {SubsetMask(a), SubsetMask(b), SubsetMask(c)}, slack,
                      absl::StrFormat("Bel(A1 u A2 u A3) falls short by %.3g",
                                      -slack));
        }
      }
    }
  }
}

}  // namespace

absl::string_view ViolationKindName(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::kWrongLength:
      return "wrong_length";
    case ViolationKind::kEmptySetMass:
      return "empty_set_mass";
    case ViolationKind::kNegativeMass:
      return "negative_mass";
    case ViolationKind::kMassNotNormalized:
      return "mass_not_normalized";
    case ViolationKind::kOutOfRange:
      return "out_of_range";
    case ViolationKind::kBoundary:
      return "boundary";
    case ViolationKind::kMonotonicity:
      return "monotonicity";
    case ViolationKind::kTotalMonotonicity:
      return "total_monotonicity";
    case ViolationKind::kInclusionExclusion:
      return "inclusion_exclusion";
  }
  return "unknown";
}

// ---------------------------------------------------------------------------
// ProbabilityDistribution

absl::StatusOr<ProbabilityDistribution> ProbabilityDistribution::Create(
    Frame frame, std::vector<double> p) {
  if (static_cast<int>(p.size()) != frame.size()) {
    return absl::InvalidArgumentError(
        absl::StrCat("distribution has ", p.size(), " values for a frame of ",
                     frame.size()));
  }
  for (int i = 0; i < frame.size(); ++i) {
    if (!(p[i] >= 0) || !std::isfinite(p[i])) {
      return absl::InvalidArgumentError(absl::StrCat(
          "probability of '", frame.label(i), "' is ", p[i]));
    }
  }
  double total = Total(p);
  if (std::abs(total - 1) > kTolSum) {
    return absl::InvalidArgumentError(
        absl::StrFormat("probabilities sum to %.12g", total));
  }
  return ProbabilityDistribution(std::move(frame), std::move(p));
}

ProbabilityDistribution ProbabilityDistribution::Dirac(Frame frame,
                                                       int element) {
  std::vector<double> p(frame.size(), 0.0);
  p[element] = 1.0;
  return ProbabilityDistribution(std::move(frame), std::move(p));
}

absl::StatusOr<ProbabilityDistribution> ProbabilityDistribution::UniformOn(
    Frame frame, SubsetMask subset) {
  if (subset.empty() || !frame.Owns(subset)) {
    return absl::InvalidArgumentError(
        "uniform distribution needs a non-empty subset of the frame");
  }
  std::vector<double> p(frame.size(), 0.0);
  const double share = 1.0 / subset.size();
  for (int element : subset.Elements()) p[element] = share;
  return ProbabilityDistribution(std::move(frame), std::move(p));
}

double ProbabilityDistribution::Of(SubsetMask subset) const {
  double total = 0;
  for (int element : subset.Elements()) total += p_[element];
  return total;
}

int ProbabilityDistribution::ArgMax() const {
  return static_cast<int>(std::max_element(p_.begin(), p_.end()) - p_.begin());
}

// ---------------------------------------------------------------------------
// MassAssignment

absl::StatusOr<MassAssignment> MassAssignment::Create(
    Frame frame, std::vector<double> mass) {
  if (absl::Status s = ReportToStatus(frame, ValidateMass(frame, mass));
      !s.ok()) {
    return s;
  }
  return MassAssignment(std::move(frame), std::move(mass));
}

absl::StatusOr<MassAssignment> MassAssignment::FromFocal(
    Frame frame, std::span<const std::pair<SubsetMask, double>> focal) {
  std::vector<double> mass(frame.PowersetSize(), 0.0);
  for (const auto& [subset, value] : focal) {
    if (!frame.Owns(subset)) {
      return absl::InvalidArgumentError(absl::StrCat(
          "focal element with bits ", subset.bits(), " is outside the frame"));
    }
    mass[subset.index()] += value;
  }
  return Create(std::move(frame), std::move(mass));
}

MassAssignment MassAssignment::Vacuous(Frame frame) {
  std::vector<double> mass(frame.PowersetSize(), 0.0);
  mass[frame.Full().index()] = 1.0;
  return MassAssignment(std::move(frame), std::move(mass));
}

absl::StatusOr<MassAssignment> MassAssignment::Categorical(Frame frame,
                                                           SubsetMask subset) {
  if (subset.empty() || !frame.Owns(subset)) {
    return absl::InvalidArgumentError(
        "categorical mass needs a non-empty subset of the frame");
  }
  std::vector<double> mass(frame.PowersetSize(), 0.0);
  mass[subset.index()] = 1.0;
  return MassAssignment(std::move(frame), std::move(mass));
}

MassAssignment MassAssignment::FromProbability(
    const ProbabilityDistribution& p) {
  std::vector<double> mass(p.frame().PowersetSize(), 0.0);
  for (int i = 0; i < p.size(); ++i) {
    mass[SubsetMask::Singleton(i).index()] = p[i];
  }
  return MassAssignment(p.frame(), std::move(mass));
}

std::vector<std::pair<SubsetMask, double>> MassAssignment::FocalElements()
    const {
  std::vector<std::pair<SubsetMask, double>> out;
  for (std::size_t a = 1; a < mass_.size(); ++a) {
    if (mass_[a] > kTolSum) out.emplace_back(SubsetMask(a), mass_[a]);
  }
  return out;
}

bool MassAssignment::IsSingletonCarried() const {
  for (std::size_t a = 1; a < mass_.size(); ++a) {
    if (!std::has_single_bit(a) && mass_[a] >= kTolSum) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// BeliefFunction

absl::StatusOr<BeliefFunction> BeliefFunction::Create(Frame frame,
                                                      std::vector<double> bel) {
  if (absl::Status s = ReportToStatus(frame, ValidateBelief(frame, bel));
      !s.ok()) {
    return s;
  }
  return BeliefFunction(std::move(frame), std::move(bel));
}

BeliefFunction BeliefFromMass(const MassAssignment& m) {
  std::vector<double> bel(m.values().begin(), m.values().end());
  ZetaInPlace(bel);
  return BeliefFunction(m.frame(), std::move(bel));
}

namespace {

// Moebius inversion with round-off below kTolSum snapped to zero so the
// result passes MassAssignment's non-negativity check exactly.
std::vector<double> InvertToMass(std::span<const double> bel) {
  std::vector<double> mass(bel.begin(), bel.end());
  MobiusInPlace(mass);
  for (double& v : mass) {
    if (std::abs(v) < kTolSum * 1e-3) v = 0;
  }
  return mass;
}

}  // namespace

MassAssignment MassFromBelief(const BeliefFunction& bel) {
  absl::StatusOr<MassAssignment> m = MassAssignment::Create(
      bel.frame(), InvertToMass(bel.values()));
  // A validated belief function always inverts to a valid mass.
  return *std::move(m);
}

absl::StatusOr<MassAssignment> MassFromBelief(const Frame& frame,
                                              std::span<const double> bel) {
  ValidationReport report = ValidateBelief(frame, bel);
  if (absl::Status s = ReportToStatus(frame, report); !s.ok()) return s;
  return MassAssignment::Create(frame, InvertToMass(bel));
}

ProbabilityDistribution Pignistic(const MassAssignment& m) {
  const Frame& frame = m.frame();
  std::vector<double> p(frame.size(), 0.0);
  std::span<const double> mass = m.values();
  for (std::size_t a = 1; a < mass.size(); ++a) {
    if (mass[a] == 0) continue;
    SubsetMask subset(a);
    const double share = mass[a] / subset.size();
    for (int element : subset.Elements()) p[element] += share;
  }
  // Guard against negative zero drift from snapped inputs.
  for (double& v : p) v = std::max(v, 0.0);
  absl::StatusOr<ProbabilityDistribution> out =
      ProbabilityDistribution::Create(frame, std::move(p));
  return *std::move(out);
}

std::optional<ProbabilityDistribution> AsProbability(const MassAssignment& m) {
  if (!m.IsSingletonCarried()) return std::nullopt;
  std::vector<double> p(m.frame().size());
  for (int i = 0; i < m.frame().size(); ++i) {
    p[i] = std::max(0.0, m[SubsetMask::Singleton(i)]);
  }
  absl::StatusOr<ProbabilityDistribution> out =
      ProbabilityDistribution::Create(m.frame(), std::move(p));
  if (!out.ok()) return std::nullopt;
  return *std::move(out);
}

// ---------------------------------------------------------------------------
// Validation

ValidationReport ValidateMass(const Frame& frame,
                              std::span<const double> mass) {
  ReportBuilder builder(frame);
  if (mass.size() != frame.PowersetSize()) {
    builder.Add(ViolationKind::kWrongLength, {}, mass.size(),
                absl::StrCat("expected ", frame.PowersetSize(), " values"));
    return std::move(builder.report());
  }
  if (std::abs(mass[0]) > kTolSum) {
    builder.Add(ViolationKind::kEmptySetMass, {SubsetMask::Empty()}, mass[0],
                absl::StrFormat("m(empty) = %.12g", mass[0]));
  }
  for (std::size_t a = 1; a < mass.size(); ++a) {
    if (!(mass[a] >= -kTolSum) || !std::isfinite(mass[a])) {
      builder.Add(ViolationKind::kNegativeMass, {SubsetMask(a)}, mass[a],
                  absl::StrFormat("m(%s) = %.12g", builder.Describe(
                                                      SubsetMask(a)),
                                  mass[a]));
    }
  }
  double total = Total(mass);
  if (!(std::abs(total - 1) <= kTolSum)) {
    builder.Add(ViolationKind::kMassNotNormalized, {}, total,
                absl::StrFormat("masses sum to %.12g", total));
  }
  return std::move(builder.report());
}

ValidationReport ValidateBelief(const Frame& frame,
                                std::span<const double> bel,
                                BeliefCheck mode) {
  ReportBuilder builder(frame);
  if (bel.size() != frame.PowersetSize()) {
    builder.Add(ViolationKind::kWrongLength, {}, bel.size(),
                absl::StrCat("expected ", frame.PowersetSize(), " values"));
    return std::move(builder.report());
  }
  const std::size_t full = frame.Full().index();
  for (std::size_t a = 0; a < bel.size(); ++a) {
    if (!(bel[a] >= -kTolSum && bel[a] <= 1 + kTolSum)) {
      builder.Add(ViolationKind::kOutOfRange, {SubsetMask(a)}, bel[a],
                  absl::StrFormat("Bel = %.12g", bel[a]));
    }
  }
  if (std::abs(bel[0]) > kTolSum) {
    builder.Add(ViolationKind::kBoundary, {SubsetMask::Empty()}, bel[0],
                absl::StrFormat("Bel(empty) = %.12g", bel[0]));
  }
  if (std::abs(bel[full] - 1) > kTolSum) {
    builder.Add(ViolationKind::kBoundary, {frame.Full()}, bel[full],
                absl::StrFormat("Bel(X) = %.12g", bel[full]));
  }
  // Monotonicity over covering pairs A < A + {x} implies it for all pairs.
  for (std::size_t a = 0; a < bel.size(); ++a) {
    for (int x = 0; x < frame.size(); ++x) {
      const std::size_t bit = std::size_t{1} << x;
      if (a & bit) continue;
      if (bel[a] > bel[a | bit] + kTolSum) {
        builder.Add(ViolationKind::kMonotonicity,
                    {SubsetMask(a), SubsetMask(a | bit)},
                    bel[a] - bel[a | bit],
                    absl::StrFormat("Bel decreases by %.3g",
                                    bel[a] - bel[a | bit]));
      }
    }
  }
  std::vector<double> mobius(bel.begin(), bel.end());
  MobiusInPlace(mobius);
  for (std::size_t a = 1; a < mobius.size(); ++a) {
    if (mobius[a] < -kTolSum) {
      builder.Add(ViolationKind::kTotalMonotonicity, {SubsetMask(a)},
                  mobius[a],
                  absl::StrFormat("Moebius mass of %s is %.12g",
                                  builder.Describe(SubsetMask(a)), mobius[a]));
    }
  }
  if (mode == BeliefCheck::kMobiusAndDirect &&
      frame.size() <= kMaxDirectCheckFrame) {
    builder.report().cross_checked = true;
    CheckInclusionExclusion(bel, builder);
  }
  return std::move(builder.report());
}

}  // namespace beliefrisk
