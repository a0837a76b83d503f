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

#include <utility>
#include <vector>

#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "support/test_support.h"

namespace beliefrisk {
namespace {

using ::testing::HasSubstr;
using testing::IndexedFrame;

ProbabilityDistribution Uniform(const Frame& f, SubsetMask s) {
  return *ProbabilityDistribution::UniformOn(f, s);
}

TEST(IsCompatibleTest, VacuousIsCompatibleWithAnything) {
  testing::Rng rng(1);
  Frame f = IndexedFrame(5);
  for (int trial = 0; trial < 20; ++trial) {
    ProbabilityDistribution p = testing::RandomDistribution(f, rng);
    absl::StatusOr<CompatibilityVerdict> v =
        IsCompatible(MassAssignment::Vacuous(f), p);
    ASSERT_TRUE(v.ok());
    EXPECT_TRUE(v->compatible());
  }
}

TEST(IsCompatibleTest, CandidateSetBeliefIsCompatible) {
  Frame f = IndexedFrame(6);
  const SubsetMask c(0b000111);
  TrueProbability truth(Uniform(f, c), Provenance{"test", {"[15,19]"}});
  absl::StatusOr<CompatibilityVerdict> v =
      IsCompatible(*MassAssignment::Categorical(f, c), truth);
  ASSERT_TRUE(v.ok());
  EXPECT_TRUE(v->compatible());
  EXPECT_EQ(truth.provenance().masking, "test");
}

TEST(IsCompatibleTest, MissingCandidateIsIncompatible) {
  Frame f = IndexedFrame(6);
  const SubsetMask c(0b000111);
  const SubsetMask c0 = c.Without(0);
  ProbabilityDistribution p = Uniform(f, c);
  absl::StatusOr<CompatibilityVerdict> v =
      IsCompatible(*MassAssignment::Categorical(f, c0), p);
  ASSERT_TRUE(v.ok());
  ASSERT_FALSE(v->compatible());
  EXPECT_EQ(v->violation->subset, c0);
  EXPECT_NEAR(v->violation->probability, 2.0 / 3, 1e-12);
  EXPECT_NEAR(v->violation->belief, 1.0, 1e-12);

  // The belief-function overload reaches the same verdict.
  absl::StatusOr<CompatibilityVerdict> via_bel = IsCompatible(
      BeliefFromMass(*MassAssignment::Categorical(f, c0)), p);
  ASSERT_TRUE(via_bel.ok());
  EXPECT_EQ(via_bel->violation->subset, c0);
}

TEST(IsCompatibleTest, FrameMismatch) {
  absl::StatusOr<CompatibilityVerdict> v =
      IsCompatible(MassAssignment::Vacuous(IndexedFrame(3)),
                   Uniform(IndexedFrame(4), SubsetMask(0b1111)));
  ASSERT_FALSE(v.ok());
  EXPECT_EQ(v.status().code(), absl::StatusCode::kInvalidArgument);
}

TEST(IsCompatibleTest, AgreesWithNaiveDefinition) {
  testing::Rng rng(77);
  int incompatible = 0;
  for (int trial = 0; trial < 300; ++trial) {
    Frame f = IndexedFrame(1 + trial % 6);
    ProbabilityDistribution p = testing::RandomDistribution(f, rng);
    MassAssignment m = trial % 3 == 0 ? testing::SampleCompatibleMass(p, rng)
                                      : testing::RandomMass(f, rng);
    const bool naive = testing::NaiveCompatible(m, p);
    absl::StatusOr<CompatibilityVerdict> fast = IsCompatible(m, p);
    ASSERT_TRUE(fast.ok());
    ASSERT_EQ(fast->compatible(), naive) << "trial " << trial;
    absl::StatusOr<CompatibilityVerdict> via_bel =
        IsCompatible(BeliefFromMass(m), p);
    ASSERT_EQ(via_bel->compatible(), naive);
    if (!naive) {
      ++incompatible;
      const CompatibilityViolation& v = *fast->violation;
      EXPECT_LT(v.probability, v.belief - kTolSum);
      // No smaller subset violates.
      for (std::size_t a = 0; a < v.subset.index(); ++a) {
        double bel = 0;
        for (std::size_t b = 0; b <= a; ++b) {
          if ((b & ~a) == 0) bel += m.values()[b];
        }
        EXPECT_GE(p.Of(SubsetMask(a)), bel - kTolSum);
      }
    }
  }
  EXPECT_GT(incompatible, 50);
}

TEST(SamplerTest, RepairedMassesAreCompatible) {
  testing::Rng rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    ProbabilityDistribution p =
        testing::RandomDistribution(IndexedFrame(1 + trial % 8), rng);
    MassAssignment m = testing::SampleCompatibleMass(p, rng);
    EXPECT_TRUE(testing::NaiveCompatible(m, p));
  }
}

TEST(IsCompatibleProbabilityTest, ProbabilityIsItsOwnPignistic) {
  testing::Rng rng(2);
  ProbabilityDistribution p =
      testing::RandomDistribution(IndexedFrame(5), rng);
  absl::StatusOr<ProbabilityCompatibility> r =
      IsCompatibleProbability(p, p, MassAssignment::FromProbability(p));
  ASSERT_TRUE(r.ok());
  EXPECT_EQ(r->verdict, ProbabilityVerdict::kVerified);
  EXPECT_TRUE(r->compatible());
}

TEST(IsCompatibleProbabilityTest, OutsideMaximumIsFeasible) {
  Frame f = IndexedFrame(4);
  ProbabilityDistribution p = Uniform(f, SubsetMask(0b1110));
  ProbabilityDistribution p_prime =
      *ProbabilityDistribution::Create(f, {0.5, 1.0 / 6, 1.0 / 6, 1.0 / 6});

  std::vector<std::pair<SubsetMask, double>> focal = {
      {SubsetMask(0b0011), 1.0 / 3},
      {SubsetMask(0b0101), 1.0 / 3},
      {SubsetMask(0b1001), 1.0 / 3}};
  MassAssignment witness = *MassAssignment::FromFocal(f, focal);
  absl::StatusOr<ProbabilityCompatibility> with =
      IsCompatibleProbability(p_prime, p, witness);
  ASSERT_TRUE(with.ok());
  EXPECT_EQ(with->verdict, ProbabilityVerdict::kVerified) << with->reason;

  absl::StatusOr<ProbabilityCompatibility> without =
      IsCompatibleProbability(p_prime, p);
  ASSERT_TRUE(without.ok());
  EXPECT_EQ(without->verdict, ProbabilityVerdict::kFeasible);
  ASSERT_TRUE(without->witness.has_value());
  EXPECT_TRUE(testing::NaiveCompatible(*without->witness, p));
  ProbabilityDistribution found = Pignistic(*without->witness);
  for (int i = 0; i < 4; ++i) {
    EXPECT_NEAR(found[i], p_prime[i], kPignisticMatchTolerance);
  }
}

TEST(IsCompatibleProbabilityTest, DiracWithOtherArgmaxIsInfeasible) {
  Frame f = IndexedFrame(3);
  ProbabilityDistribution p = ProbabilityDistribution::Dirac(f, 0);
  ProbabilityDistribution p_prime =
      *ProbabilityDistribution::Create(f, {0.3, 0.5, 0.2});
  absl::StatusOr<ProbabilityCompatibility> r =
      IsCompatibleProbability(p_prime, p);
  ASSERT_TRUE(r.ok());
  EXPECT_EQ(r->verdict, ProbabilityVerdict::kInfeasible);
  EXPECT_FALSE(r->compatible());
  EXPECT_FALSE(r->witness.has_value());
}

TEST(IsCompatibleProbabilityTest, RefutedWitnessNamesTheFailure) {
  Frame f = IndexedFrame(3);
  ProbabilityDistribution p = Uniform(f, SubsetMask(0b011));
  MassAssignment bad = *MassAssignment::Categorical(f, SubsetMask(0b010));
  absl::StatusOr<ProbabilityCompatibility> r =
      IsCompatibleProbability(Pignistic(bad), p, bad);
  ASSERT_TRUE(r.ok());
  EXPECT_EQ(r->verdict, ProbabilityVerdict::kRefuted);
  EXPECT_THAT(r->reason, HasSubstr("not compatible"));

  MassAssignment vac = MassAssignment::Vacuous(f);
  r = IsCompatibleProbability(p, p, vac);
  ASSERT_TRUE(r.ok());
  EXPECT_EQ(r->verdict, ProbabilityVerdict::kRefuted);
  EXPECT_THAT(r->reason, HasSubstr("pignistic"));
}

TEST(IsCompatibleProbabilityTest, LargeFramesNeedAWitness) {
  Frame f = IndexedFrame(kMaxFeasibilityFrame + 1);
  ProbabilityDistribution p = Uniform(f, f.Full());
  absl::StatusOr<ProbabilityCompatibility> r = IsCompatibleProbability(p, p);
  ASSERT_FALSE(r.ok());
  EXPECT_EQ(r.status().code(), absl::StatusCode::kResourceExhausted);
  EXPECT_TRUE(
      IsCompatibleProbability(p, p, MassAssignment::FromProbability(p)).ok());
}

TEST(IsCompatibleProbabilityTest, PignisticOfCompatibleBeliefIsFeasible) {
  testing::Rng rng(12);
  for (int trial = 0; trial < 30; ++trial) {
    ProbabilityDistribution p =
        testing::RandomDistribution(IndexedFrame(2 + trial % 4), rng);
    MassAssignment m = testing::SampleCompatibleMass(p, rng);
    absl::StatusOr<ProbabilityCompatibility> r =
        IsCompatibleProbability(Pignistic(m), p);
    ASSERT_TRUE(r.ok()) << r.status();
    EXPECT_EQ(r->verdict, ProbabilityVerdict::kFeasible) << r->reason;
  }
}

TEST(SupportTest, Examples) {
  Frame f = IndexedFrame(4);
  EXPECT_EQ(Support(Uniform(f, f.Full())), f.Full());
  EXPECT_EQ(Support(ProbabilityDistribution::Dirac(f, 0)),
            SubsetMask::Singleton(0));
  const SubsetMask c(0b1010);
  EXPECT_EQ(Support(Pignistic(*MassAssignment::Categorical(f, c))), c);
}

TEST(IsDiracTest, Examples) {
  Frame f = IndexedFrame(4);
  EXPECT_EQ(IsDirac(ProbabilityDistribution::Dirac(f, 3)), 3);
  EXPECT_FALSE(IsDirac(Uniform(f, SubsetMask(0b11))).has_value());
  ProbabilityDistribution near =
      *ProbabilityDistribution::Create(f, {1 - 1e-12, 1e-12, 0, 0});
  EXPECT_EQ(IsDirac(near), 0);
}

TEST(SupportInclusionTest, HoldsForSampledPairs) {
  testing::Rng rng(31);
  for (int trial = 0; trial < 100; ++trial) {
    ProbabilityDistribution p =
        testing::RandomDistribution(IndexedFrame(1 + trial % 8), rng);
    MassAssignment m = testing::SampleCompatibleMass(p, rng);
    EXPECT_TRUE(Support(p).IsSubsetOf(Support(Pignistic(m))));
  }
}

TEST(DiracTest, MassesAvoidingTheRecordVanish) {
  testing::Rng rng(41);
  for (int trial = 0; trial < 50; ++trial) {
    Frame f = IndexedFrame(2 + trial % 6);
    const int x0 = trial % f.size();
    ProbabilityDistribution p = ProbabilityDistribution::Dirac(f, x0);
    MassAssignment m = testing::SampleCompatibleMass(p, rng);
    bool some_positive = false;
    for (std::size_t a = 1; a < m.values().size(); ++a) {
      if (!SubsetMask(a).contains(x0)) {
        EXPECT_LE(m.values()[a], kTolSum);
      } else if (m.values()[a] > 0) {
        some_positive = true;
      }
    }
    EXPECT_TRUE(some_positive);
    ProbabilityDistribution bet = Pignistic(m);
    for (int x = 0; x < f.size(); ++x) EXPECT_GE(bet[x0], bet[x] - 1e-12);
  }
}

}  // namespace
}  // namespace beliefrisk
