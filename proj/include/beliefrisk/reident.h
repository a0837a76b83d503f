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

// Re-identification of generalized microdata.
//
// A table X is masked attribute by attribute: each attribute V_j has a
// generalizer gen_j mapping raw values to labels (intervals for integers,
// groups for categories), and the protected table is Y[i][j] =
// gen_j(X[i][j]). For a protected row y and a set of attributes S, the
// candidate set is the set of records x with gen_j(x_j) = y_j for all j in S.
// With S = all attributes this gives the true posterior, uniform on the
// candidate set; fewer attributes give a larger candidate set and a less
// specific belief.
//
// Records are identified by their 0-based position; equal rows are distinct
// records. Candidate sets use a sparse representation and work for tables of
// any size. Anything producing a MassAssignment or ProbabilityDistribution
// builds a frame over the records and needs at most kMaxFrame of them.

#ifndef BELIEFRISK_REIDENT_H_
#define BELIEFRISK_REIDENT_H_

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <span>
#include <string>
#include "absl/strings/string_view.h"
#include <variant>
#include <vector>

#include "absl/status/statusor.h"
#include "beliefrisk/belief.h"
#include "beliefrisk/compatibility.h"
#include "beliefrisk/frame.h"

namespace beliefrisk {

// A cell: an integer or a category label.
using Value = std::variant<std::int64_t, std::string>;

std::string ValueToString(const Value& value);

class Table {
 public:
  // Rectangular, at least one record, unique attribute names.
  static absl::StatusOr<Table> Create(std::vector<std::string> attributes,
                                      std::vector<std::vector<Value>> rows);

  int num_records() const { return static_cast<int>(rows_.size()); }
  int num_attributes() const { return static_cast<int>(attributes_.size()); }
  const std::vector<std::string>& attributes() const { return attributes_; }
  const std::vector<Value>& row(int record) const { return rows_[record]; }
  const Value& at(int record, int attribute) const {
    return rows_[record][attribute];
  }
  std::optional<int> AttributeIndex(absl::string_view name) const;

 private:
  Table(std::vector<std::string> attributes,
        std::vector<std::vector<Value>> rows)
      : attributes_(std::move(attributes)), rows_(std::move(rows)) {}

  std::vector<std::string> attributes_;
  std::vector<std::vector<Value>> rows_;
};

struct Interval {
  std::int64_t lo = 0;
  std::int64_t hi = 0;

  bool Contains(std::int64_t v) const { return lo <= v && v <= hi; }
  // "[lo,hi]"
  std::string Label() const;
};

// gen_j for one attribute.
class AttributeGeneralizer {
 public:
  enum class Kind { kIntervals, kGroups, kIdentity };

  // Well-formed (lo <= hi), pairwise disjoint intervals; at least one.
  static absl::StatusOr<AttributeGeneralizer> Intervals(
      std::vector<Interval> intervals);
  // Group label -> member categories. Members must be unique across groups.
  static absl::StatusOr<AttributeGeneralizer> Groups(
      std::map<std::string, std::vector<std::string>> groups);
  // Every value is its own label.
  static AttributeGeneralizer Identity();

  Kind kind() const { return kind_; }
  const std::vector<Interval>& intervals() const { return intervals_; }
  const std::map<std::string, std::string>& group_of() const {
    return group_of_;
  }

  // NotFound when the value is not covered.
  absl::StatusOr<std::string> Apply(const Value& value) const;

 private:
  explicit AttributeGeneralizer(Kind kind) : kind_(kind) {}

  Kind kind_;
  std::vector<Interval> intervals_;  // sorted by lo
  std::map<std::string, std::string> group_of_;
};

// One generalizer per attribute name.
class GeneralizationScheme {
 public:
  void Set(std::string attribute, AttributeGeneralizer generalizer);
  const AttributeGeneralizer* For(absl::string_view attribute) const;
  // Identity generalizer for each attribute of `table`.
  static GeneralizationScheme IdentityFor(const Table& table);

  const std::map<std::string, AttributeGeneralizer, std::less<>>& entries()
      const {
    return generalizers_;
  }

 private:
  std::map<std::string, AttributeGeneralizer, std::less<>> generalizers_;
};

// A row of the protected table: one label per attribute.
using ProtectedRow = std::vector<std::string>;

class MaskedTable {
 public:
  const std::vector<std::string>& attributes() const { return attributes_; }
  int num_records() const { return static_cast<int>(rows_.size()); }
  const ProtectedRow& row(int record) const { return rows_[record]; }
  const std::vector<ProtectedRow>& rows() const { return rows_; }

 private:
  friend absl::StatusOr<MaskedTable> MaskGeneralize(
      const Table& x, const GeneralizationScheme& scheme);

  std::vector<std::string> attributes_;
  std::vector<ProtectedRow> rows_;
};

// Y = [gen_1(X[V_1]) || ... || gen_m(X[V_m])]. Fails naming the attribute
// (and value) when the scheme lacks an attribute or misses a value.
absl::StatusOr<MaskedTable> MaskGeneralize(const Table& x,
                                           const GeneralizationScheme& scheme);

// A non-empty set of attribute positions.
class AttributeSubset {
 public:
  static absl::StatusOr<AttributeSubset> Create(std::uint32_t bits,
                                                int num_attributes);
  static absl::StatusOr<AttributeSubset> FromNames(
      const Table& table, std::span<const std::string> names);
  static AttributeSubset All(int num_attributes);
  static AttributeSubset Single(int attribute);

  std::uint32_t bits() const { return bits_; }
  bool contains(int attribute) const { return (bits_ >> attribute) & 1u; }
  bool IsSubsetOf(AttributeSubset other) const {
    return (bits_ & ~other.bits_) == 0;
  }
  std::vector<int> Attributes() const;
  std::vector<std::string> Names(const Table& table) const;

  friend bool operator==(AttributeSubset, AttributeSubset) = default;

 private:
  explicit AttributeSubset(std::uint32_t bits) : bits_(bits) {}
  std::uint32_t bits_;
};

// Every non-empty attribute subset of an m-attribute table (m <= 16).
std::vector<AttributeSubset> AllAttributeSubsets(int num_attributes);

// Sorted set of record positions out of `universe` records.
class RecordSet {
 public:
  RecordSet(int universe, std::vector<int> members);

  int universe() const { return universe_; }
  const std::vector<int>& members() const { return members_; }
  int size() const { return static_cast<int>(members_.size()); }
  bool empty() const { return members_.empty(); }
  bool contains(int record) const;
  bool IsSubsetOf(const RecordSet& other) const;
  // Dense mask; needs universe <= kMaxFrame.
  absl::StatusOr<SubsetMask> ToMask() const;

  friend bool operator==(const RecordSet&, const RecordSet&) = default;

 private:
  int universe_;
  std::vector<int> members_;
};

// Evidence items beyond the protected row itself, each a mass over records.
struct AuxiliaryInfo {
  std::vector<MassAssignment> items;
};

// Frame x0 .. x{n-1} over the records of `x`.
absl::StatusOr<Frame> RecordFrame(const Table& x);

// Records whose generalized values match `y` on every attribute in `attrs`.
absl::StatusOr<RecordSet> CandidateSet(const ProtectedRow& y, const Table& x,
                                       const GeneralizationScheme& scheme,
                                       AttributeSubset attrs);
// Same, against an already masked table.
absl::StatusOr<RecordSet> CandidateSet(const ProtectedRow& y,
                                       const MaskedTable& masked,
                                       AttributeSubset attrs);

// Groups records of a masked table by their labels on one attribute subset,
// so that all candidate sets for that subset come from one pass.
class CandidateIndex {
 public:
  CandidateIndex(const MaskedTable& masked, AttributeSubset attrs);

  // Candidate set of `y` (empty set when nothing matches).
  RecordSet Lookup(const ProtectedRow& y) const;
  AttributeSubset attributes() const { return attrs_; }

 private:
  std::string Key(const ProtectedRow& y) const;

  AttributeSubset attrs_;
  int universe_;
  std::map<std::string, std::vector<int>, std::less<>> classes_;
};

// Uniform on the full-attribute candidate set. FailedPrecondition when `y`
// cannot be produced from `x` under `scheme`.
absl::StatusOr<TrueProbability> ComputeTrueProbability(
    const ProtectedRow& y, const Table& x, const GeneralizationScheme& scheme);

// The belief-valued method: categorical mass on the candidate set for
// `attrs`, combined (conjunctive rule, acceptability checked) with any
// auxiliary evidence.
absl::StatusOr<MassAssignment> ReidentifyBelief(
    const ProtectedRow& y, AttributeSubset attrs, const Table& x,
    const GeneralizationScheme& scheme, const AuxiliaryInfo& aux = {});

// The probability-valued method: the pignistic transform of
// ReidentifyBelief, which without auxiliary evidence is uniform on the
// candidate set for `attrs`.
absl::StatusOr<ProbabilityDistribution> ReidentifyProb(
    const ProtectedRow& y, AttributeSubset attrs, const Table& x,
    const GeneralizationScheme& scheme, const AuxiliaryInfo& aux = {});

// A deliberately wrong method: categorical mass on
// C0 = (B u CandidateSet(y)) \ {x0} for a record x0 of the candidate set.
// Never compatible with the true probability; P(C0) = 1 - 1/|CandidateSet|.
// Requires x0 in the candidate set and |CandidateSet| >= 2.
absl::StatusOr<MassAssignment> AdversarialMissingRecord(
    const ProtectedRow& y, const Table& x, const GeneralizationScheme& scheme,
    SubsetMask b, int x0);

// ---------------------------------------------------------------------------
// Additive noise on N^3: y = x + alpha * e_beta with alpha in {0,1} and
// beta in {1,2,3}.

using Triple = std::array<std::int64_t, 3>;

struct N3Noise {
  int alpha = 0;
  int beta = 1;
};

absl::StatusOr<Triple> NoiseMaskN3(const Triple& x, int alpha, int beta);
// Uniform alpha and beta.
N3Noise DrawN3Noise(std::mt19937_64& rng);

// A belief putting mass 1/k on each pair {x0, a}, where x0 is the record
// equal to y and a ranges over the k records at unit L1 distance from y.
// Its pignistic gives 1/2 to x0 and 1/(2k) to each neighbour.
struct N3Construction {
  MassAssignment belief;
  int x0;
  SubsetMask neighbours;
};

// FailedPrecondition when x lacks y itself or has fewer than two unit
// neighbours of y; needs |x| <= kMaxFrame.
absl::StatusOr<N3Construction> N3ReidentBelief(const Triple& y,
                                               std::span<const Triple> x);

// Posterior P(x | y) under the noise above with a uniform prior over the
// records: P(y | x) = [y = x] / 2 + #{beta : x + e_beta = y} / 6.
// FailedPrecondition when no record can produce y.
absl::StatusOr<ProbabilityDistribution> N3Posterior(const Triple& y,
                                                    std::span<const Triple> x);

}  // namespace beliefrisk

#endif  // BELIEFRISK_REIDENT_H_
