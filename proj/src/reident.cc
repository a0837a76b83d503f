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

#include "beliefrisk/reident.h"

#include <algorithm>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "absl/strings/str_cat.h"
#include "absl/strings/str_join.h"
#include "beliefrisk/combination.h"

namespace beliefrisk {

std::string ValueToString(const Value& value) {
  if (const auto* i = std::get_if<std::int64_t>(&value)) {
    return absl::StrCat(*i);
  }
  return std::get<std::string>(value);
}

// ---------------------------------------------------------------------------
// Table

absl::StatusOr<Table> Table::Create(std::vector<std::string> attributes,
                                    std::vector<std::vector<Value>> rows) {
  if (attributes.empty()) {
    return absl::InvalidArgumentError("a table needs at least one attribute");
  }
  if (attributes.size() > 32) {
    return absl::InvalidArgumentError("at most 32 attributes are supported");
  }
  std::set<absl::string_view> seen;
  for (const std::string& name : attributes) {
    if (!seen.insert(name).second) {
      return absl::InvalidArgumentError(
          absl::StrCat("duplicate attribute '", name, "'"));
    }
  }
  if (rows.empty()) {
    return absl::InvalidArgumentError("a table needs at least one record");
  }
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != attributes.size()) {
      return absl::InvalidArgumentError(
          absl::StrCat("record ", i, " has ", rows[i].size(), " cells, expected ",
                       attributes.size()));
    }
  }
  return Table(std::move(attributes), std::move(rows));
}

std::optional<int> Table::AttributeIndex(absl::string_view name) const {
  for (int j = 0; j < num_attributes(); ++j) {
    if (attributes_[j] == name) return j;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Generalization

std::string Interval::Label() const { return absl::StrCat("[", lo, ",", hi, "]"); }

absl::StatusOr<AttributeGeneralizer> AttributeGeneralizer::Intervals(
    std::vector<Interval> intervals) {
  if (intervals.empty()) {
    return absl::InvalidArgumentError("an interval scheme needs an interval");
  }
  for (const Interval& iv : intervals) {
    if (iv.lo > iv.hi) {
      return absl::InvalidArgumentError(
          absl::StrCat("interval ", iv.Label(), " has lo > hi"));
    }
  }
  std::sort(intervals.begin(), intervals.end(),
            [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
  for (std::size_t i = 1; i < intervals.size(); ++i) {
    if (intervals[i].lo <= intervals[i - 1].hi) {
      return absl::InvalidArgumentError(
          absl::StrCat("intervals ", intervals[i - 1].Label(), " and ",
                       intervals[i].Label(), " overlap"));
    }
  }
  AttributeGeneralizer out(Kind::kIntervals);
  out.intervals_ = std::move(intervals);
  return out;
}

absl::StatusOr<AttributeGeneralizer> AttributeGeneralizer::Groups(
    std::map<std::string, std::vector<std::string>> groups) {
  if (groups.empty()) {
    return absl::InvalidArgumentError("a group scheme needs a group");
  }
  AttributeGeneralizer out(Kind::kGroups);
  for (auto& [label, members] : groups) {
    if (members.empty()) {
      return absl::InvalidArgumentError(
          absl::StrCat("group '", label, "' is empty"));
    }
    for (std::string& member : members) {
      auto [it, inserted] = out.group_of_.emplace(std::move(member), label);
      if (!inserted) {
        return absl::InvalidArgumentError(
            absl::StrCat("category '", it->first, "' is in more than one group"));
      }
    }
  }
  return out;
}

AttributeGeneralizer AttributeGeneralizer::Identity() {
  return AttributeGeneralizer(Kind::kIdentity);
}

absl::StatusOr<std::string> AttributeGeneralizer::Apply(
    const Value& value) const {
  switch (kind_) {
    case Kind::kIdentity:
      return ValueToString(value);
    case Kind::kIntervals: {
      const auto* v = std::get_if<std::int64_t>(&value);
      if (v == nullptr) {
        return absl::NotFoundError(absl::StrCat(
            "non-integer value '", ValueToString(value),
            "' under an interval scheme"));
      }
      auto it = std::upper_bound(
          intervals_.begin(), intervals_.end(), *v,
          [](std::int64_t x, const Interval& iv) { return x < iv.lo; });
      if (it == intervals_.begin() || !std::prev(it)->Contains(*v)) {
        return absl::NotFoundError(
            absl::StrCat("value ", *v, " is not covered by any interval"));
      }
      return std::prev(it)->Label();
    }
    case Kind::kGroups: {
      auto it = group_of_.find(ValueToString(value));
      if (it == group_of_.end()) {
        return absl::NotFoundError(absl::StrCat(
            "category '", ValueToString(value), "' is in no group"));
      }
      return it->second;
    }
  }
  return absl::InternalError("unknown generalizer kind");
}

void GeneralizationScheme::Set(std::string attribute,
                               AttributeGeneralizer generalizer) {
  generalizers_.insert_or_assign(std::move(attribute), std::move(generalizer));
}

const AttributeGeneralizer* GeneralizationScheme::For(
    absl::string_view attribute) const {
  auto it = generalizers_.find(attribute);
  return it == generalizers_.end() ? nullptr : &it->second;
}

GeneralizationScheme GeneralizationScheme::IdentityFor(const Table& table) {
  GeneralizationScheme scheme;
  for (const std::string& name : table.attributes()) {
    scheme.Set(name, AttributeGeneralizer::Identity());
  }
  return scheme;
}

absl::StatusOr<MaskedTable> MaskGeneralize(
    const Table& x, const GeneralizationScheme& scheme) {
  std::vector<const AttributeGeneralizer*> gens;
  for (const std::string& name : x.attributes()) {
    const AttributeGeneralizer* gen = scheme.For(name);
    if (gen == nullptr) {
      return absl::InvalidArgumentError(
          absl::StrCat("no generalization for attribute '", name, "'"));
    }
    gens.push_back(gen);
  }
  MaskedTable out;
  out.attributes_ = x.attributes();
  out.rows_.reserve(x.num_records());
  for (int i = 0; i < x.num_records(); ++i) {
    ProtectedRow row;
    row.reserve(gens.size());
    for (int j = 0; j < x.num_attributes(); ++j) {
      absl::StatusOr<std::string> label = gens[j]->Apply(x.at(i, j));
      if (!label.ok()) {
        return absl::InvalidArgumentError(
            absl::StrCat("attribute '", x.attributes()[j], "', record ", i,
                         ": ", label.status().message()));
      }
      row.push_back(*std::move(label));
    }
    out.rows_.push_back(std::move(row));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Attribute subsets and record sets

absl::StatusOr<AttributeSubset> AttributeSubset::Create(std::uint32_t bits,
                                                        int num_attributes) {
  if (bits == 0) {
    return absl::InvalidArgumentError("attribute subset must be non-empty");
  }
  if (num_attributes < 32 && (bits >> num_attributes) != 0) {
    return absl::InvalidArgumentError(
        absl::StrCat("attribute subset refers past attribute ",
                     num_attributes - 1));
  }
  return AttributeSubset(bits);
}

absl::StatusOr<AttributeSubset> AttributeSubset::FromNames(
    const Table& table, std::span<const std::string> names) {
  std::uint32_t bits = 0;
  for (const std::string& name : names) {
    std::optional<int> j = table.AttributeIndex(name);
    if (!j.has_value()) {
      return absl::InvalidArgumentError(
          absl::StrCat("unknown attribute '", name, "'"));
    }
    bits |= std::uint32_t{1} << *j;
  }
  return Create(bits, table.num_attributes());
}

AttributeSubset AttributeSubset::All(int num_attributes) {
  return AttributeSubset(num_attributes >= 32
                             ? ~std::uint32_t{0}
                             : (std::uint32_t{1} << num_attributes) - 1);
}

AttributeSubset AttributeSubset::Single(int attribute) {
  return AttributeSubset(std::uint32_t{1} << attribute);
}

std::vector<int> AttributeSubset::Attributes() const {
  std::vector<int> out;
  for (int j = 0; j < 32; ++j) {
    if (contains(j)) out.push_back(j);
  }
  return out;
}

std::vector<std::string> AttributeSubset::Names(const Table& table) const {
  std::vector<std::string> out;
  for (int j : Attributes()) out.push_back(table.attributes()[j]);
  return out;
}

std::vector<AttributeSubset> AllAttributeSubsets(int num_attributes) {
  std::vector<AttributeSubset> out;
  const std::uint32_t limit = std::uint32_t{1} << std::min(num_attributes, 16);
  for (std::uint32_t bits = 1; bits < limit; ++bits) {
    out.push_back(*AttributeSubset::Create(bits, num_attributes));
  }
  return out;
}

RecordSet::RecordSet(int universe, std::vector<int> members)
    : universe_(universe), members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()),
                 members_.end());
}

bool RecordSet::contains(int record) const {
  return std::binary_search(members_.begin(), members_.end(), record);
}

bool RecordSet::IsSubsetOf(const RecordSet& other) const {
  return std::includes(other.members_.begin(), other.members_.end(),
                       members_.begin(), members_.end());
}

absl::StatusOr<SubsetMask> RecordSet::ToMask() const {
  if (absl::Status s = CheckDenseCapacity(universe_); !s.ok()) return s;
  SubsetMask mask;
  for (int r : members_) mask = mask.With(r);
  return mask;
}

// ---------------------------------------------------------------------------
// Candidate sets

absl::StatusOr<Frame> RecordFrame(const Table& x) {
  return Frame::Indexed(x.num_records(), "x");
}

absl::StatusOr<RecordSet> CandidateSet(const ProtectedRow& y,
                                       const MaskedTable& masked,
                                       AttributeSubset attrs) {
  const int m = static_cast<int>(masked.attributes().size());
  if (static_cast<int>(y.size()) != m) {
    return absl::InvalidArgumentError(absl::StrCat(
        "protected row has ", y.size(), " cells, expected ", m));
  }
  if (m < 32 && (attrs.bits() >> m) != 0) {
    return absl::InvalidArgumentError("attribute subset exceeds the table");
  }
  const std::vector<int> columns = attrs.Attributes();
  std::vector<int> members;
  for (int i = 0; i < masked.num_records(); ++i) {
    const ProtectedRow& row = masked.row(i);
    if (std::all_of(columns.begin(), columns.end(),
                    [&](int j) { return row[j] == y[j]; })) {
      members.push_back(i);
    }
  }
  return RecordSet(masked.num_records(), std::move(members));
}

absl::StatusOr<RecordSet> CandidateSet(const ProtectedRow& y, const Table& x,
                                       const GeneralizationScheme& scheme,
                                       AttributeSubset attrs) {
  absl::StatusOr<MaskedTable> masked = MaskGeneralize(x, scheme);
  if (!masked.ok()) return masked.status();
  return CandidateSet(y, *masked, attrs);
}

CandidateIndex::CandidateIndex(const MaskedTable& masked,
                               AttributeSubset attrs)
    : attrs_(attrs), universe_(masked.num_records()) {
  for (int i = 0; i < masked.num_records(); ++i) {
    classes_[Key(masked.row(i))].push_back(i);
  }
}

std::string CandidateIndex::Key(const ProtectedRow& y) const {
  std::string key;
  for (int j : attrs_.Attributes()) {
    if (j >= static_cast<int>(y.size())) break;
    // Length-prefixed so that no label can forge a separator.
    absl::StrAppend(&key, y[j].size(), ":", y[j], ";");
  }
  return key;
}

RecordSet CandidateIndex::Lookup(const ProtectedRow& y) const {
  auto it = classes_.find(Key(y));
  if (it == classes_.end()) return RecordSet(universe_, {});
  return RecordSet(universe_, it->second);
}

// ---------------------------------------------------------------------------
// Re-identification methods

namespace {

std::string DescribeScheme(const GeneralizationScheme& scheme) {
  std::vector<std::string> parts;
  for (const auto& [name, gen] : scheme.entries()) {
    switch (gen.kind()) {
      case AttributeGeneralizer::Kind::kIdentity:
        parts.push_back(absl::StrCat(name, ":identity"));
        break;
      case AttributeGeneralizer::Kind::kIntervals: {
        std::vector<std::string> labels;
        for (const Interval& iv : gen.intervals()) labels.push_back(iv.Label());
        parts.push_back(absl::StrCat(name, ":", absl::StrJoin(labels, "")));
        break;
      }
      case AttributeGeneralizer::Kind::kGroups:
        parts.push_back(absl::StrCat(name, ":groups"));
        break;
    }
  }
  return absl::StrCat("generalization(", absl::StrJoin(parts, ";"), ")");
}

struct Categorical {
  Frame frame;
  SubsetMask candidates;
};

absl::StatusOr<Categorical> CandidateMask(const ProtectedRow& y,
                                          AttributeSubset attrs,
                                          const Table& x,
                                          const GeneralizationScheme& scheme) {
  absl::StatusOr<Frame> frame = RecordFrame(x);
  if (!frame.ok()) return frame.status();
  absl::StatusOr<RecordSet> candidates = CandidateSet(y, x, scheme, attrs);
  if (!candidates.ok()) return candidates.status();
  if (candidates->empty()) {
    return absl::FailedPreconditionError(absl::StrCat(
        "protected row (", absl::StrJoin(y, ","),
        ") cannot be produced from the table under the scheme"));
  }
  return Categorical{*std::move(frame), *candidates->ToMask()};
}

}  // namespace

absl::StatusOr<TrueProbability> ComputeTrueProbability(
    const ProtectedRow& y, const Table& x, const GeneralizationScheme& scheme) {
  absl::StatusOr<Categorical> c =
      CandidateMask(y, AttributeSubset::All(x.num_attributes()), x, scheme);
  if (!c.ok()) return c.status();
  absl::StatusOr<ProbabilityDistribution> dist =
      ProbabilityDistribution::UniformOn(c->frame, c->candidates);
  if (!dist.ok()) return dist.status();
  return TrueProbability(*std::move(dist),
                         Provenance{DescribeScheme(scheme), y});
}

absl::StatusOr<MassAssignment> ReidentifyBelief(
    const ProtectedRow& y, AttributeSubset attrs, const Table& x,
    const GeneralizationScheme& scheme, const AuxiliaryInfo& aux) {
  absl::StatusOr<Categorical> c = CandidateMask(y, attrs, x, scheme);
  if (!c.ok()) return c.status();
  absl::StatusOr<MassAssignment> categorical =
      MassAssignment::Categorical(c->frame, c->candidates);
  if (!categorical.ok() || aux.items.empty()) return categorical;

  absl::StatusOr<TrueProbability> truth = ComputeTrueProbability(y, x, scheme);
  if (!truth.ok()) return truth.status();
  std::vector<MassAssignment> evidence;
  evidence.reserve(aux.items.size() + 1);
  evidence.push_back(*std::move(categorical));
  evidence.insert(evidence.end(), aux.items.begin(), aux.items.end());
  absl::StatusOr<CombinedEvidence> combined =
      CombineMany(ConjunctiveRule(), evidence, truth->distribution());
  if (!combined.ok()) return combined.status();
  return std::move(combined->result);
}

absl::StatusOr<ProbabilityDistribution> ReidentifyProb(
    const ProtectedRow& y, AttributeSubset attrs, const Table& x,
    const GeneralizationScheme& scheme, const AuxiliaryInfo& aux) {
  absl::StatusOr<MassAssignment> belief =
      ReidentifyBelief(y, attrs, x, scheme, aux);
  if (!belief.ok()) return belief.status();
  return Pignistic(*belief);
}

absl::StatusOr<MassAssignment> AdversarialMissingRecord(
    const ProtectedRow& y, const Table& x, const GeneralizationScheme& scheme,
    SubsetMask b, int x0) {
  absl::StatusOr<Categorical> c =
      CandidateMask(y, AttributeSubset::All(x.num_attributes()), x, scheme);
  if (!c.ok()) return c.status();
  if (!c->frame.Owns(b)) {
    return absl::InvalidArgumentError("B is not a set of records of the table");
  }
  if (x0 < 0 || x0 >= c->frame.size() || !c->candidates.contains(x0)) {
    return absl::FailedPreconditionError(
        absl::StrCat("record ", x0, " is not in the candidate set"));
  }
  if (c->candidates.size() < 2) {
    return absl::FailedPreconditionError(
        "the construction needs a candidate set of at least two records");
  }
  return MassAssignment::Categorical(c->frame,
                                     (b | c->candidates).Without(x0));
}

// ---------------------------------------------------------------------------
// N^3 noise

absl::StatusOr<Triple> NoiseMaskN3(const Triple& x, int alpha, int beta) {
  if (alpha != 0 && alpha != 1) {
    return absl::InvalidArgumentError(
        absl::StrCat("alpha must be 0 or 1, got ", alpha));
  }
  if (beta < 1 || beta > 3) {
    return absl::InvalidArgumentError(
        absl::StrCat("beta must be in {1,2,3}, got ", beta));
  }
  Triple y = x;
  y[beta - 1] += alpha;
  return y;
}

N3Noise DrawN3Noise(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> alpha(0, 1);
  std::uniform_int_distribution<int> beta(1, 3);
  N3Noise noise;
  noise.alpha = alpha(rng);
  noise.beta = beta(rng);
  return noise;
}

namespace {

std::int64_t L1Distance(const Triple& a, const Triple& b) {
  std::int64_t d = 0;
  for (int i = 0; i < 3; ++i) d += a[i] > b[i] ? a[i] - b[i] : b[i] - a[i];
  return d;
}

std::string TripleString(const Triple& t) {
  return absl::StrCat("(", t[0], ",", t[1], ",", t[2], ")");
}

}  // namespace

absl::StatusOr<N3Construction> N3ReidentBelief(const Triple& y,
                                               std::span<const Triple> x) {
  if (x.empty()) return absl::InvalidArgumentError("empty table");
  absl::StatusOr<Frame> frame =
      Frame::Indexed(static_cast<int>(x.size()), "x");
  if (!frame.ok()) return frame.status();

  std::optional<int> x0;
  SubsetMask neighbours;
  for (int i = 0; i < static_cast<int>(x.size()); ++i) {
    const std::int64_t d = L1Distance(x[i], y);
    if (d == 0 && !x0.has_value()) x0 = i;
    if (d == 1) neighbours = neighbours.With(i);
  }
  if (!x0.has_value()) {
    return absl::FailedPreconditionError(
        absl::StrCat("no record equals y = ", TripleString(y)));
  }
  const int k = neighbours.size();
  if (k < 2) {
    return absl::FailedPreconditionError(
        absl::StrCat("y = ", TripleString(y), " has ", k,
                     " unit neighbours in the table; at least two required"));
  }
  std::vector<std::pair<SubsetMask, double>> focal;
  for (int a : neighbours.Elements()) {
    focal.emplace_back(SubsetMask::Singleton(*x0).With(a), 1.0 / k);
  }
  absl::StatusOr<MassAssignment> belief =
      MassAssignment::FromFocal(*frame, focal);
  if (!belief.ok()) return belief.status();
  return N3Construction{*std::move(belief), *x0, neighbours};
}

absl::StatusOr<ProbabilityDistribution> N3Posterior(
    const Triple& y, std::span<const Triple> x) {
  if (x.empty()) return absl::InvalidArgumentError("empty table");
  absl::StatusOr<Frame> frame =
      Frame::Indexed(static_cast<int>(x.size()), "x");
  if (!frame.ok()) return frame.status();
  std::vector<double> likelihood(x.size(), 0.0);
  double total = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == y) likelihood[i] += 0.5;
    for (int beta = 1; beta <= 3; ++beta) {
      if (*NoiseMaskN3(x[i], 1, beta) == y) likelihood[i] += 1.0 / 6.0;
    }
    total += likelihood[i];
  }
  if (total == 0) {
    return absl::FailedPreconditionError(absl::StrCat(
        "no record can produce y = ", TripleString(y)));
  }
  for (double& v : likelihood) v /= total;
  return ProbabilityDistribution::Create(*std::move(frame),
                                         std::move(likelihood));
}

}  // namespace beliefrisk
