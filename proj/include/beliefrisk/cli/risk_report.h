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

// Per-record re-identification risk of a generalized table.
//
// For every protected row y and every evaluated attribute subset S the
// report gives the candidate set, the re-identification probability (the
// pignistic transform of the belief, uniform on the candidate set), and the
// requested measures. The true probability is uniform on the candidate set
// of the full attribute set.
//
// Tables of at most kMaxFrame records are evaluated on the dense lattice
// through the library's belief functions. Larger tables use closed forms
// for the categorical belief on C: N = log2 |C|, H = ln |C|, and
// compatibility iff the true candidate set is contained in C.

#ifndef BELIEFRISK_CLI_RISK_REPORT_H_
#define BELIEFRISK_CLI_RISK_REPORT_H_

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "absl/strings/string_view.h"
#include "beliefrisk/cli/config.h"
#include "beliefrisk/reident.h"

namespace beliefrisk::cli {

// A distribution over records listed by its support, in record order.
struct SparseDistribution {
  std::vector<std::string> support;
  std::vector<double> values;

  friend bool operator==(const SparseDistribution&,
                         const SparseDistribution&) = default;
};

struct SubsetRisk {
  std::vector<std::string> attributes;
  std::vector<std::string> candidate_set;
  int candidate_size = 0;
  SparseDistribution reidentification_probability;
  std::optional<double> nonspecificity_bits;
  std::optional<double> pignistic_entropy_nats;
  // "compatible" or "incompatible".
  std::optional<std::string> compatibility;

  friend bool operator==(const SubsetRisk&, const SubsetRisk&) = default;
};

struct RecordRisk {
  int record = 0;
  std::string label;
  std::vector<std::string> protected_row;
  std::vector<std::string> true_candidate_set;
  SparseDistribution true_probability;
  // Label of the only possible source record, when there is one.
  std::optional<std::string> dirac;
  std::vector<SubsetRisk> subsets;

  friend bool operator==(const RecordRisk&, const RecordRisk&) = default;
};

struct RiskSummary {
  int records = 0;
  // True candidate-set size -> number of records.
  std::map<int, int> candidate_size_histogram;
  int unique_reidentifications = 0;
  double unique_reidentification_fraction = 0;
  // "dense" or "candidate_local".
  std::string lattice;
  int incompatible_evaluations = 0;

  friend bool operator==(const RiskSummary&, const RiskSummary&) = default;
};

struct RiskReport {
  std::vector<std::string> attributes;
  std::vector<RecordRisk> records;
  RiskSummary summary;

  friend bool operator==(const RiskReport&, const RiskReport&) = default;
};

struct RiskOptions {
  std::vector<AttributeSubset> subsets;
  std::set<Measure> measures;
  // 0 means std::thread::hardware_concurrency().
  int threads = 0;
  // Tables with more records use the closed forms.
  int dense_limit = kMaxFrame;
};

absl::StatusOr<RiskReport> ComputeRiskReport(const Table& table,
                                             const GeneralizationScheme& scheme,
                                             const RiskOptions& options);

std::string SerializeRiskReport(const RiskReport& report);
absl::StatusOr<RiskReport> ParseRiskReport(absl::string_view text);

}  // namespace beliefrisk::cli

#endif  // BELIEFRISK_CLI_RISK_REPORT_H_
