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

#include "beliefrisk/cli/risk_report.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>
#include <utility>

#include "absl/strings/numbers.h"
#include "absl/strings/str_cat.h"
#include "beliefrisk/compatibility.h"
#include "beliefrisk/measures.h"
#include "cli/json_util.h"
#include "cli/status_macros.h"

namespace beliefrisk::cli {

namespace {

using internal::Json;
using internal::JsonError;

std::string RecordLabel(int record) { return absl::StrCat("x", record); }

std::vector<std::string> Labels(const RecordSet& set) {
  std::vector<std::string> out;
  out.reserve(set.members().size());
  for (int r : set.members()) out.push_back(RecordLabel(r));
  return out;
}

SparseDistribution UniformOn(const RecordSet& set) {
  SparseDistribution d;
  d.support = Labels(set);
  d.values.assign(set.members().size(), 1.0 / set.size());
  return d;
}

SparseDistribution Sparse(const ProbabilityDistribution& p) {
  SparseDistribution d;
  for (int x = 0; x < p.size(); ++x) {
    if (p[x] != 0.0) {
      d.support.push_back(p.frame().label(x));
      d.values.push_back(p[x]);
    }
  }
  return d;
}

struct Context {
  const Table& table;
  const GeneralizationScheme& scheme;
  const MaskedTable& masked;
  const RiskOptions& options;
  const CandidateIndex& full_index;
  const std::vector<CandidateIndex>& indexes;
  bool dense;
};

absl::StatusOr<SubsetRisk> EvaluateDense(const Context& ctx, int record,
                                         const ProtectedRow& y,
                                         const TrueProbability& truth,
                                         std::size_t s) {
  const AttributeSubset attrs = ctx.options.subsets[s];
  const RecordSet candidates = ctx.indexes[s].Lookup(y);
  BR_ASSIGN_OR_RETURN(MassAssignment belief,
                      ReidentifyBelief(y, attrs, ctx.table, ctx.scheme));
  const auto focal = belief.FocalElements();
  BR_ASSIGN_OR_RETURN(SubsetMask expected, candidates.ToMask());
  if (focal.size() != 1 || focal.front().first != expected) {
    return absl::InternalError(absl::StrCat(
        "record ", RecordLabel(record),
        ": belief is not categorical on the candidate set ",
        belief.frame().Describe(expected)));
  }
  SubsetRisk out;
  out.attributes = attrs.Names(ctx.table);
  out.candidate_set = Labels(candidates);
  out.candidate_size = candidates.size();
  out.reidentification_probability = Sparse(Pignistic(belief));
  for (Measure m : ctx.options.measures) {
    switch (m) {
      case Measure::kNonspecificity:
        out.nonspecificity_bits = Nonspecificity(belief);
        break;
      case Measure::kPignisticEntropy:
        out.pignistic_entropy_nats = PignisticEntropy(belief);
        break;
      case Measure::kCompatibility: {
        BR_ASSIGN_OR_RETURN(CompatibilityVerdict verdict,
                            IsCompatible(belief, truth));
        out.compatibility =
            verdict.compatible() ? "compatible" : "incompatible";
        break;
      }
    }
  }
  return out;
}

SubsetRisk EvaluateLocal(const Context& ctx, const ProtectedRow& y,
                         const RecordSet& true_set, std::size_t s) {
  const AttributeSubset attrs = ctx.options.subsets[s];
  const RecordSet candidates = ctx.indexes[s].Lookup(y);
  SubsetRisk out;
  out.attributes = attrs.Names(ctx.table);
  out.candidate_set = Labels(candidates);
  out.candidate_size = candidates.size();
  out.reidentification_probability = UniformOn(candidates);
  const double size = candidates.size();
  for (Measure m : ctx.options.measures) {
    switch (m) {
      case Measure::kNonspecificity:
        out.nonspecificity_bits = std::log2(size);
        break;
      case Measure::kPignisticEntropy:
        out.pignistic_entropy_nats = std::log(size);
        break;
      case Measure::kCompatibility:
        // Bel(A) is 1 when C is inside A and 0 otherwise, so compatibility
        // reduces to P(C) = 1.
        out.compatibility =
            true_set.IsSubsetOf(candidates) ? "compatible" : "incompatible";
        break;
    }
  }
  return out;
}

absl::StatusOr<RecordRisk> EvaluateRecord(const Context& ctx, int record) {
  const ProtectedRow& y = ctx.masked.row(record);
  const RecordSet true_set = ctx.full_index.Lookup(y);
  if (true_set.empty()) {
    return absl::InternalError(absl::StrCat(
        "record ", RecordLabel(record), " is missing from its own class"));
  }
  RecordRisk out;
  out.record = record;
  out.label = RecordLabel(record);
  out.protected_row = y;
  out.true_candidate_set = Labels(true_set);
  if (true_set.size() == 1) out.dirac = out.true_candidate_set.front();

  if (ctx.dense) {
    BR_ASSIGN_OR_RETURN(TrueProbability truth,
                        ComputeTrueProbability(y, ctx.table, ctx.scheme));
    out.true_probability = Sparse(truth.distribution());
    if (out.true_probability.support != out.true_candidate_set) {
      return absl::InternalError(absl::StrCat(
          "record ", out.label, ": true probability support disagrees with "
          "the candidate index"));
    }
    for (std::size_t s = 0; s < ctx.options.subsets.size(); ++s) {
      BR_ASSIGN_OR_RETURN(SubsetRisk risk,
                          EvaluateDense(ctx, record, y, truth, s));
      out.subsets.push_back(std::move(risk));
    }
  } else {
    out.true_probability = UniformOn(true_set);
    for (std::size_t s = 0; s < ctx.options.subsets.size(); ++s) {
      out.subsets.push_back(EvaluateLocal(ctx, y, true_set, s));
    }
  }
  return out;
}

// --- JSON -----------------------------------------------------------------

Json DistributionJson(const SparseDistribution& d) {
  return Json{{"support", d.support}, {"values", d.values}};
}

Json SubsetJson(const SubsetRisk& s) {
  Json j{{"attributes", s.attributes},
         {"candidate_set", s.candidate_set},
         {"candidate_size", s.candidate_size},
         {"reidentification_probability",
          DistributionJson(s.reidentification_probability)}};
  if (s.nonspecificity_bits) j["nonspecificity_bits"] = *s.nonspecificity_bits;
  if (s.pignistic_entropy_nats) {
    j["pignistic_entropy_nats"] = *s.pignistic_entropy_nats;
  }
  if (s.compatibility) j["compatibility"] = *s.compatibility;
  return j;
}

Json RecordJson(const RecordRisk& r) {
  Json subsets = Json::array();
  for (const auto& s : r.subsets) subsets.push_back(SubsetJson(s));
  return Json{{"record", r.record},
              {"label", r.label},
              {"protected_row", r.protected_row},
              {"true_candidate_set", r.true_candidate_set},
              {"true_candidate_size", r.true_candidate_set.size()},
              {"true_probability", DistributionJson(r.true_probability)},
              {"dirac", r.dirac ? Json(*r.dirac) : Json(nullptr)},
              {"subsets", std::move(subsets)}};
}

Json SummaryJson(const RiskSummary& s) {
  Json histogram = Json::object();
  for (const auto& [size, count] : s.candidate_size_histogram) {
    histogram[std::to_string(size)] = count;
  }
  return Json{{"records", s.records},
              {"candidate_size_histogram", std::move(histogram)},
              {"unique_reidentifications", s.unique_reidentifications},
              {"unique_reidentification_fraction",
               s.unique_reidentification_fraction},
              {"lattice", s.lattice},
              {"incompatible_evaluations", s.incompatible_evaluations}};
}

absl::StatusOr<const Json*> Get(const Json& obj, absl::string_view key,
                                const std::string& path) {
  return internal::Member(obj, key, path);
}

absl::StatusOr<int> GetInt(const Json& obj, absl::string_view key,
                           const std::string& path) {
  BR_ASSIGN_OR_RETURN(const Json* v, Get(obj, key, path));
  BR_ASSIGN_OR_RETURN(std::int64_t i,
                      internal::AsInt(*v, absl::StrCat(path, ".", key)));
  return static_cast<int>(i);
}

absl::StatusOr<std::string> GetString(const Json& obj, absl::string_view key,
                                      const std::string& path) {
  BR_ASSIGN_OR_RETURN(const Json* v, Get(obj, key, path));
  return internal::AsString(*v, absl::StrCat(path, ".", key));
}

absl::StatusOr<std::vector<std::string>> GetStrings(const Json& obj,
                                                    absl::string_view key,
                                                    const std::string& path) {
  BR_ASSIGN_OR_RETURN(const Json* v, Get(obj, key, path));
  return internal::AsStringList(*v, absl::StrCat(path, ".", key));
}

absl::StatusOr<std::optional<double>> GetOptionalNumber(
    const Json& obj, absl::string_view key, const std::string& path) {
  const Json* v = internal::OptionalMember(obj, key);
  if (v == nullptr) return std::optional<double>();
  BR_ASSIGN_OR_RETURN(double d,
                      internal::AsNumber(*v, absl::StrCat(path, ".", key)));
  return std::optional<double>(d);
}

absl::StatusOr<SparseDistribution> ParseDistribution(const Json& obj,
                                                     absl::string_view key,
                                                     const std::string& path) {
  BR_ASSIGN_OR_RETURN(const Json* v, Get(obj, key, path));
  const std::string dpath = absl::StrCat(path, ".", key);
  SparseDistribution d;
  BR_ASSIGN_OR_RETURN(d.support, GetStrings(*v, "support", dpath));
  BR_ASSIGN_OR_RETURN(const Json* values, Get(*v, "values", dpath));
  BR_ASSIGN_OR_RETURN(d.values,
                      internal::AsNumberList(*values, dpath + ".values"));
  if (d.support.size() != d.values.size()) {
    return JsonError(dpath, "support and values differ in length");
  }
  return d;
}

absl::StatusOr<SubsetRisk> ParseSubset(const Json& j, const std::string& path) {
  SubsetRisk s;
  BR_ASSIGN_OR_RETURN(s.attributes, GetStrings(j, "attributes", path));
  BR_ASSIGN_OR_RETURN(s.candidate_set, GetStrings(j, "candidate_set", path));
  BR_ASSIGN_OR_RETURN(s.candidate_size, GetInt(j, "candidate_size", path));
  BR_ASSIGN_OR_RETURN(s.reidentification_probability,
                      ParseDistribution(j, "reidentification_probability",
                                        path));
  BR_ASSIGN_OR_RETURN(s.nonspecificity_bits,
                      GetOptionalNumber(j, "nonspecificity_bits", path));
  BR_ASSIGN_OR_RETURN(s.pignistic_entropy_nats,
                      GetOptionalNumber(j, "pignistic_entropy_nats", path));
  if (internal::OptionalMember(j, "compatibility") != nullptr) {
    BR_ASSIGN_OR_RETURN(s.compatibility, GetString(j, "compatibility", path));
  }
  return s;
}

absl::StatusOr<RecordRisk> ParseRecord(const Json& j, const std::string& path) {
  RecordRisk r;
  BR_ASSIGN_OR_RETURN(r.record, GetInt(j, "record", path));
  BR_ASSIGN_OR_RETURN(r.label, GetString(j, "label", path));
  BR_ASSIGN_OR_RETURN(r.protected_row, GetStrings(j, "protected_row", path));
  BR_ASSIGN_OR_RETURN(r.true_candidate_set,
                      GetStrings(j, "true_candidate_set", path));
  BR_ASSIGN_OR_RETURN(int true_size, GetInt(j, "true_candidate_size", path));
  if (true_size != static_cast<int>(r.true_candidate_set.size())) {
    return JsonError(path + ".true_candidate_size",
                     "disagrees with true_candidate_set");
  }
  BR_ASSIGN_OR_RETURN(r.true_probability,
                      ParseDistribution(j, "true_probability", path));
  BR_ASSIGN_OR_RETURN(const Json* dirac, Get(j, "dirac", path));
  if (!dirac->is_null()) {
    BR_ASSIGN_OR_RETURN(r.dirac, internal::AsString(*dirac, path + ".dirac"));
  }
  BR_ASSIGN_OR_RETURN(const Json* subsets, Get(j, "subsets", path));
  if (!subsets->is_array()) return JsonError(path + ".subsets", "expected a list");
  for (std::size_t i = 0; i < subsets->size(); ++i) {
    BR_ASSIGN_OR_RETURN(
        SubsetRisk s,
        ParseSubset((*subsets)[i], absl::StrCat(path, ".subsets[", i, "]")));
    r.subsets.push_back(std::move(s));
  }
  return r;
}

absl::StatusOr<RiskSummary> ParseSummary(const Json& j,
                                         const std::string& path) {
  RiskSummary s;
  BR_ASSIGN_OR_RETURN(s.records, GetInt(j, "records", path));
  BR_ASSIGN_OR_RETURN(const Json* histogram,
                      Get(j, "candidate_size_histogram", path));
  if (!histogram->is_object()) {
    return JsonError(path + ".candidate_size_histogram", "expected an object");
  }
  for (auto it = histogram->begin(); it != histogram->end(); ++it) {
    const std::string hpath =
        absl::StrCat(path, ".candidate_size_histogram.", it.key());
    int size = 0;
    if (!absl::SimpleAtoi(it.key(), &size)) {
      return JsonError(hpath, "key is not an integer");
    }
    BR_ASSIGN_OR_RETURN(std::int64_t count, internal::AsInt(it.value(), hpath));
    s.candidate_size_histogram[size] = static_cast<int>(count);
  }
  BR_ASSIGN_OR_RETURN(s.unique_reidentifications,
                      GetInt(j, "unique_reidentifications", path));
  BR_ASSIGN_OR_RETURN(const Json* fraction,
                      Get(j, "unique_reidentification_fraction", path));
  BR_ASSIGN_OR_RETURN(
      s.unique_reidentification_fraction,
      internal::AsNumber(*fraction, path + ".unique_reidentification_fraction"));
  BR_ASSIGN_OR_RETURN(s.lattice, GetString(j, "lattice", path));
  BR_ASSIGN_OR_RETURN(s.incompatible_evaluations,
                      GetInt(j, "incompatible_evaluations", path));
  return s;
}

}  // namespace

absl::StatusOr<RiskReport> ComputeRiskReport(const Table& table,
                                             const GeneralizationScheme& scheme,
                                             const RiskOptions& options) {
  if (options.subsets.empty()) {
    return absl::InvalidArgumentError("no attribute subsets to evaluate");
  }
  BR_ASSIGN_OR_RETURN(MaskedTable masked, MaskGeneralize(table, scheme));
  const CandidateIndex full_index(masked,
                                  AttributeSubset::All(table.num_attributes()));
  std::vector<CandidateIndex> indexes;
  indexes.reserve(options.subsets.size());
  for (AttributeSubset s : options.subsets) indexes.emplace_back(masked, s);

  const int n = table.num_records();
  const Context ctx{table,      scheme,  masked,
                    options,    full_index, indexes,
                    n <= std::min(options.dense_limit, kMaxFrame)};

  std::vector<absl::StatusOr<RecordRisk>> results(
      n, absl::UnknownError("not evaluated"));
  int threads = options.threads > 0
                    ? options.threads
                    : static_cast<int>(std::thread::hardware_concurrency());
  threads = std::clamp(threads, 1, n);
  std::atomic<int> next{0};
  auto worker = [&] {
    for (int i = next.fetch_add(1); i < n; i = next.fetch_add(1)) {
      results[i] = EvaluateRecord(ctx, i);
    }
  };
  std::vector<std::thread> pool;
  for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  RiskReport report;
  report.attributes = table.attributes();
  report.summary.records = n;
  report.summary.lattice = ctx.dense ? "dense" : "candidate_local";
  for (int i = 0; i < n; ++i) {
    if (!results[i].ok()) return results[i].status();
    RecordRisk& r = *results[i];
    const int size = static_cast<int>(r.true_candidate_set.size());
    ++report.summary.candidate_size_histogram[size];
    if (size == 1) ++report.summary.unique_reidentifications;
    for (const auto& s : r.subsets) {
      if (s.compatibility.has_value() && *s.compatibility != "compatible") {
        ++report.summary.incompatible_evaluations;
      }
    }
    report.records.push_back(std::move(r));
  }
  report.summary.unique_reidentification_fraction =
      static_cast<double>(report.summary.unique_reidentifications) / n;
  return report;
}

std::string SerializeRiskReport(const RiskReport& report) {
  Json records = Json::array();
  for (const auto& r : report.records) records.push_back(RecordJson(r));
  Json doc{{"attributes", report.attributes},
           {"records", std::move(records)},
           {"summary", SummaryJson(report.summary)}};
  return doc.dump(2) + "\n";
}

absl::StatusOr<RiskReport> ParseRiskReport(absl::string_view text) {
  BR_ASSIGN_OR_RETURN(Json doc, internal::ParseJson(text, "report"));
  RiskReport report;
  BR_ASSIGN_OR_RETURN(report.attributes, GetStrings(doc, "attributes", "report"));
  BR_ASSIGN_OR_RETURN(const Json* records, Get(doc, "records", "report"));
  if (!records->is_array()) return JsonError("report.records", "expected a list");
  for (std::size_t i = 0; i < records->size(); ++i) {
    BR_ASSIGN_OR_RETURN(
        RecordRisk r,
        ParseRecord((*records)[i], absl::StrCat("report.records[", i, "]")));
    report.records.push_back(std::move(r));
  }
  BR_ASSIGN_OR_RETURN(const Json* summary, Get(doc, "summary", "report"));
  BR_ASSIGN_OR_RETURN(report.summary, ParseSummary(*summary, "report.summary"));
  return report;
}

}  // namespace beliefrisk::cli
