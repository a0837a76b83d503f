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

#include "beliefrisk/cli/config.h"

#include <map>
#include <utility>

#include "absl/strings/str_cat.h"
#include "absl/strings/str_join.h"
#include "beliefrisk/cli/csv.h"
#include "cli/json_util.h"
#include "cli/status_macros.h"

namespace beliefrisk::cli {

namespace {

using internal::AsInt;
using internal::AsString;
using internal::AsStringList;
using internal::Json;
using internal::JsonError;

std::filesystem::path Resolve(const std::filesystem::path& base,
                              const std::string& path) {
  std::filesystem::path p(path);
  return p.is_absolute() ? p : base / p;
}

absl::StatusOr<AttributeGeneralizer> ParseGeneralizer(const Json& v,
                                                      const std::string& path) {
  if (v.is_string()) {
    if (v.get<std::string>() == "identity") {
      return AttributeGeneralizer::Identity();
    }
    return JsonError(path, "unknown generalizer; expected \"identity\"");
  }
  if (!v.is_object() || v.size() != 1) {
    return JsonError(path,
                     "expected {\"intervals\": ...}, {\"groups\": ...} or "
                     "\"identity\"");
  }
  if (const Json* iv = internal::OptionalMember(v, "intervals")) {
    const std::string ipath = path + ".intervals";
    if (!iv->is_array() || iv->empty()) {
      return JsonError(ipath, "expected a non-empty list of [lo, hi] pairs");
    }
    std::vector<Interval> intervals;
    for (std::size_t i = 0; i < iv->size(); ++i) {
      const Json& pair = (*iv)[i];
      const std::string ppath = absl::StrCat(ipath, "[", i, "]");
      if (!pair.is_array() || pair.size() != 2) {
        return JsonError(ppath, "expected [lo, hi]");
      }
      BR_ASSIGN_OR_RETURN(std::int64_t lo, AsInt(pair[0], ppath));
      BR_ASSIGN_OR_RETURN(std::int64_t hi, AsInt(pair[1], ppath));
      intervals.push_back({lo, hi});
    }
    auto gen = AttributeGeneralizer::Intervals(std::move(intervals));
    if (!gen.ok()) return JsonError(ipath, gen.status().message());
    return gen;
  }
  if (const Json* gv = internal::OptionalMember(v, "groups")) {
    const std::string gpath = path + ".groups";
    if (!gv->is_object() || gv->empty()) {
      return JsonError(gpath, "expected a non-empty map of group -> members");
    }
    std::map<std::string, std::vector<std::string>> groups;
    for (auto it = gv->begin(); it != gv->end(); ++it) {
      BR_ASSIGN_OR_RETURN(
          groups[it.key()],
          AsStringList(it.value(), absl::StrCat(gpath, ".", it.key())));
      if (groups[it.key()].empty()) {
        return JsonError(absl::StrCat(gpath, ".", it.key()), "empty group");
      }
    }
    auto gen = AttributeGeneralizer::Groups(std::move(groups));
    if (!gen.ok()) return JsonError(gpath, gen.status().message());
    return gen;
  }
  return JsonError(path, "expected \"intervals\" or \"groups\"");
}

}  // namespace

absl::string_view MeasureName(Measure measure) {
  switch (measure) {
    case Measure::kNonspecificity:
      return "nonspecificity";
    case Measure::kPignisticEntropy:
      return "pignistic_entropy";
    case Measure::kCompatibility:
      return "compatibility";
  }
  return "unknown";
}

absl::StatusOr<Measure> MeasureByName(absl::string_view name) {
  for (Measure m : {Measure::kNonspecificity, Measure::kPignisticEntropy,
                    Measure::kCompatibility}) {
    if (MeasureName(m) == name) return m;
  }
  return absl::InvalidArgumentError(absl::StrCat("unknown measure \"", name,
                                                 "\""));
}

absl::StatusOr<RunConfig> ParseRunConfig(absl::string_view text,
                                         const std::filesystem::path& base) {
  BR_ASSIGN_OR_RETURN(Json doc, internal::ParseJson(text, "config"));
  if (!doc.is_object()) return JsonError("config", "expected an object");
  static const char* const kKnown[] = {"input", "output", "scheme",
                                       "attribute_subsets", "measures",
                                       "seed"};
  for (auto it = doc.begin(); it != doc.end(); ++it) {
    bool known = false;
    for (const char* k : kKnown) known = known || it.key() == k;
    if (!known) {
      return JsonError("config", absl::StrCat("unknown field \"", it.key(),
                                              "\""));
    }
  }

  RunConfig config;
  BR_ASSIGN_OR_RETURN(const Json* input, internal::Member(doc, "input", "config"));
  BR_ASSIGN_OR_RETURN(std::string input_path, AsString(*input, "config.input"));
  config.input = Resolve(base, input_path);
  if (const Json* out = internal::OptionalMember(doc, "output")) {
    BR_ASSIGN_OR_RETURN(std::string output_path,
                        AsString(*out, "config.output"));
    config.output = Resolve(base, output_path);
  }

  BR_ASSIGN_OR_RETURN(const Json* scheme,
                      internal::Member(doc, "scheme", "config"));
  if (!scheme->is_object() || scheme->empty()) {
    return JsonError("config.scheme",
                     "expected a non-empty map of attribute -> generalizer");
  }
  for (auto it = scheme->begin(); it != scheme->end(); ++it) {
    BR_ASSIGN_OR_RETURN(
        AttributeGeneralizer gen,
        ParseGeneralizer(it.value(), absl::StrCat("config.scheme.", it.key())));
    config.scheme.Set(it.key(), std::move(gen));
  }

  if (const Json* subsets = internal::OptionalMember(doc, "attribute_subsets")) {
    if (!subsets->is_array()) {
      return JsonError("config.attribute_subsets", "expected a list of lists");
    }
    for (std::size_t i = 0; i < subsets->size(); ++i) {
      const std::string path = absl::StrCat("config.attribute_subsets[", i, "]");
      BR_ASSIGN_OR_RETURN(std::vector<std::string> names,
                          AsStringList((*subsets)[i], path));
      if (names.empty()) return JsonError(path, "empty attribute subset");
      config.attribute_subsets.push_back(std::move(names));
    }
  }

  if (const Json* measures = internal::OptionalMember(doc, "measures")) {
    BR_ASSIGN_OR_RETURN(std::vector<std::string> names,
                        AsStringList(*measures, "config.measures"));
    for (const auto& name : names) {
      auto m = MeasureByName(name);
      if (!m.ok()) return JsonError("config.measures", m.status().message());
      config.measures.insert(*m);
    }
  } else {
    config.measures = {Measure::kNonspecificity, Measure::kPignisticEntropy,
                       Measure::kCompatibility};
  }

  if (const Json* seed = internal::OptionalMember(doc, "seed")) {
    if (!seed->is_number_unsigned()) {
      return JsonError("config.seed", "expected a non-negative integer");
    }
    config.seed = seed->get<std::uint64_t>();
  }
  return config;
}

absl::StatusOr<RunConfig> LoadRunConfig(const std::filesystem::path& path) {
  BR_ASSIGN_OR_RETURN(std::string text, ReadFile(path));
  auto config = ParseRunConfig(text, path.parent_path());
  if (!config.ok()) {
    return absl::InvalidArgumentError(
        absl::StrCat(path.string(), ": ", config.status().message()));
  }
  return config;
}

absl::StatusOr<std::vector<AttributeSubset>> ResolveSubsets(
    const RunConfig& config, const Table& table) {
  for (const auto& [name, gen] : config.scheme.entries()) {
    if (!table.AttributeIndex(name).has_value()) {
      return absl::InvalidArgumentError(absl::StrCat(
          "config.scheme: attribute \"", name, "\" is not a column of ",
          config.input.string()));
    }
  }
  const int m = table.num_attributes();
  if (m > 32) {
    return absl::InvalidArgumentError(
        absl::StrCat("tables with more than 32 attributes are not supported; "
                     "found ", m));
  }
  std::vector<AttributeSubset> out;
  if (config.attribute_subsets.empty()) {
    for (int j = 0; j < m; ++j) out.push_back(AttributeSubset::Single(j));
    if (m > 1) out.push_back(AttributeSubset::All(m));
    return out;
  }
  for (const auto& names : config.attribute_subsets) {
    auto subset = AttributeSubset::FromNames(table, names);
    if (!subset.ok()) {
      return absl::InvalidArgumentError(
          absl::StrCat("config.attribute_subsets [", absl::StrJoin(names, ","),
                       "]: ", subset.status().message()));
    }
    out.push_back(*subset);
  }
  return out;
}

}  // namespace beliefrisk::cli
