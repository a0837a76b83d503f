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

#include "beliefrisk/cli/set_function_file.h"

#include <set>
#include <utility>

#include "absl/strings/str_cat.h"
#include "beliefrisk/cli/csv.h"
#include "cli/json_util.h"
#include "cli/set_function_json.h"
#include "cli/status_macros.h"

namespace beliefrisk::cli {

namespace internal {

namespace {

Json Assignment(const Frame& frame, SubsetMask subset, double value) {
  return Json{{"subset", frame.LabelsOf(subset)}, {"value", value}};
}

}  // namespace

Json MassJson(const MassAssignment& m) {
  const Frame& frame = m.frame();
  Json assignments = Json::array();
  for (std::size_t a = 0; a < m.values().size(); ++a) {
    const double v = m.values()[a];
    if (v != 0.0) {
      assignments.push_back(
          Assignment(frame, SubsetMask(static_cast<SubsetMask::Bits>(a)), v));
    }
  }
  return Json{{"kind", "mass"},
              {"frame", frame.labels()},
              {"assignments", std::move(assignments)}};
}

Json ProbabilityJson(const ProbabilityDistribution& p) {
  Json assignments = Json::array();
  for (int x = 0; x < p.size(); ++x) {
    if (p[x] != 0.0) {
      assignments.push_back(Assignment(p.frame(), SubsetMask::Singleton(x),
                                       p[x]));
    }
  }
  return Json{{"kind", "probability"},
              {"frame", p.frame().labels()},
              {"assignments", std::move(assignments)}};
}

}  // namespace internal

using internal::Json;
using internal::JsonError;

absl::string_view SetFunctionKindName(SetFunctionKind kind) {
  switch (kind) {
    case SetFunctionKind::kMass:
      return "mass";
    case SetFunctionKind::kBelief:
      return "belief";
    case SetFunctionKind::kProbability:
      return "probability";
  }
  return "unknown";
}

absl::StatusOr<SetFunctionFile> ParseSetFunctionFile(absl::string_view text,
                                                     absl::string_view source) {
  const std::string src(source);
  BR_ASSIGN_OR_RETURN(Json doc, internal::ParseJson(text, src));
  if (!doc.is_object()) return JsonError(src, "expected an object");

  SetFunctionKind kind = SetFunctionKind::kMass;
  if (const Json* k = internal::OptionalMember(doc, "kind")) {
    BR_ASSIGN_OR_RETURN(std::string name, internal::AsString(*k, src + ".kind"));
    if (name == "mass") {
      kind = SetFunctionKind::kMass;
    } else if (name == "belief") {
      kind = SetFunctionKind::kBelief;
    } else if (name == "probability") {
      kind = SetFunctionKind::kProbability;
    } else {
      return JsonError(src + ".kind",
                       absl::StrCat("unknown kind \"", name,
                                    "\"; expected mass, belief or probability"));
    }
  }

  BR_ASSIGN_OR_RETURN(const Json* frame_json,
                      internal::Member(doc, "frame", src));
  BR_ASSIGN_OR_RETURN(std::vector<std::string> labels,
                      internal::AsStringList(*frame_json, src + ".frame"));
  auto frame = Frame::Create(std::move(labels));
  if (!frame.ok()) return JsonError(src + ".frame", frame.status().message());
  if (kind != SetFunctionKind::kProbability) {
    absl::Status capacity = CheckDenseCapacity(frame->size());
    if (!capacity.ok()) return JsonError(src + ".frame", capacity.message());
  }

  BR_ASSIGN_OR_RETURN(const Json* assignments,
                      internal::Member(doc, "assignments", src));
  if (!assignments->is_array()) {
    return JsonError(src + ".assignments", "expected a list");
  }
  const std::size_t length = kind == SetFunctionKind::kProbability
                                 ? static_cast<std::size_t>(frame->size())
                                 : frame->PowersetSize();
  std::vector<double> values(length, 0.0);
  std::set<SubsetMask::Bits> seen;
  for (std::size_t i = 0; i < assignments->size(); ++i) {
    const std::string path = absl::StrCat(src, ".assignments[", i, "]");
    const Json& entry = (*assignments)[i];
    BR_ASSIGN_OR_RETURN(const Json* subset_json,
                        internal::Member(entry, "subset", path));
    BR_ASSIGN_OR_RETURN(std::vector<std::string> subset_labels,
                        internal::AsStringList(*subset_json, path + ".subset"));
    auto subset = frame->SubsetOf(subset_labels);
    if (!subset.ok()) return JsonError(path + ".subset", subset.status().message());
    if (static_cast<int>(subset_labels.size()) != subset->size()) {
      return JsonError(path + ".subset", "repeated label");
    }
    if (!seen.insert(subset->bits()).second) {
      return JsonError(path + ".subset",
                       absl::StrCat("subset ", frame->Describe(*subset),
                                    " listed twice"));
    }
    BR_ASSIGN_OR_RETURN(const Json* value_json,
                        internal::Member(entry, "value", path));
    BR_ASSIGN_OR_RETURN(double value,
                        internal::AsNumber(*value_json, path + ".value"));
    if (kind == SetFunctionKind::kProbability) {
      if (subset->size() != 1) {
        return JsonError(path + ".subset",
                         "probability files assign singletons only");
      }
      values[subset->Elements().front()] = value;
    } else {
      values[subset->index()] = value;
    }
  }
  return SetFunctionFile{*std::move(frame), kind, std::move(values)};
}

absl::StatusOr<SetFunctionFile> LoadSetFunctionFile(
    const std::filesystem::path& path) {
  BR_ASSIGN_OR_RETURN(std::string text, ReadFile(path));
  return ParseSetFunctionFile(text, path.string());
}

absl::StatusOr<MassAssignment> LoadMass(const std::filesystem::path& path) {
  BR_ASSIGN_OR_RETURN(SetFunctionFile file, LoadSetFunctionFile(path));
  if (file.kind != SetFunctionKind::kMass) {
    return absl::InvalidArgumentError(
        absl::StrCat(path.string(), ": expected a mass file, found kind ",
                     SetFunctionKindName(file.kind)));
  }
  auto m = MassAssignment::Create(std::move(file.frame), std::move(file.values));
  if (!m.ok()) {
    return absl::InvalidArgumentError(
        absl::StrCat(path.string(), ": ", m.status().message()));
  }
  return m;
}

absl::StatusOr<ProbabilityDistribution> LoadProbability(
    const std::filesystem::path& path) {
  BR_ASSIGN_OR_RETURN(SetFunctionFile file, LoadSetFunctionFile(path));
  switch (file.kind) {
    case SetFunctionKind::kProbability: {
      auto p = ProbabilityDistribution::Create(std::move(file.frame),
                                               std::move(file.values));
      if (!p.ok()) {
        return absl::InvalidArgumentError(
            absl::StrCat(path.string(), ": ", p.status().message()));
      }
      return p;
    }
    case SetFunctionKind::kMass: {
      auto m = MassAssignment::Create(std::move(file.frame),
                                      std::move(file.values));
      if (!m.ok()) {
        return absl::InvalidArgumentError(
            absl::StrCat(path.string(), ": ", m.status().message()));
      }
      std::optional<ProbabilityDistribution> p = AsProbability(*m);
      if (!p.has_value()) {
        return absl::InvalidArgumentError(absl::StrCat(
            path.string(), ": mass is not carried by singletons"));
      }
      return *std::move(p);
    }
    case SetFunctionKind::kBelief:
      break;
  }
  return absl::InvalidArgumentError(
      absl::StrCat(path.string(), ": expected a probability file"));
}

std::string SerializeMass(const MassAssignment& m) {
  return internal::MassJson(m).dump(2) + "\n";
}

std::string SerializeProbability(const ProbabilityDistribution& p) {
  return internal::ProbabilityJson(p).dump(2) + "\n";
}

}  // namespace beliefrisk::cli
