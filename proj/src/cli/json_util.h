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

// Exception-free accessors over nlohmann::json values. Errors name the
// document and the path of the offending field.

#ifndef BELIEFRISK_SRC_CLI_JSON_UTIL_H_
#define BELIEFRISK_SRC_CLI_JSON_UTIL_H_

#include <cstdint>
#include <string>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/string_view.h"
#include "json.hpp"

namespace beliefrisk::cli::internal {

using Json = nlohmann::ordered_json;

inline absl::Status JsonError(absl::string_view path, absl::string_view what) {
  return absl::InvalidArgumentError(absl::StrCat(path, ": ", what));
}

inline absl::StatusOr<Json> ParseJson(absl::string_view text,
                                      absl::string_view source) {
  Json doc = Json::parse(text.begin(), text.end(), nullptr,
                         /*allow_exceptions=*/false);
  if (doc.is_discarded()) return JsonError(source, "not valid JSON");
  return doc;
}

inline absl::StatusOr<const Json*> Member(const Json& obj,
                                          absl::string_view key,
                                          absl::string_view path) {
  if (!obj.is_object()) return JsonError(path, "expected an object");
  auto it = obj.find(std::string(key));
  if (it == obj.end()) {
    return JsonError(path, absl::StrCat("missing field \"", key, "\""));
  }
  return &*it;
}

inline const Json* OptionalMember(const Json& obj, absl::string_view key) {
  if (!obj.is_object()) return nullptr;
  auto it = obj.find(std::string(key));
  return it == obj.end() ? nullptr : &*it;
}

inline absl::StatusOr<std::string> AsString(const Json& v,
                                            absl::string_view path) {
  if (!v.is_string()) return JsonError(path, "expected a string");
  return v.get<std::string>();
}

inline absl::StatusOr<double> AsNumber(const Json& v, absl::string_view path) {
  if (!v.is_number()) return JsonError(path, "expected a number");
  return v.get<double>();
}

inline absl::StatusOr<std::int64_t> AsInt(const Json& v,
                                          absl::string_view path) {
  if (!v.is_number_integer()) return JsonError(path, "expected an integer");
  return v.get<std::int64_t>();
}

inline absl::StatusOr<bool> AsBool(const Json& v, absl::string_view path) {
  if (!v.is_boolean()) return JsonError(path, "expected true or false");
  return v.get<bool>();
}

inline absl::StatusOr<std::vector<std::string>> AsStringList(
    const Json& v, absl::string_view path) {
  if (!v.is_array()) return JsonError(path, "expected an array of strings");
  std::vector<std::string> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_string()) {
      return JsonError(absl::StrCat(path, "[", i, "]"), "expected a string");
    }
    out.push_back(v[i].get<std::string>());
  }
  return out;
}

inline absl::StatusOr<std::vector<double>> AsNumberList(
    const Json& v, absl::string_view path) {
  if (!v.is_array()) return JsonError(path, "expected an array of numbers");
  std::vector<double> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_number()) {
      return JsonError(absl::StrCat(path, "[", i, "]"), "expected a number");
    }
    out.push_back(v[i].get<double>());
  }
  return out;
}

}  // namespace beliefrisk::cli::internal

#endif  // BELIEFRISK_SRC_CLI_JSON_UTIL_H_
