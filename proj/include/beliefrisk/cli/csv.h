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

// Comma-separated tables: the first row names the attributes. Fields may be
// quoted with '"' (doubled inside quotes). A column whose cells all parse as
// 64-bit integers is read as integers; any other column is categorical.

#ifndef BELIEFRISK_CLI_CSV_H_
#define BELIEFRISK_CLI_CSV_H_

#include <filesystem>
#include <string>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "absl/strings/string_view.h"
#include "beliefrisk/reident.h"

namespace beliefrisk::cli {

struct CsvDocument {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

// InvalidArgument with "line L, column C" on malformed quoting, ragged rows,
// an empty header, or a table without records. Accepts LF and CRLF.
absl::StatusOr<CsvDocument> ParseCsv(absl::string_view text);

// Quotes a field only when it holds a comma, quote, CR or LF, or has
// leading or trailing spaces. Rows end with LF.
std::string WriteCsv(const CsvDocument& doc);

absl::StatusOr<Table> TableFromCsv(const CsvDocument& doc);
CsvDocument MaskedTableToCsv(const MaskedTable& masked);

absl::StatusOr<std::string> ReadFile(const std::filesystem::path& path);
absl::Status WriteFile(const std::filesystem::path& path,
                       absl::string_view contents);

}  // namespace beliefrisk::cli

#endif  // BELIEFRISK_CLI_CSV_H_
