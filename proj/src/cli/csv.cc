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

#include "beliefrisk/cli/csv.h"

#include <charconv>
#include <cstdint>
#include <fstream>
#include <sstream>
#include <utility>

#include "absl/strings/str_cat.h"

namespace beliefrisk::cli {

namespace {

absl::Status ParseError(int line, int column, absl::string_view what) {
  return absl::InvalidArgumentError(
      absl::StrCat("csv: line ", line, ", column ", column, ": ", what));
}

bool NeedsQuotes(absl::string_view field) {
  if (field.empty()) return false;
  if (field.front() == ' ' || field.back() == ' ') return true;
  return field.find_first_of(",\"\r\n") != absl::string_view::npos;
}

void AppendField(std::string& out, absl::string_view field) {
  if (!NeedsQuotes(field)) {
    out.append(field.data(), field.size());
    return;
  }
  out.push_back('"');
  for (char c : field) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  out.push_back('"');
}

bool ParseInt(const std::string& s, std::int64_t& out) {
  if (s.empty()) return false;
  const char* begin = s.data();
  const char* end = s.data() + s.size();
  if (*begin == '+') return false;
  auto [ptr, ec] = std::from_chars(begin, end, out);
  return ec == std::errc() && ptr == end;
}

}  // namespace

absl::StatusOr<CsvDocument> ParseCsv(absl::string_view text) {
  std::vector<std::vector<std::string>> records;
  std::vector<int> record_lines;
  std::vector<std::string> fields;
  std::string field;
  int line = 1;
  int column = 1;
  int record_line = 1;
  bool in_quotes = false;
  bool quoted = false;      // current field started with a quote
  bool after_quote = false; // closing quote seen, expecting , or EOL
  bool record_open = false;

  auto end_field = [&] {
    fields.push_back(std::move(field));
    field.clear();
    quoted = false;
    after_quote = false;
  };
  auto end_record = [&] {
    end_field();
    records.push_back(std::move(fields));
    record_lines.push_back(record_line);
    fields.clear();
    record_open = false;
  };

  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (in_quotes) {
      if (c == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          field.push_back('"');
          ++i;
          ++column;
        } else {
          in_quotes = false;
          after_quote = true;
        }
      } else {
        field.push_back(c);
        if (c == '\n') {
          ++line;
          column = 0;
        }
      }
      ++column;
      continue;
    }
    if (!record_open) {
      record_open = true;
      record_line = line;
    }
    if (c == ',') {
      end_field();
    } else if (c == '\n' || c == '\r') {
      if (c == '\r') {
        if (i + 1 >= text.size() || text[i + 1] != '\n') {
          return ParseError(line, column, "bare carriage return");
        }
        ++i;
      }
      end_record();
      ++line;
      column = 0;
    } else if (c == '"') {
      if (quoted || !field.empty()) {
        return ParseError(line, column, "unexpected quote inside field");
      }
      in_quotes = true;
      quoted = true;
    } else {
      if (after_quote) {
        return ParseError(line, column, "text after closing quote");
      }
      field.push_back(c);
    }
    ++column;
  }
  if (in_quotes) return ParseError(line, column, "unterminated quoted field");
  if (record_open) end_record();

  if (records.empty()) return ParseError(1, 1, "missing header row");
  CsvDocument doc;
  doc.header = std::move(records.front());
  for (std::size_t c = 0; c < doc.header.size(); ++c) {
    if (doc.header[c].empty()) {
      return ParseError(1, static_cast<int>(c) + 1, "empty attribute name");
    }
  }
  for (std::size_t r = 1; r < records.size(); ++r) {
    if (records[r].size() != doc.header.size()) {
      return ParseError(
          record_lines[r], 1,
          absl::StrCat("expected ", doc.header.size(), " fields, found ",
                       records[r].size()));
    }
    doc.rows.push_back(std::move(records[r]));
  }
  if (doc.rows.empty()) return ParseError(line, 1, "no records after header");
  return doc;
}

std::string WriteCsv(const CsvDocument& doc) {
  std::string out;
  auto write_row = [&out](const std::vector<std::string>& row) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i > 0) out.push_back(',');
      AppendField(out, row[i]);
    }
    out.push_back('\n');
  };
  write_row(doc.header);
  for (const auto& row : doc.rows) write_row(row);
  return out;
}

absl::StatusOr<Table> TableFromCsv(const CsvDocument& doc) {
  const std::size_t m = doc.header.size();
  std::vector<bool> integral(m, true);
  for (const auto& row : doc.rows) {
    for (std::size_t j = 0; j < m; ++j) {
      std::int64_t ignored;
      if (integral[j] && !ParseInt(row[j], ignored)) integral[j] = false;
    }
  }
  std::vector<std::vector<Value>> rows;
  rows.reserve(doc.rows.size());
  for (const auto& row : doc.rows) {
    std::vector<Value> cells;
    cells.reserve(m);
    for (std::size_t j = 0; j < m; ++j) {
      std::int64_t v = 0;
      if (integral[j] && ParseInt(row[j], v)) {
        cells.emplace_back(v);
      } else {
        cells.emplace_back(row[j]);
      }
    }
    rows.push_back(std::move(cells));
  }
  return Table::Create(doc.header, std::move(rows));
}

CsvDocument MaskedTableToCsv(const MaskedTable& masked) {
  return CsvDocument{masked.attributes(), masked.rows()};
}

absl::StatusOr<std::string> ReadFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    return absl::NotFoundError(absl::StrCat("cannot open ", path.string()));
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

absl::Status WriteFile(const std::filesystem::path& path,
                       absl::string_view contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    return absl::PermissionDeniedError(
        absl::StrCat("cannot write ", path.string()));
  }
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  if (!out) {
    return absl::DataLossError(absl::StrCat("short write to ", path.string()));
  }
  return absl::OkStatus();
}

}  // namespace beliefrisk::cli
