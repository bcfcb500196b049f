// Copyright 2026 The Tabmatch Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef TABMATCH_UTIL_CSV_H_
#define TABMATCH_UTIL_CSV_H_

#include <string>
#include <string_view>
#include <vector>

namespace tabmatch {

using CsvRow = std::vector<std::string>;

// RFC 4180 reader: comma separator, double-quoted fields with "" escapes and
// embedded line breaks, CRLF or LF record ends. Blank lines are skipped.
// Throws ParseError on an unterminated quoted field.
std::vector<CsvRow> ParseCsv(std::string_view content);

struct NumberedRow {
  CsvRow fields;
  size_t line = 0;  // 1-based line where the record starts
};
std::vector<NumberedRow> ParseCsvWithLines(std::string_view content);

// Quotes a field only when it contains a comma, quote or line break.
std::string CsvField(std::string_view field);
std::string CsvLine(const std::vector<std::string>& fields);

// Whole-file read; throws IoError.
std::string ReadFile(const std::string& path);
void WriteFile(const std::string& path, std::string_view content);

}  // namespace tabmatch

#endif  // TABMATCH_UTIL_CSV_H_
