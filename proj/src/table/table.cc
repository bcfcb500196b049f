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

#include "table/table.h"

#include <array>
#include <utility>

#include "util/error.h"

namespace tabmatch {
namespace {

constexpr std::array<std::string_view, 14> kDataTypeNames = {
    "number",   "ordinal",     "quantity", "temperature", "distance",
    "volume",   "amount-of-money", "duration", "time",    "email",
    "url",      "phone-number", "credit-card-number", "text"};

constexpr std::array<std::string_view, 19> kNerNames = {
    "PERSON", "NORP",     "FAC",     "ORG",      "GPE",     "LOC",     "PRODUCT",
    "EVENT",  "WORK_OF_ART", "LAW",  "LANGUAGE", "DATE",    "TIME",    "PERCENT",
    "MONEY",  "QUANTITY", "ORDINAL", "CARDINAL", "text"};

}  // namespace

std::string_view DataTypeTagName(DataTypeTag tag) {
  return kDataTypeNames[static_cast<size_t>(tag)];
}

std::optional<DataTypeTag> ParseDataTypeTag(std::string_view name) {
  for (size_t i = 0; i < kDataTypeNames.size(); ++i) {
    if (kDataTypeNames[i] == name) return static_cast<DataTypeTag>(i);
  }
  return std::nullopt;
}

std::string_view NerTagName(NerTag tag) { return kNerNames[static_cast<size_t>(tag)]; }

std::optional<NerTag> ParseNerTag(std::string_view name) {
  for (size_t i = 0; i < kNerNames.size(); ++i) {
    if (kNerNames[i] == name) return static_cast<NerTag>(i);
  }
  return std::nullopt;
}

bool IsEntityRelated(NerTag tag) {
  return static_cast<int>(tag) <= static_cast<int>(NerTag::kLanguage);
}

Table::Table(std::string table_id, std::vector<std::vector<CellContext>> rows)
    : table_id_(std::move(table_id)), rows_(std::move(rows)) {
  if (!rows_.empty()) n_cols_ = rows_.front().size();
  for (const auto& row : rows_) {
    if (row.size() != n_cols_) {
      throw DataError("table " + table_id_ + ": rows have unequal width");
    }
  }
}

}  // namespace tabmatch
