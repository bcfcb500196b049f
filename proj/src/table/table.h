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

#ifndef TABMATCH_TABLE_TABLE_H_
#define TABMATCH_TABLE_TABLE_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace tabmatch {

// Cell data-type tags: the thirteen rule-based value types plus `text`.
enum class DataTypeTag {
  kNumber,
  kOrdinal,
  kQuantity,
  kTemperature,
  kDistance,
  kVolume,
  kAmountOfMoney,
  kDuration,
  kTime,
  kEmail,
  kUrl,
  kPhoneNumber,
  kCreditCardNumber,
  kText,
};

// Named-entity tags (OntoNotes categories) plus `text`. The first eleven are
// the entity-related tags that may map to knowledge-graph classes.
enum class NerTag {
  kPerson,
  kNorp,
  kFac,
  kOrg,
  kGpe,
  kLoc,
  kProduct,
  kEvent,
  kWorkOfArt,
  kLaw,
  kLanguage,
  kDate,
  kTime,
  kPercent,
  kMoney,
  kQuantity,
  kOrdinal,
  kCardinal,
  kText,
};

std::string_view DataTypeTagName(DataTypeTag tag);
std::optional<DataTypeTag> ParseDataTypeTag(std::string_view name);
std::string_view NerTagName(NerTag tag);
std::optional<NerTag> ParseNerTag(std::string_view name);
bool IsEntityRelated(NerTag tag);

struct LanguageGuess {
  std::string code = "en";
  double confidence = 0.0;
  // Set when the guess is the empty-input fallback.
  bool fallback = false;
};

struct CellContext {
  std::string value;
  LanguageGuess language;
  DataTypeTag datatype = DataTypeTag::kText;
  NerTag entity_type = NerTag::kText;
  std::vector<std::string> mapped_classes;
};

// A vertical relational table. Row 0 is the header row; data rows are
// 1..n_rows()-1. Every row has exactly n_cols() cells.
class Table {
 public:
  Table() = default;
  Table(std::string table_id, std::vector<std::vector<CellContext>> rows);

  const std::string& id() const { return table_id_; }
  size_t n_rows() const { return rows_.size(); }
  size_t n_cols() const { return n_cols_; }
  size_t n_data_rows() const { return rows_.empty() ? 0 : rows_.size() - 1; }

  const CellContext& cell(size_t row, size_t col) const { return rows_[row][col]; }
  CellContext& mutable_cell(size_t row, size_t col) { return rows_[row][col]; }
  const std::string& value(size_t row, size_t col) const {
    return rows_[row][col].value;
  }
  const std::string& header(size_t col) const { return rows_[0][col].value; }

  const LanguageGuess& language() const { return language_; }
  void set_language(LanguageGuess language) { language_ = std::move(language); }

  const std::vector<std::string>& warnings() const { return warnings_; }
  void add_warning(std::string warning) { warnings_.push_back(std::move(warning)); }

 private:
  std::string table_id_;
  std::vector<std::vector<CellContext>> rows_;
  size_t n_cols_ = 0;
  LanguageGuess language_;
  std::vector<std::string> warnings_;
};

}  // namespace tabmatch

#endif  // TABMATCH_TABLE_TABLE_H_
