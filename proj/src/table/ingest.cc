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

#include "table/ingest.h"

#include <algorithm>
#include <filesystem>

#include "text/unicode.h"
#include "util/csv.h"
#include "util/error.h"

namespace tabmatch {

Annotators Annotators::Default() {
  static const HeuristicEntityTagger tagger;
  return Annotators{&NgramLanguagePredictor::Default(),
                    &RuleDataTypePredictor::Default(), &tagger,
                    &NerClassMap::Default()};
}

CellContext AnnotateCell(std::string_view raw, const Annotators& annotators) {
  CellContext cell;
  cell.value = DecodeText(raw);
  if (cell.value.empty()) return cell;
  cell.language = annotators.language->Predict(cell.value);
  cell.datatype = annotators.datatype->Predict(cell.value);
  auto [tag, classes] =
      PredictEntityType(cell.value, *annotators.entity, *annotators.class_map);
  cell.entity_type = tag;
  cell.mapped_classes = std::move(classes);
  return cell;
}

Table IngestCsv(std::string_view content, std::string table_id,
                const Annotators& annotators) {
  const std::vector<CsvRow> records = ParseCsv(content);
  if (records.empty()) throw DataError("table " + table_id + " has no rows");

  size_t width = 0;
  for (const auto& r : records) width = std::max(width, r.size());

  std::vector<std::string> warnings;
  std::vector<std::vector<CellContext>> rows;
  rows.reserve(records.size());
  std::string all_text;
  for (size_t i = 0; i < records.size(); ++i) {
    if (records[i].size() < width) {
      warnings.push_back("row " + std::to_string(i) + " has " +
                         std::to_string(records[i].size()) + " of " +
                         std::to_string(width) + " cells; padded");
    }
    std::vector<CellContext> row;
    row.reserve(width);
    for (size_t j = 0; j < width; ++j) {
      std::string_view raw = j < records[i].size() ? records[i][j] : "";
      row.push_back(AnnotateCell(raw, annotators));
      if (!row.back().value.empty()) {
        if (!all_text.empty()) all_text.push_back(' ');
        all_text += row.back().value;
      }
    }
    rows.push_back(std::move(row));
  }

  Table table(std::move(table_id), std::move(rows));
  table.set_language(annotators.language->Predict(all_text));
  for (auto& w : warnings) table.add_warning(std::move(w));
  return table;
}

Table IngestTable(const std::string& path, const Annotators& annotators) {
  const std::string content = ReadFile(path);
  return IngestCsv(content, std::filesystem::path(path).stem().string(),
                   annotators);
}

}  // namespace tabmatch
