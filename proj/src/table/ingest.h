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

#ifndef TABMATCH_TABLE_INGEST_H_
#define TABMATCH_TABLE_INGEST_H_

#include <string>
#include <string_view>

#include "table/annotators.h"
#include "table/language.h"
#include "table/table.h"

namespace tabmatch {

// The pluggable cell annotators used while ingesting. Pointers are
// non-owning and must outlive any table ingested with them.
struct Annotators {
  const LanguagePredictor* language = nullptr;
  const DataTypePredictor* datatype = nullptr;
  const EntityTypePredictor* entity = nullptr;
  const NerClassMap* class_map = nullptr;

  // Bundled n-gram profiles, regex value rules, gazetteer-free tagger and
  // the DBpedia class mapping.
  static Annotators Default();
};

CellContext AnnotateCell(std::string_view raw, const Annotators& annotators);

// Parses CSV content into a fully tagged table. Ragged rows are padded with
// empty cells and a warning is recorded. Throws DataError on zero rows.
Table IngestCsv(std::string_view content, std::string table_id,
                const Annotators& annotators);

// Reads `path` and names the table after the file stem.
Table IngestTable(const std::string& path, const Annotators& annotators);

}  // namespace tabmatch

#endif  // TABMATCH_TABLE_INGEST_H_
