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

#ifndef TABMATCH_TYPING_COLUMN_TYPING_H_
#define TABMATCH_TYPING_COLUMN_TYPING_H_

#include <array>
#include <span>
#include <string>
#include <vector>

#include "lookup/distribution.h"
#include "table/table.h"

namespace tabmatch {

class KnowledgeGraph;

inline constexpr double kHeaderSimilarityFloor = 0.5;

enum class ColumnKind { kEntity, kLiteral };
enum class LiteralSubkind { kNone, kNumerical, kTextual, kOtherTag };

struct ColumnClass {
  size_t column = 0;
  ColumnKind kind = ColumnKind::kEntity;
  LiteralSubkind subkind = LiteralSubkind::kNone;
  // Winning vote tag: "entity", a data type name or a non-entity NER name.
  std::string tag = "entity";

  bool is_entity() const { return kind == ColumnKind::kEntity; }
};

// The tag one cell votes with: a non-text data type, else a non-entity NER
// tag, else "entity". Empty cells do not vote (nullopt).
std::optional<std::string> CellVoteTag(const CellContext& cell);
LiteralSubkind SubkindForTag(std::string_view tag);

// Majority vote over data rows. Text and entity-related NER votes are pooled
// as "entity"; any tie involving the entity pool goes to entity, other ties
// to the smaller tag name. Columns with no votes are entity columns.
std::vector<ColumnClass> ClassifyColumns(const Table& table);

// s2: per cell sum_e Pr(e|Q) over candidates typed t, summed over cells,
// normalized.
CandidateDistribution SignalLookupTypes(std::span<const CandidateDistribution> cells,
                                        const KnowledgeGraph& kg);

// s3: votes of the mapped classes of data cells, normalized.
CandidateDistribution SignalNerTypes(std::span<const CellContext> cells);

// s4: classes whose best label similarity to the header reaches `floor`,
// weighted by that similarity.
CandidateDistribution SignalHeaderTypes(std::string_view header, const KnowledgeGraph& kg,
                                        double floor = kHeaderSimilarityFloor);

struct TypeSignalBundle {
  CandidateDistribution s1;  // numeric columns
  CandidateDistribution s2;  // lookup
  CandidateDistribution s3;  // NER
  CandidateDistribution s4;  // header
  std::array<double, 4> weights = {1.0, 1.0, 1.0, 1.0};
  double beta = 0.5;
  Aggregation aggregation = Aggregation::kSum;
};

// Pr(t | m_j). Throws ConfigError when all four weights are zero.
CandidateDistribution AggregateTypeSignals(const TypeSignalBundle& bundle);

}  // namespace tabmatch

#endif  // TABMATCH_TYPING_COLUMN_TYPING_H_
