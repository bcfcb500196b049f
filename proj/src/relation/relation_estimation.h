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

#ifndef TABMATCH_RELATION_RELATION_ESTIMATION_H_
#define TABMATCH_RELATION_RELATION_ESTIMATION_H_

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "kg/knowledge_graph.h"
#include "lookup/distribution.h"

namespace tabmatch {

enum class PairKind { kEntityEntity, kEntityLiteral };
enum class PairAggregation { kMax, kSum };

struct ColumnPairRelations {
  size_t head = 0;
  size_t tail = 0;
  PairKind kind = PairKind::kEntityEntity;
  ScoreMap raw;
  CandidateDistribution distribution;
};

// 1 - |c - v| / max(|c|, |v|); 1 when both are zero.
double NumericRelevance(double c, double v);

// Numeric path when both the attribute and the cell are numbers, normalized
// Levenshtein similarity on case-folded text otherwise. Always in [0, 1].
double LiteralRelevance(const LiteralAttribute& value, std::string_view cell);
double LiteralRelevance(std::string_view value, std::string_view cell);

// A tail cell parsed and folded once for many comparisons.
struct PreparedCell {
  std::optional<double> number;
  std::u32string folded;
};
PreparedCell PrepareCell(std::string_view cell);

// LiteralRelevance against a prepared cell. Textual comparisons that cannot
// exceed `floor` may return 0 without computing the edit distance.
double LiteralRelevance(const LiteralAttribute& value, const PreparedCell& cell,
                        double floor = -1.0);

// Per row, a relation scores 1 when some head candidate links to some tail
// candidate through it (head -> tail only). Row scores are summed and
// normalized.
ColumnPairRelations RelationEntityEntity(std::span<const CandidateDistribution> head,
                                         std::span<const CandidateDistribution> tail,
                                         const KnowledgeGraph& kg);

// Relations r and scores of the attributes of `entity` whose relevance to
// `cell` exceeds beta; with several values for one r the best score is kept.
ScoreMap KeptAttributeRelations(NodeId entity, std::string_view cell,
                                const KnowledgeGraph& kg, double beta);

// Per row and head candidate, every literal attribute whose relevance to the
// tail cell exceeds beta is kept. Within a row the kept scores of a relation
// are combined by `aggregation`; rows are summed and the result normalized.
ColumnPairRelations RelationEntityLiteral(std::span<const CandidateDistribution> head,
                                          std::span<const std::string> tail_values,
                                          const KnowledgeGraph& kg, double beta,
                                          PairAggregation aggregation = PairAggregation::kMax);

// w5 Pr_el + w6 Pr_num, renormalized. An empty side is omitted.
CandidateDistribution CombineNumericRelations(const CandidateDistribution& pr_el,
                                              const CandidateDistribution& pr_num,
                                              double w5, double w6,
                                              Aggregation mode = Aggregation::kSum);

}  // namespace tabmatch

#endif  // TABMATCH_RELATION_RELATION_ESTIMATION_H_
