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

#ifndef TABMATCH_ENTITY_ENTITY_REESTIMATION_H_
#define TABMATCH_ENTITY_ENTITY_REESTIMATION_H_

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "kg/knowledge_graph.h"
#include "lookup/distribution.h"

namespace tabmatch {

// s8: raw(e) = max over t in types_of(e) of col_types(t), normalized.
CandidateDistribution SignalTypeConsistency(const CandidateDistribution& candidates,
                                            const CandidateDistribution& col_types,
                                            const KnowledgeGraph& kg);

// Abbreviation helpers.
// Uppercase initials of the words of `label`, skipping {of, the, a, an, and}.
// Empty when fewer than two words remain.
std::string Initials(std::string_view label);
// ISO-8601 form (YYYY-MM-DD, YYYY-MM or YYYY) of a recognized date string.
std::optional<std::string> CanonicalDate(std::string_view text);
// Removes a leading Mr/Mrs/Dr/Prof (with optional period).
std::string_view StripHonorific(std::string_view text);
// Case-folded letters and digits only.
std::string FoldAlnum(std::string_view text);

// True when `cell` matches `label` by the initials, date or title rule.
bool AbbreviationMatch(std::string_view cell, std::string_view label);

// Best label similarity of `entity` to `cell`, averaged with 1 when an
// abbreviation rule fires against some label.
double StringSimilarityScore(std::string_view cell, std::span<const std::string> labels);

// s9, normalized over the candidates.
CandidateDistribution SignalStringSimilarity(const CandidateDistribution& candidates,
                                             std::string_view cell,
                                             const KnowledgeGraph& kg);

// Another cell of the same row.
struct RowCell {
  std::string value;
  bool entity_column = false;
  std::vector<NodeId> candidates;  // sorted; entity columns only
};

// Pr(e | n_i, m_j1) before normalization: the mean over nonempty other cells
// of the best attribute relevance (and, for entity columns, 1 when e links to
// or from a candidate of that cell). nullopt when no other cell is nonempty.
std::optional<double> RowContextScore(NodeId entity, std::span<const RowCell> others,
                                      const KnowledgeGraph& kg);

// s10, normalized over the candidates.
CandidateDistribution SignalRowContext(const CandidateDistribution& candidates,
                                       std::span<const RowCell> others,
                                       const KnowledgeGraph& kg);

struct EntitySignalBundle {
  CandidateDistribution s7;  // lookup
  CandidateDistribution s8;  // type consistency
  CandidateDistribution s9;  // string similarity
  CandidateDistribution s10; // row context
  std::array<double, 4> weights = {1.0, 1.0, 1.0, 1.0};
  Aggregation aggregation = Aggregation::kSum;
};

// Weighted combination of the surviving signals, restricted to the lookup
// candidates. Empty when s7 is empty.
CandidateDistribution Reestimate(const EntitySignalBundle& bundle);

}  // namespace tabmatch

#endif  // TABMATCH_ENTITY_ENTITY_REESTIMATION_H_
