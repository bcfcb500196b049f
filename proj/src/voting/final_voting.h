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

#ifndef TABMATCH_VOTING_FINAL_VOTING_H_
#define TABMATCH_VOTING_FINAL_VOTING_H_

#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "lookup/distribution.h"

namespace tabmatch {

class KnowledgeGraph;

// Final answers for one table. Coordinates are zero-based with row 0 the
// header.
struct AnnotationSet {
  std::string table_id;
  std::map<std::pair<size_t, size_t>, std::string> cea;  // (row, col)
  std::map<size_t, std::vector<std::string>> cta;         // col -> exact first
  std::map<std::pair<size_t, size_t>, std::string> cpa;  // (head, tail)

  bool operator==(const AnnotationSet&) const = default;
};

enum class VoteWeighting { kUniform, kProbability };

// Argmax of Pr(e|S); ties go to the higher lookup probability, then to the
// smaller id. nullopt for an empty distribution.
std::optional<std::string> FinalizeCea(const CandidateDistribution& reestimated,
                                       const CandidateDistribution& lookup);

struct Vote {
  std::string item;
  double weight = 1.0;
};

// Each winner votes for every type in its closure. The exact type is the
// deepest class backed by more than half of the total vote weight; without
// such a class the most voted class wins (ties: deeper, then smaller id).
// With no winners the argmax of `fallback` is used. Returns the exact type
// followed by its ancestors.
std::vector<std::string> RevoteCta(std::span<const Vote> winners, const KnowledgeGraph& kg,
                                   const CandidateDistribution& fallback);

// Majority over per-row relation votes; ties are broken by the column-pair
// relation probability, then by id. No votes -> argmax of `pair_relations`.
std::optional<std::string> RevoteCpa(std::span<const Vote> votes,
                                     const CandidateDistribution& pair_relations);

}  // namespace tabmatch

#endif  // TABMATCH_VOTING_FINAL_VOTING_H_
