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

#ifndef TABMATCH_LOOKUP_FUSION_H_
#define TABMATCH_LOOKUP_FUSION_H_

#include <span>
#include <string>
#include <vector>

#include "lookup/distribution.h"
#include "lookup/service.h"
#include "table/table.h"

namespace tabmatch {

class KnowledgeGraph;

// The cell-level guess wins when its confidence is at least the table's.
std::string ChooseLanguage(const LanguageGuess& cell, const LanguageGuess& table);

// Sends `query` to every service with the chosen language. A service that
// throws contributes an empty ranking. Each ranking is deduplicated,
// canonicalized through `kg` redirects when given, and cut to `limit`.
// Services run concurrently when there is more than one.
std::vector<ServiceRanking> QueryServices(
    const std::string& query, const std::string& language,
    std::span<const LookupService* const> services, size_t limit,
    const KnowledgeGraph* kg = nullptr);

// s(e) = limit - rank(e) with zero-based ranks: the top entity scores
// `limit`, the limit-th scores 1.
ScoreMap RankScore(const ServiceRanking& ranking, size_t limit);

// Max over services of RankScore, normalized to a distribution.
CandidateDistribution FuseAndNormalize(std::span<const ServiceRanking> rankings,
                                       size_t limit);

}  // namespace tabmatch

#endif  // TABMATCH_LOOKUP_FUSION_H_
