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

#include "lookup/fusion.h"

#include <algorithm>
#include <future>
#include <unordered_set>

#include "kg/knowledge_graph.h"

namespace tabmatch {
namespace {

ServiceRanking Isolated(const LookupService& service, const LookupRequest& request) {
  try {
    return service.Lookup(request);
  } catch (...) {
    return ServiceRanking{service.id(), request.query, {}};
  }
}

void Clean(ServiceRanking& ranking, size_t limit, const KnowledgeGraph* kg) {
  std::vector<std::string> out;
  std::unordered_set<std::string> seen;
  for (auto& e : ranking.entities) {
    std::string id = kg ? kg->Canonicalize(e) : e;
    if (seen.insert(id).second) out.push_back(std::move(id));
    if (out.size() == limit) break;
  }
  ranking.entities = std::move(out);
}

}  // namespace

std::string ChooseLanguage(const LanguageGuess& cell, const LanguageGuess& table) {
  if (!cell.fallback && cell.confidence >= table.confidence) return cell.code;
  return table.code;
}

std::vector<ServiceRanking> QueryServices(const std::string& query,
                                          const std::string& language,
                                          std::span<const LookupService* const> services,
                                          size_t limit, const KnowledgeGraph* kg) {
  const LookupRequest request{query, language, limit};
  std::vector<ServiceRanking> rankings;
  if (services.size() == 1) {
    rankings.push_back(Isolated(*services[0], request));
  } else {
    std::vector<std::future<ServiceRanking>> pending;
    for (const LookupService* s : services) {
      pending.push_back(std::async(std::launch::async,
                                   [s, &request] { return Isolated(*s, request); }));
    }
    for (auto& f : pending) rankings.push_back(f.get());
  }
  for (auto& r : rankings) Clean(r, limit, kg);
  return rankings;
}

ScoreMap RankScore(const ServiceRanking& ranking, size_t limit) {
  ScoreMap scores;
  const size_t n = std::min(ranking.entities.size(), limit);
  for (size_t rank = 0; rank < n; ++rank) {
    scores.emplace(ranking.entities[rank], static_cast<double>(limit - rank));
  }
  return scores;
}

CandidateDistribution FuseAndNormalize(std::span<const ServiceRanking> rankings,
                                       size_t limit) {
  ScoreMap fused;
  for (const auto& ranking : rankings) {
    for (const auto& [entity, score] : RankScore(ranking, limit)) {
      double& best = fused[entity];
      best = std::max(best, score);
    }
  }
  return CandidateDistribution::Normalize(fused);
}

}  // namespace tabmatch
