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

#include "voting/final_voting.h"

#include <cmath>

#include "kg/knowledge_graph.h"

namespace tabmatch {
namespace {

constexpr double kTieTolerance = 1e-12;

bool Tied(double a, double b) {
  return std::abs(a - b) <= kTieTolerance * std::max({1.0, std::abs(a), std::abs(b)});
}

std::vector<std::string> WithAncestors(const std::string& cls, const KnowledgeGraph& kg) {
  std::vector<std::string> out = {cls};
  for (std::string& a : kg.AncestorsOf(cls)) out.push_back(std::move(a));
  return out;
}

}  // namespace

std::optional<std::string> FinalizeCea(const CandidateDistribution& reestimated,
                                       const CandidateDistribution& lookup) {
  const std::string* best = nullptr;
  double best_p = 0.0;
  for (const auto& [entity, p] : reestimated) {
    if (best == nullptr || (p > best_p && !Tied(p, best_p))) {
      best = &entity;
      best_p = p;
      continue;
    }
    if (!Tied(p, best_p)) continue;
    // Keys iterate in ascending order, so an equal lookup score keeps `best`.
    if (lookup.Get(entity) > lookup.Get(*best) && !Tied(lookup.Get(entity), lookup.Get(*best))) {
      best = &entity;
      best_p = std::max(best_p, p);
    }
  }
  if (best == nullptr) return std::nullopt;
  return *best;
}

std::vector<std::string> RevoteCta(std::span<const Vote> winners, const KnowledgeGraph& kg,
                                   const CandidateDistribution& fallback) {
  std::map<std::string, double> votes;
  double total = 0.0;
  for (const Vote& w : winners) {
    total += w.weight;
    for (const std::string& t : kg.TypesOf(w.item)) votes[t] += w.weight;
  }
  if (votes.empty()) {
    if (auto best = fallback.Argmax()) return WithAncestors(*best, kg);
    return {};
  }
  // Deeper first, then more votes, then id.
  auto better = [&](const std::string& a, double va, const std::string& b, double vb) {
    const int da = kg.Depth(a), db = kg.Depth(b);
    if (da != db) return da > db;
    if (!Tied(va, vb)) return va > vb;
    return a < b;
  };
  const std::string* exact = nullptr;
  double exact_votes = 0.0;
  for (const auto& [t, v] : votes) {
    if (!(v > total / 2.0) || Tied(v, total / 2.0)) continue;
    if (exact == nullptr || better(t, v, *exact, exact_votes)) {
      exact = &t;
      exact_votes = v;
    }
  }
  if (exact == nullptr) {
    for (const auto& [t, v] : votes) {
      const bool more = exact == nullptr || (v > exact_votes && !Tied(v, exact_votes));
      const bool tie = exact != nullptr && Tied(v, exact_votes);
      if (more || (tie && better(t, v, *exact, exact_votes))) {
        exact = &t;
        exact_votes = std::max(exact_votes, v);
      }
    }
  }
  return WithAncestors(*exact, kg);
}

std::optional<std::string> RevoteCpa(std::span<const Vote> votes,
                                     const CandidateDistribution& pair_relations) {
  std::map<std::string, double> tally;
  for (const Vote& v : votes) tally[v.item] += v.weight;
  const std::string* best = nullptr;
  double best_v = 0.0;
  for (const auto& [r, v] : tally) {
    if (v <= 0.0) continue;
    if (best == nullptr || (v > best_v && !Tied(v, best_v))) {
      best = &r;
      best_v = v;
    } else if (Tied(v, best_v) && pair_relations.Get(r) > pair_relations.Get(*best) &&
               !Tied(pair_relations.Get(r), pair_relations.Get(*best))) {
      best = &r;
    }
  }
  if (best != nullptr) return *best;
  return pair_relations.Argmax();
}

}  // namespace tabmatch
