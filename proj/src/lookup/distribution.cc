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

#include "lookup/distribution.h"

#include <vector>

#include "util/error.h"

namespace tabmatch {

CandidateDistribution CandidateDistribution::Normalize(const ScoreMap& raw) {
  double total = 0;
  for (const auto& [key, score] : raw) {
    if (score < 0) throw DataError("negative candidate score for " + key);
    total += score;
  }
  CandidateDistribution d;
  if (total <= 0) return d;
  for (const auto& [key, score] : raw) {
    if (score > 0) d.items_.emplace(key, score / total);
  }
  return d;
}

double CandidateDistribution::Get(std::string_view key) const {
  auto it = items_.find(std::string(key));
  return it == items_.end() ? 0.0 : it->second;
}

bool CandidateDistribution::Contains(std::string_view key) const {
  return items_.contains(std::string(key));
}

double CandidateDistribution::Sum() const {
  double total = 0;
  for (const auto& [key, p] : items_) total += p;
  return total;
}

std::optional<std::string> CandidateDistribution::Argmax() const {
  const std::string* best = nullptr;
  double best_p = -1;
  for (const auto& [key, p] : items_) {
    if (p > best_p) {
      best = &key;
      best_p = p;
    }
  }
  if (!best) return std::nullopt;
  return *best;
}

CandidateDistribution AggregateSignals(std::span<const WeightedSignal> signals,
                                       Aggregation mode, std::optional<double> beta,
                                       const CandidateDistribution* candidates) {
  bool any_weight = false;
  for (const auto& s : signals) {
    if (s.weight < 0) throw ConfigError("signal weights must be non-negative");
    any_weight |= s.weight > 0;
  }
  if (!any_weight) throw ConfigError("all signal weights are zero");

  std::vector<std::pair<ScoreMap, double>> surviving;
  for (const auto& s : signals) {
    if (s.distribution == nullptr || s.distribution->empty()) continue;
    ScoreMap kept;
    for (const auto& [key, p] : *s.distribution) {
      if (candidates && !candidates->Contains(key)) continue;
      if (beta && p < *beta) continue;
      kept.emplace(key, p);
    }
    if (!kept.empty()) surviving.emplace_back(std::move(kept), s.weight);
  }
  if (surviving.empty()) return {};

  ScoreMap combined;
  if (mode == Aggregation::kSum) {
    for (const auto& [scores, weight] : surviving) {
      for (const auto& [key, p] : scores) combined[key] += weight * p;
    }
  } else {
    for (const auto& [key, p] : surviving.front().first) combined[key] = 1.0;
    for (const auto& [scores, weight] : surviving) {
      for (auto& [key, value] : combined) {
        auto it = scores.find(key);
        value *= it == scores.end() ? 0.0 : weight * it->second;
      }
    }
  }
  return CandidateDistribution::Normalize(combined);
}

}  // namespace tabmatch
