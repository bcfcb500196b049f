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

#include "relation/relation_estimation.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <set>

#include "text/numbers.h"
#include "text/similarity.h"
#include "text/unicode.h"
#include "util/error.h"

namespace tabmatch {
namespace {

std::vector<NodeId> CandidateIds(const CandidateDistribution& dist, const KnowledgeGraph& kg) {
  std::vector<NodeId> ids;
  ids.reserve(dist.size());
  for (const auto& [entity, p] : dist) {
    if (auto id = kg.Find(entity)) ids.push_back(*id);
  }
  std::sort(ids.begin(), ids.end());
  return ids;
}

}  // namespace

PreparedCell PrepareCell(std::string_view cell) {
  return {ParseNumber(cell), ToCodePoints(FoldCaseUtf8(cell))};
}

double LiteralRelevance(const LiteralAttribute& value, const PreparedCell& cell,
                        double floor) {
  if (value.numerical() && cell.number) return NumericRelevance(*cell.number, value.number);
  const std::u32string folded_here =
      value.folded.empty() && !value.text.empty() ? ToCodePoints(FoldCaseUtf8(value.text))
                                                  : std::u32string();
  const std::u32string& v = folded_here.empty() ? value.folded : folded_here;
  const size_t longest = std::max(v.size(), cell.folded.size());
  if (longest == 0) return 1.0;
  const size_t gap = v.size() > cell.folded.size() ? v.size() - cell.folded.size()
                                                   : cell.folded.size() - v.size();
  // Similarity cannot exceed 1 - gap / longest.
  if (1.0 - static_cast<double>(gap) / static_cast<double>(longest) <= floor) return 0.0;
  return NormalizedSimilarity(v, cell.folded);
}

double NumericRelevance(double c, double v) {
  const double denom = std::max(std::abs(c), std::abs(v));
  const double diff = std::abs(c - v);
  if (denom == 0.0) return diff == 0.0 ? 1.0 : 0.0;
  return std::clamp(1.0 - diff / denom, 0.0, 1.0);
}

double LiteralRelevance(const LiteralAttribute& value, std::string_view cell) {
  return LiteralRelevance(value, PrepareCell(cell));
}

double LiteralRelevance(std::string_view value, std::string_view cell) {
  LiteralAttribute attr;
  attr.text = std::string(value);
  attr.folded = ToCodePoints(FoldCaseUtf8(value));
  if (auto number = ParseNumber(value)) {
    attr.number = *number;
    attr.kind = LiteralAttribute::Kind::kNumerical;
  }
  return LiteralRelevance(attr, cell);
}

ColumnPairRelations RelationEntityEntity(std::span<const CandidateDistribution> head,
                                         std::span<const CandidateDistribution> tail,
                                         const KnowledgeGraph& kg) {
  ColumnPairRelations out;
  out.kind = PairKind::kEntityEntity;
  const size_t rows = std::min(head.size(), tail.size());
  std::map<NodeId, double> counts;
  for (size_t i = 0; i < rows; ++i) {
    if (head[i].empty() || tail[i].empty()) continue;
    const std::vector<NodeId> tails = CandidateIds(tail[i], kg);
    std::set<NodeId> fired;
    for (NodeId e1 : CandidateIds(head[i], kg)) {
      for (const Edge& edge : kg.OutEdges(e1)) {
        if (std::binary_search(tails.begin(), tails.end(), edge.target)) {
          fired.insert(edge.relation);
        }
      }
    }
    for (NodeId r : fired) counts[r] += 1.0;
  }
  for (const auto& [r, n] : counts) out.raw[kg.Iri(r)] = n;
  out.distribution = CandidateDistribution::Normalize(out.raw);
  return out;
}

ScoreMap KeptAttributeRelations(NodeId entity, std::string_view cell,
                                const KnowledgeGraph& kg, double beta) {
  ScoreMap kept;
  const PreparedCell prepared = PrepareCell(cell);
  for (const LiteralAttribute& attr : kg.LiteralAttributes(entity)) {
    const double score = LiteralRelevance(attr, prepared, beta);
    if (score > beta) {
      double& slot = kept[attr.relation];
      slot = std::max(slot, score);
    }
  }
  return kept;
}

ColumnPairRelations RelationEntityLiteral(std::span<const CandidateDistribution> head,
                                          std::span<const std::string> tail_values,
                                          const KnowledgeGraph& kg, double beta,
                                          PairAggregation aggregation) {
  ColumnPairRelations out;
  out.kind = PairKind::kEntityLiteral;
  const size_t rows = std::min(head.size(), tail_values.size());
  for (size_t i = 0; i < rows; ++i) {
    if (head[i].empty() || tail_values[i].empty()) continue;
    const PreparedCell cell = PrepareCell(tail_values[i]);
    ScoreMap row;
    for (NodeId e : CandidateIds(head[i], kg)) {
      for (const LiteralAttribute& attr : kg.LiteralAttributes(e)) {
        const double score = LiteralRelevance(attr, cell, beta);
        if (score <= beta) continue;
        double& slot = row[attr.relation];
        slot = aggregation == PairAggregation::kMax ? std::max(slot, score) : slot + score;
      }
    }
    for (const auto& [r, s] : row) out.raw[r] += s;
  }
  out.distribution = CandidateDistribution::Normalize(out.raw);
  return out;
}

CandidateDistribution CombineNumericRelations(const CandidateDistribution& pr_el,
                                              const CandidateDistribution& pr_num,
                                              double w5, double w6, Aggregation mode) {
  const std::array<WeightedSignal, 2> signals = {WeightedSignal{&pr_el, w5},
                                                 WeightedSignal{&pr_num, w6}};
  return AggregateSignals(signals, mode);
}

}  // namespace tabmatch
