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

#include "typing/column_typing.h"

#include <map>
#include <optional>

#include "kg/knowledge_graph.h"
#include "text/similarity.h"
#include "text/unicode.h"

namespace tabmatch {
namespace {

constexpr std::string_view kEntityTag = "entity";

}  // namespace

std::optional<std::string> CellVoteTag(const CellContext& cell) {
  if (cell.value.empty()) return std::nullopt;
  if (cell.datatype != DataTypeTag::kText) return std::string(DataTypeTagName(cell.datatype));
  if (cell.entity_type != NerTag::kText && !IsEntityRelated(cell.entity_type)) {
    return std::string(NerTagName(cell.entity_type));
  }
  return std::string(kEntityTag);
}

LiteralSubkind SubkindForTag(std::string_view tag) {
  if (tag == kEntityTag) return LiteralSubkind::kNone;
  if (auto dt = ParseDataTypeTag(tag)) {
    switch (*dt) {
      case DataTypeTag::kEmail:
      case DataTypeTag::kUrl:
      case DataTypeTag::kPhoneNumber:
        return LiteralSubkind::kTextual;
      case DataTypeTag::kDuration:
      case DataTypeTag::kTime:
      case DataTypeTag::kCreditCardNumber:
        return LiteralSubkind::kOtherTag;
      case DataTypeTag::kText:
        return LiteralSubkind::kNone;
      default:
        return LiteralSubkind::kNumerical;
    }
  }
  if (auto ner = ParseNerTag(tag)) {
    switch (*ner) {
      case NerTag::kPercent:
      case NerTag::kMoney:
      case NerTag::kQuantity:
      case NerTag::kOrdinal:
      case NerTag::kCardinal:
        return LiteralSubkind::kNumerical;
      default:
        return LiteralSubkind::kOtherTag;
    }
  }
  return LiteralSubkind::kOtherTag;
}

std::vector<ColumnClass> ClassifyColumns(const Table& table) {
  std::vector<ColumnClass> out;
  out.reserve(table.n_cols());
  for (size_t col = 0; col < table.n_cols(); ++col) {
    std::map<std::string, size_t> votes;
    for (size_t row = 1; row < table.n_rows(); ++row) {
      if (auto tag = CellVoteTag(table.cell(row, col))) ++votes[*tag];
    }
    ColumnClass cls;
    cls.column = col;
    const size_t entity_votes = votes.count(std::string(kEntityTag))
                                    ? votes[std::string(kEntityTag)]
                                    : 0;
    const std::string* best = nullptr;
    size_t best_votes = 0;
    for (const auto& [tag, n] : votes) {
      if (tag == kEntityTag) continue;
      if (n > best_votes) {
        best = &tag;
        best_votes = n;
      }
    }
    if (best != nullptr && best_votes > entity_votes) {
      cls.kind = ColumnKind::kLiteral;
      cls.tag = *best;
      cls.subkind = SubkindForTag(*best);
    }
    out.push_back(std::move(cls));
  }
  return out;
}

CandidateDistribution SignalLookupTypes(std::span<const CandidateDistribution> cells,
                                        const KnowledgeGraph& kg) {
  std::map<NodeId, double> mass;
  for (const CandidateDistribution& cell : cells) {
    for (const auto& [entity, p] : cell) {
      const std::optional<NodeId> id = kg.Find(entity);
      if (!id) continue;
      for (NodeId type : kg.TypeIdsOf(*id)) mass[type] += p;
    }
  }
  ScoreMap raw;
  for (const auto& [type, m] : mass) raw[kg.Iri(type)] = m;
  return CandidateDistribution::Normalize(raw);
}

CandidateDistribution SignalNerTypes(std::span<const CellContext> cells) {
  ScoreMap votes;
  for (const CellContext& cell : cells) {
    for (const std::string& cls : cell.mapped_classes) votes[cls] += 1.0;
  }
  return CandidateDistribution::Normalize(votes);
}

CandidateDistribution SignalHeaderTypes(std::string_view header, const KnowledgeGraph& kg,
                                        double floor) {
  if (header.empty()) return {};
  const std::u32string folded = ToCodePoints(FoldCaseUtf8(header));
  ScoreMap raw;
  for (const std::string& cls : kg.classes()) {
    double best = 0.0;
    for (const std::string& label : kg.ClassLabels(cls)) {
      best = std::max(best, NormalizedSimilarity(folded, ToCodePoints(FoldCaseUtf8(label))));
    }
    if (best >= floor && best > 0.0) raw[cls] = best;
  }
  return CandidateDistribution::Normalize(raw);
}

CandidateDistribution AggregateTypeSignals(const TypeSignalBundle& bundle) {
  const std::array<WeightedSignal, 4> signals = {
      WeightedSignal{&bundle.s1, bundle.weights[0]},
      WeightedSignal{&bundle.s2, bundle.weights[1]},
      WeightedSignal{&bundle.s3, bundle.weights[2]},
      WeightedSignal{&bundle.s4, bundle.weights[3]},
  };
  return AggregateSignals(signals, bundle.aggregation, bundle.beta);
}

}  // namespace tabmatch
