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

#ifndef TABMATCH_TABLE_ANNOTATORS_H_
#define TABMATCH_TABLE_ANNOTATORS_H_

#include <map>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "table/table.h"

namespace tabmatch {

class DataTypePredictor {
 public:
  virtual ~DataTypePredictor() = default;
  virtual DataTypeTag Predict(std::string_view value) const = 0;
};

// Ordered regular-expression rules over the thirteen value types; the first
// rule that fires wins, anything else is `text`.
class RuleDataTypePredictor : public DataTypePredictor {
 public:
  DataTypeTag Predict(std::string_view value) const override;
  static const RuleDataTypePredictor& Default();
};

class EntityTypePredictor {
 public:
  virtual ~EntityTypePredictor() = default;
  virtual NerTag Predict(std::string_view value) const = 0;
};

// Gazetteer lookup, then value-shape rules (years, dates, numbers, money),
// then keyword/suffix lists for ORG, GPE, LOC, FAC and EVENT, honorifics for
// PERSON, and finally capitalized 2-4 word phrases as PERSON.
class HeuristicEntityTagger : public EntityTypePredictor {
 public:
  HeuristicEntityTagger() = default;
  // `gazetteer` maps case-folded phrases to tags.
  explicit HeuristicEntityTagger(std::unordered_map<std::string, NerTag> gazetteer);

  // CSV with header `ner_tag,phrase`.
  static HeuristicEntityTagger FromGazetteerFile(const std::string& path);

  void AddPhrase(std::string_view phrase, NerTag tag);
  NerTag Predict(std::string_view value) const override;

 private:
  std::unordered_map<std::string, NerTag> gazetteer_;
};

// NER tag -> knowledge-graph classes. Only entity-related tags may map.
class NerClassMap {
 public:
  NerClassMap() = default;

  // Mapping used when no file is configured (DBpedia ontology classes).
  static const NerClassMap& Default();
  // CSV with header `ner_tag,class_iri`; one row per (tag, class) pair.
  static NerClassMap FromFile(const std::string& path);
  static NerClassMap FromCsv(std::string_view content, const std::string& origin);

  void Add(NerTag tag, std::string class_iri);
  const std::vector<std::string>& ClassesFor(NerTag tag) const;

 private:
  std::map<NerTag, std::vector<std::string>> classes_;
};

// The tag plus its mapped classes, for one cell.
std::pair<NerTag, std::vector<std::string>> PredictEntityType(
    std::string_view value, const EntityTypePredictor& tagger,
    const NerClassMap& mapping);

}  // namespace tabmatch

#endif  // TABMATCH_TABLE_ANNOTATORS_H_
