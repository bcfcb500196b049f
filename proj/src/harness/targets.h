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

#ifndef TABMATCH_HARNESS_TARGETS_H_
#define TABMATCH_HARNESS_TARGETS_H_

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "voting/final_voting.h"

namespace tabmatch {

struct CeaTarget {
  std::string table;
  size_t col = 0;
  size_t row = 0;
  auto operator<=>(const CeaTarget&) const = default;
};

struct CtaTarget {
  std::string table;
  size_t col = 0;
  auto operator<=>(const CtaTarget&) const = default;
};

struct CpaTarget {
  std::string table;
  size_t head = 0;
  size_t tail = 0;
  auto operator<=>(const CpaTarget&) const = default;
};

struct TargetSet {
  std::vector<CeaTarget> cea;
  std::vector<CtaTarget> cta;
  std::vector<CpaTarget> cpa;
  std::vector<std::string> warnings;

  bool empty() const { return cea.empty() && cta.empty() && cpa.empty(); }
  // Sorted ids of every table referenced by some target.
  std::vector<std::string> Tables() const;
};

// Target files: `table_id,col_id,row_id` (CEA), `table_id,col_id` (CTA),
// `table_id,head_col_id,tail_col_id` (CPA). Extra trailing fields are
// ignored so annotated files can be read as targets. Duplicates are dropped
// with a warning. Throws ParseError with the line number.
std::vector<CeaTarget> ParseCeaTargets(std::string_view content, const std::string& origin,
                                       std::vector<std::string>* warnings);
std::vector<CtaTarget> ParseCtaTargets(std::string_view content, const std::string& origin,
                                       std::vector<std::string>* warnings);
std::vector<CpaTarget> ParseCpaTargets(std::string_view content, const std::string& origin,
                                       std::vector<std::string>* warnings);

// Empty paths are skipped.
TargetSet ReadTargets(const std::string& cea_path, const std::string& cta_path,
                      const std::string& cpa_path);

// Annotated rows as read back from output or gold files.
struct CeaAnswer {
  CeaTarget target;
  std::string entity;
};
struct CtaAnswer {
  CtaTarget target;
  std::vector<std::string> classes;
};
struct CpaAnswer {
  CpaTarget target;
  std::string relation;
};

// Rows without an answer field are rejected. Duplicate keys keep the first
// row and add a warning.
std::vector<CeaAnswer> ParseCeaAnswers(std::string_view content, const std::string& origin,
                                       std::vector<std::string>* warnings);
std::vector<CtaAnswer> ParseCtaAnswers(std::string_view content, const std::string& origin,
                                       std::vector<std::string>* warnings);
std::vector<CpaAnswer> ParseCpaAnswers(std::string_view content, const std::string& origin,
                                       std::vector<std::string>* warnings);

// Serializes the answers for the given targets, in target order; targets
// without an answer are omitted.
std::string FormatCea(const std::vector<CeaTarget>& targets,
                      const std::map<std::string, AnnotationSet>& annotations);
std::string FormatCta(const std::vector<CtaTarget>& targets,
                      const std::map<std::string, AnnotationSet>& annotations);
std::string FormatCpa(const std::vector<CpaTarget>& targets,
                      const std::map<std::string, AnnotationSet>& annotations);

}  // namespace tabmatch

#endif  // TABMATCH_HARNESS_TARGETS_H_
