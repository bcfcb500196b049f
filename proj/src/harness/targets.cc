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

#include "harness/targets.h"

#include <charconv>
#include <set>
#include <sstream>

#include "util/csv.h"
#include "util/error.h"

namespace tabmatch {
namespace {

std::string At(const std::string& origin, size_t line) {
  return origin + ":" + std::to_string(line) + ": ";
}

size_t Index(const std::string& field, const std::string& where, const char* what) {
  size_t value = 0;
  const char* begin = field.data();
  const char* end = begin + field.size();
  while (begin < end && *begin == ' ') ++begin;
  while (end > begin && end[-1] == ' ') --end;
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr != end || begin == end) {
    throw ParseError(where + std::string(what) + " '" + field + "' is not a non-negative integer");
  }
  return value;
}

void Need(const NumberedRow& row, size_t n, const std::string& where) {
  if (row.fields.size() < n) {
    throw ParseError(where + "expected at least " + std::to_string(n) + " fields, found " +
                     std::to_string(row.fields.size()));
  }
  if (row.fields[0].empty()) throw ParseError(where + "empty table id");
}

template <typename T>
void DedupInto(std::vector<T>& out, std::set<T>& seen, T value, const std::string& where,
               std::vector<std::string>* warnings) {
  if (!seen.insert(value).second) {
    if (warnings) warnings->push_back(where + "duplicate target ignored");
    return;
  }
  out.push_back(std::move(value));
}

template <typename Key, typename Answer>
void DedupAnswer(std::vector<Answer>& out, std::set<Key>& seen, Answer value,
                 const std::string& where, std::vector<std::string>* warnings) {
  if (!seen.insert(value.target).second) {
    if (warnings) warnings->push_back(where + "duplicate answer ignored");
    return;
  }
  out.push_back(std::move(value));
}

std::vector<std::string> SplitClasses(const std::string& field) {
  std::vector<std::string> out;
  std::istringstream in(field);
  std::string cls;
  std::set<std::string> seen;
  while (in >> cls) {
    if (seen.insert(cls).second) out.push_back(cls);
  }
  return out;
}

const AnnotationSet* Find(const std::map<std::string, AnnotationSet>& a, const std::string& t) {
  auto it = a.find(t);
  return it == a.end() ? nullptr : &it->second;
}

}  // namespace

std::vector<std::string> TargetSet::Tables() const {
  std::set<std::string> ids;
  for (const auto& t : cea) ids.insert(t.table);
  for (const auto& t : cta) ids.insert(t.table);
  for (const auto& t : cpa) ids.insert(t.table);
  return {ids.begin(), ids.end()};
}

std::vector<CeaTarget> ParseCeaTargets(std::string_view content, const std::string& origin,
                                       std::vector<std::string>* warnings) {
  std::vector<CeaTarget> out;
  std::set<CeaTarget> seen;
  for (const NumberedRow& row : ParseCsvWithLines(content)) {
    const std::string where = At(origin, row.line);
    Need(row, 3, where);
    DedupInto(out, seen,
              CeaTarget{row.fields[0], Index(row.fields[1], where, "col_id"),
                        Index(row.fields[2], where, "row_id")},
              where, warnings);
  }
  return out;
}

std::vector<CtaTarget> ParseCtaTargets(std::string_view content, const std::string& origin,
                                       std::vector<std::string>* warnings) {
  std::vector<CtaTarget> out;
  std::set<CtaTarget> seen;
  for (const NumberedRow& row : ParseCsvWithLines(content)) {
    const std::string where = At(origin, row.line);
    Need(row, 2, where);
    DedupInto(out, seen, CtaTarget{row.fields[0], Index(row.fields[1], where, "col_id")}, where,
              warnings);
  }
  return out;
}

std::vector<CpaTarget> ParseCpaTargets(std::string_view content, const std::string& origin,
                                       std::vector<std::string>* warnings) {
  std::vector<CpaTarget> out;
  std::set<CpaTarget> seen;
  for (const NumberedRow& row : ParseCsvWithLines(content)) {
    const std::string where = At(origin, row.line);
    Need(row, 3, where);
    DedupInto(out, seen,
              CpaTarget{row.fields[0], Index(row.fields[1], where, "head_col_id"),
                        Index(row.fields[2], where, "tail_col_id")},
              where, warnings);
  }
  return out;
}

TargetSet ReadTargets(const std::string& cea_path, const std::string& cta_path,
                      const std::string& cpa_path) {
  TargetSet set;
  if (!cea_path.empty()) set.cea = ParseCeaTargets(ReadFile(cea_path), cea_path, &set.warnings);
  if (!cta_path.empty()) set.cta = ParseCtaTargets(ReadFile(cta_path), cta_path, &set.warnings);
  if (!cpa_path.empty()) set.cpa = ParseCpaTargets(ReadFile(cpa_path), cpa_path, &set.warnings);
  return set;
}

std::vector<CeaAnswer> ParseCeaAnswers(std::string_view content, const std::string& origin,
                                       std::vector<std::string>* warnings) {
  std::vector<CeaAnswer> out;
  std::set<CeaTarget> seen;
  for (const NumberedRow& row : ParseCsvWithLines(content)) {
    const std::string where = At(origin, row.line);
    Need(row, 4, where);
    CeaAnswer a{{row.fields[0], Index(row.fields[1], where, "col_id"),
                 Index(row.fields[2], where, "row_id")},
                row.fields[3]};
    if (a.entity.empty()) throw ParseError(where + "empty entity");
    DedupAnswer(out, seen, std::move(a), where, warnings);
  }
  return out;
}

std::vector<CtaAnswer> ParseCtaAnswers(std::string_view content, const std::string& origin,
                                       std::vector<std::string>* warnings) {
  std::vector<CtaAnswer> out;
  std::set<CtaTarget> seen;
  for (const NumberedRow& row : ParseCsvWithLines(content)) {
    const std::string where = At(origin, row.line);
    Need(row, 3, where);
    CtaAnswer a{{row.fields[0], Index(row.fields[1], where, "col_id")},
                SplitClasses(row.fields[2])};
    if (a.classes.empty()) throw ParseError(where + "empty class list");
    DedupAnswer(out, seen, std::move(a), where, warnings);
  }
  return out;
}

std::vector<CpaAnswer> ParseCpaAnswers(std::string_view content, const std::string& origin,
                                       std::vector<std::string>* warnings) {
  std::vector<CpaAnswer> out;
  std::set<CpaTarget> seen;
  for (const NumberedRow& row : ParseCsvWithLines(content)) {
    const std::string where = At(origin, row.line);
    Need(row, 4, where);
    CpaAnswer a{{row.fields[0], Index(row.fields[1], where, "head_col_id"),
                 Index(row.fields[2], where, "tail_col_id")},
                row.fields[3]};
    if (a.relation.empty()) throw ParseError(where + "empty property");
    DedupAnswer(out, seen, std::move(a), where, warnings);
  }
  return out;
}

std::string FormatCea(const std::vector<CeaTarget>& targets,
                      const std::map<std::string, AnnotationSet>& annotations) {
  std::string out;
  for (const CeaTarget& t : targets) {
    const AnnotationSet* set = Find(annotations, t.table);
    if (!set) continue;
    auto it = set->cea.find({t.row, t.col});
    if (it == set->cea.end()) continue;
    out += CsvLine({t.table, std::to_string(t.col), std::to_string(t.row), it->second}) + "\n";
  }
  return out;
}

std::string FormatCta(const std::vector<CtaTarget>& targets,
                      const std::map<std::string, AnnotationSet>& annotations) {
  std::string out;
  for (const CtaTarget& t : targets) {
    const AnnotationSet* set = Find(annotations, t.table);
    if (!set) continue;
    auto it = set->cta.find(t.col);
    if (it == set->cta.end() || it->second.empty()) continue;
    std::string classes;
    for (const std::string& c : it->second) {
      if (!classes.empty()) classes.push_back(' ');
      classes += c;
    }
    out += CsvLine({t.table, std::to_string(t.col), classes}) + "\n";
  }
  return out;
}

std::string FormatCpa(const std::vector<CpaTarget>& targets,
                      const std::map<std::string, AnnotationSet>& annotations) {
  std::string out;
  for (const CpaTarget& t : targets) {
    const AnnotationSet* set = Find(annotations, t.table);
    if (!set) continue;
    auto it = set->cpa.find({t.head, t.tail});
    if (it == set->cpa.end()) continue;
    out += CsvLine({t.table, std::to_string(t.head), std::to_string(t.tail), it->second}) + "\n";
  }
  return out;
}

}  // namespace tabmatch
