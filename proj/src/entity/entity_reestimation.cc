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

#include "entity/entity_reestimation.h"

#include <algorithm>
#include <array>
#include <cstdio>
#include <regex>

#include "relation/relation_estimation.h"
#include "text/similarity.h"
#include "text/unicode.h"

namespace tabmatch {
namespace {

constexpr std::array<std::string_view, 5> kStopwords = {"of", "the", "a", "an", "and"};
constexpr std::array<std::string_view, 4> kHonorifics = {"mrs", "mr", "dr", "prof"};

std::optional<int> MonthNumber(std::string_view name) {
  static constexpr std::array<std::string_view, 12> kMonths = {
      "january", "february", "march",     "april",   "may",      "june",
      "july",    "august",   "september", "october", "november", "december"};
  const std::string folded = FoldCaseUtf8(name);
  for (size_t i = 0; i < kMonths.size(); ++i) {
    if (folded == kMonths[i]) return static_cast<int>(i) + 1;
    if (folded.size() == 3 && kMonths[i].substr(0, 3) == folded) return static_cast<int>(i) + 1;
    if (folded.size() == 4 && folded.back() == '.' && kMonths[i].substr(0, 3) == folded.substr(0, 3)) {
      return static_cast<int>(i) + 1;
    }
  }
  return std::nullopt;
}

std::optional<std::string> FormatDate(int year, int month, int day) {
  if (month < 1 || month > 12) return std::nullopt;
  if (day < 0 || day > 31) return std::nullopt;
  char buf[16];
  if (day == 0) {
    std::snprintf(buf, sizeof(buf), "%04d-%02d", year, month);
  } else {
    std::snprintf(buf, sizeof(buf), "%04d-%02d-%02d", year, month, day);
  }
  return std::string(buf);
}

}  // namespace

CandidateDistribution SignalTypeConsistency(const CandidateDistribution& candidates,
                                            const CandidateDistribution& col_types,
                                            const KnowledgeGraph& kg) {
  if (col_types.empty()) return {};
  ScoreMap raw;
  for (const auto& [entity, p] : candidates) {
    const std::optional<NodeId> id = kg.Find(entity);
    if (!id) continue;
    double best = 0.0;
    for (NodeId t : kg.TypeIdsOf(*id)) best = std::max(best, col_types.Get(kg.Iri(t)));
    if (best > 0.0) raw[entity] = best;
  }
  return CandidateDistribution::Normalize(raw);
}

std::string FoldAlnum(std::string_view text) {
  std::u32string out;
  for (char32_t c : ToCodePoints(FoldCaseUtf8(text))) {
    if (IsLetter(c) || IsDigit(c)) out.push_back(c);
  }
  return ToUtf8(out);
}

std::string Initials(std::string_view label) {
  std::u32string initials;
  size_t words = 0;
  const std::u32string cps = ToCodePoints(label);
  size_t i = 0;
  while (i < cps.size()) {
    while (i < cps.size() && !(IsLetter(cps[i]) || IsDigit(cps[i]))) ++i;
    const size_t start = i;
    while (i < cps.size() && (IsLetter(cps[i]) || IsDigit(cps[i]))) ++i;
    if (start == i) break;
    const std::u32string word = cps.substr(start, i - start);
    const std::string folded = FoldCaseUtf8(ToUtf8(word));
    if (std::find(kStopwords.begin(), kStopwords.end(), folded) != kStopwords.end()) continue;
    initials.push_back(ToUpper(word.front()));
    ++words;
  }
  if (words < 2) return {};
  return ToUtf8(initials);
}

std::optional<std::string> CanonicalDate(std::string_view text) {
  static const std::regex kIso(R"(^(\d{4})[-/](\d{1,2})[-/](\d{1,2})$)");
  static const std::regex kDotted(R"(^(\d{1,2})\.(\d{1,2})\.(\d{4})$)");
  static const std::regex kDayMonth(R"(^(\d{1,2})(?:st|nd|rd|th)? ([A-Za-z]+\.?),? (\d{4})$)");
  static const std::regex kMonthDay(R"(^([A-Za-z]+\.?) (\d{1,2})(?:st|nd|rd|th)?,? (\d{4})$)");
  static const std::regex kMonthYear(R"(^([A-Za-z]+\.?),? (\d{4})$)");
  static const std::regex kYearMonth(R"(^(\d{4})-(\d{2})$)");
  const std::string s(text);
  std::smatch m;
  auto num = [&](int i) { return std::stoi(m[i].str()); };
  if (std::regex_match(s, m, kIso)) return FormatDate(num(1), num(2), num(3));
  if (std::regex_match(s, m, kDotted)) return FormatDate(num(3), num(2), num(1));
  if (std::regex_match(s, m, kDayMonth)) {
    if (auto month = MonthNumber(m[2].str())) return FormatDate(num(3), *month, num(1));
    return std::nullopt;
  }
  if (std::regex_match(s, m, kMonthDay)) {
    if (auto month = MonthNumber(m[1].str())) return FormatDate(num(3), *month, num(2));
    return std::nullopt;
  }
  if (std::regex_match(s, m, kMonthYear)) {
    if (auto month = MonthNumber(m[1].str())) return FormatDate(num(2), *month, 0);
    return std::nullopt;
  }
  if (std::regex_match(s, m, kYearMonth)) return FormatDate(num(1), num(2), 0);
  return std::nullopt;
}

std::string_view StripHonorific(std::string_view text) {
  const std::string folded = FoldCaseUtf8(text.substr(0, std::min<size_t>(text.size(), 6)));
  for (std::string_view h : kHonorifics) {
    if (folded.compare(0, h.size(), h) != 0) continue;
    size_t pos = h.size();
    if (pos < text.size() && text[pos] == '.') ++pos;
    if (pos >= text.size() || text[pos] != ' ') continue;
    while (pos < text.size() && text[pos] == ' ') ++pos;
    return text.substr(pos);
  }
  return text;
}

bool AbbreviationMatch(std::string_view cell, std::string_view label) {
  const std::string cell_alnum = FoldAlnum(cell);
  if (cell_alnum.empty()) return false;
  const std::string initials = Initials(label);
  if (!initials.empty() && FoldAlnum(initials) == cell_alnum) return true;
  const auto cell_date = CanonicalDate(cell);
  if (cell_date && cell_date == CanonicalDate(label)) return true;
  const std::string_view cell_bare = StripHonorific(cell);
  const std::string_view label_bare = StripHonorific(label);
  if (cell_bare.size() != cell.size() || label_bare.size() != label.size()) {
    const std::string a = FoldAlnum(cell_bare);
    if (!a.empty() && a == FoldAlnum(label_bare)) return true;
  }
  return false;
}

double StringSimilarityScore(std::string_view cell, std::span<const std::string> labels) {
  double lev = 0.0;
  bool abbr = false;
  for (const std::string& label : labels) {
    lev = std::max(lev, LabelSimilarity(cell, label));
    if (!abbr) abbr = AbbreviationMatch(cell, label);
  }
  return abbr ? (lev + 1.0) / 2.0 : lev;
}

CandidateDistribution SignalStringSimilarity(const CandidateDistribution& candidates,
                                             std::string_view cell,
                                             const KnowledgeGraph& kg) {
  if (cell.empty()) return {};
  ScoreMap raw;
  for (const auto& [entity, p] : candidates) {
    const std::optional<NodeId> id = kg.Find(entity);
    if (!id) continue;
    const double score = StringSimilarityScore(cell, kg.Labels(*id));
    if (score > 0.0) raw[entity] = score;
  }
  return CandidateDistribution::Normalize(raw);
}

std::optional<double> RowContextScore(NodeId entity, std::span<const RowCell> others,
                                      const KnowledgeGraph& kg) {
  double total = 0.0;
  size_t counted = 0;
  for (const RowCell& other : others) {
    if (other.value.empty()) continue;
    ++counted;
    double best = 0.0;
    if (other.entity_column && !other.candidates.empty()) {
      auto linked = [&](std::span<const Edge> edges) {
        for (const Edge& e : edges) {
          if (std::binary_search(other.candidates.begin(), other.candidates.end(), e.target)) {
            return true;
          }
        }
        return false;
      };
      if (linked(kg.OutEdges(entity)) || linked(kg.InEdges(entity))) best = 1.0;
    }
    if (best < 1.0) {
      const PreparedCell cell = PrepareCell(other.value);
      for (const LiteralAttribute& attr : kg.LiteralAttributes(entity)) {
        best = std::max(best, LiteralRelevance(attr, cell, best));
        if (best >= 1.0) break;
      }
    }
    total += best;
  }
  if (counted == 0) return std::nullopt;
  return total / static_cast<double>(counted);
}

CandidateDistribution SignalRowContext(const CandidateDistribution& candidates,
                                       std::span<const RowCell> others,
                                       const KnowledgeGraph& kg) {
  ScoreMap raw;
  for (const auto& [entity, p] : candidates) {
    const std::optional<NodeId> id = kg.Find(entity);
    if (!id) continue;
    if (auto score = RowContextScore(*id, others, kg); score && *score > 0.0) {
      raw[entity] = *score;
    }
  }
  return CandidateDistribution::Normalize(raw);
}

CandidateDistribution Reestimate(const EntitySignalBundle& bundle) {
  if (bundle.s7.empty()) return {};
  const std::array<WeightedSignal, 4> signals = {
      WeightedSignal{&bundle.s7, bundle.weights[0]},
      WeightedSignal{&bundle.s8, bundle.weights[1]},
      WeightedSignal{&bundle.s9, bundle.weights[2]},
      WeightedSignal{&bundle.s10, bundle.weights[3]},
  };
  return AggregateSignals(signals, bundle.aggregation, std::nullopt, &bundle.s7);
}

}  // namespace tabmatch
