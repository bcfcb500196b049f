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

#include "table/annotators.h"

#include <algorithm>
#include <regex>
#include <sstream>

#include "text/numbers.h"
#include "text/unicode.h"
#include "util/csv.h"
#include "util/error.h"

namespace tabmatch {
namespace {

#define TABMATCH_RX(name, pattern)                                   \
  const std::regex& name() {                                         \
    static const std::regex rx(pattern, std::regex::icase |          \
                                            std::regex::optimize);   \
    return rx;                                                       \
  }

constexpr const char* kNum = R"([+-]?(?:\d{1,3}(?:,\d{3})+|\d+)(?:\.\d+)?)";

TABMATCH_RX(EmailRx, R"([A-Za-z0-9._%+-]+@[A-Za-z0-9.-]+\.[A-Za-z]{2,})")
TABMATCH_RX(UrlRx,
            R"((?:https?|ftp)://\S+|www\.\S+\.\S+|[A-Za-z0-9-]+(?:\.[A-Za-z0-9-]+)*\.(?:com|org|net|edu|gov|io|info|co\.uk|de|fr|jp)(?:/\S*)?)")
TABMATCH_RX(CardRx, R"((?:\d{4}[ -]?){3}\d{1,7})")
TABMATCH_RX(PhoneRx, R"(\+?\(?\d{1,4}\)?(?:[ .-]?\(?\d{1,4}\)?){2,6})")
TABMATCH_RX(IsoDateRx, R"(\d{4}-\d{1,2}-\d{1,2}(?:[T ]\d{1,2}:\d{2}(?::\d{2})?)?)")
TABMATCH_RX(SlashDateRx, R"(\d{1,2}[/.]\d{1,2}[/.]\d{2,4})")
TABMATCH_RX(
    WordDateRx,
    R"((?:\d{1,2}(?:st|nd|rd|th)? )?(?:jan(?:uary)?|feb(?:ruary)?|mar(?:ch)?|apr(?:il)?|may|june?|july?|aug(?:ust)?|sep(?:t(?:ember)?)?|oct(?:ober)?|nov(?:ember)?|dec(?:ember)?)\.?(?: \d{1,2}(?:st|nd|rd|th)?,?)?(?: \d{4})?)")
TABMATCH_RX(ClockRx, R"(\d{1,2}:\d{2}(?::\d{2})?(?: ?[ap]\.?m\.?)?|\d{1,2} ?[ap]\.?m\.?)")
TABMATCH_RX(
    DurationRx,
    R"((?:\d+(?:\.\d+)?|an?|one|two|three|four|five|ten) ?(?:s|secs?|seconds?|mins?|minutes?|h|hrs?|hours?|days?|weeks?|months?|years?))")
TABMATCH_RX(TemperatureRx,
            (std::string(kNum) + R"( ?(?:°|º|deg(?:rees?)?)? ?(?:c|f|k|celsius|fahrenheit|kelvin)|)" +
             kNum + R"( ?(?:°|º|degrees?))")
                .c_str())
TABMATCH_RX(
    MoneyRx,
    (std::string(R"((?:\$|€|£|¥|usd|eur|gbp|jpy|us\$) ?)") + kNum +
     R"((?: ?(?:k|m|bn|million|billion))?|)" + kNum +
     R"( ?(?:\$|€|£|¥|usd|eur|gbp|jpy|dollars?|euros?|pounds sterling|yen))")
        .c_str())
TABMATCH_RX(DistanceRx,
            (std::string(kNum) +
             R"( ?(?:km|m|cm|mm|mi|miles?|ft|feet|foot|yards?|yd|inch(?:es)?|in|kilomet(?:er|re)s?|met(?:er|re)s?|centimet(?:er|re)s?))")
                .c_str())
TABMATCH_RX(VolumeRx,
            (std::string(kNum) +
             R"( ?(?:l|ml|cl|dl|litres?|liters?|millilit(?:er|re)s?|gallons?|gal|m3|m³|cubic met(?:er|re)s?|cups?|pints?))")
                .c_str())
TABMATCH_RX(QuantityRx,
            (std::string(kNum) +
             R"( ?(?:%|kg|g|mg|lbs?|pounds?|tons?|tonnes?|t|oz|ounces?|grams?|kilograms?|percent|pieces?|items?))")
                .c_str())
TABMATCH_RX(OrdinalRx,
            R"(\d+(?:st|nd|rd|th)|first|second|third|fourth|fifth|sixth|seventh|eighth|ninth|tenth)")
TABMATCH_RX(YearRx, R"((?:1[0-9]|20)\d\d)")
TABMATCH_RX(PercentRx, (std::string(kNum) + R"( ?(?:%|percent|per cent))").c_str())

bool Matches(const std::regex& rx, const std::string& s) {
  return std::regex_match(s, rx);
}

size_t CountDigits(std::string_view s) {
  size_t n = 0;
  for (char c : s) n += (c >= '0' && c <= '9');
  return n;
}

bool LuhnValid(std::string_view s) {
  int sum = 0;
  bool doubled = false;
  for (auto it = s.rbegin(); it != s.rend(); ++it) {
    if (*it < '0' || *it > '9') continue;
    int d = *it - '0';
    if (doubled) {
      d *= 2;
      if (d > 9) d -= 9;
    }
    sum += d;
    doubled = !doubled;
  }
  return sum % 10 == 0;
}

bool IsDate(const std::string& s) {
  return Matches(IsoDateRx(), s) || Matches(SlashDateRx(), s) ||
         Matches(WordDateRx(), s);
}

std::vector<std::string> Words(std::string_view s) {
  std::vector<std::string> words;
  std::istringstream in{std::string(s)};
  std::string w;
  while (in >> w) words.push_back(w);
  return words;
}

std::string StripPunct(std::string w) {
  while (!w.empty() && (w.back() == '.' || w.back() == ',')) w.pop_back();
  return w;
}

bool Capitalized(const std::string& word) {
  std::u32string cps = ToCodePoints(word);
  return !cps.empty() && IsUpper(cps.front());
}

bool AnyWordIn(const std::vector<std::string>& words,
               std::initializer_list<std::string_view> keywords) {
  for (const auto& w : words) {
    const std::string folded = FoldCaseUtf8(StripPunct(w));
    for (auto k : keywords) {
      if (folded == k) return true;
    }
  }
  return false;
}

}  // namespace

DataTypeTag RuleDataTypePredictor::Predict(std::string_view value) const {
  const std::string s(value);
  if (s.empty()) return DataTypeTag::kText;
  if (Matches(EmailRx(), s)) return DataTypeTag::kEmail;
  if (Matches(UrlRx(), s)) return DataTypeTag::kUrl;
  if (Matches(CardRx(), s) && CountDigits(s) >= 13 && CountDigits(s) <= 19 &&
      LuhnValid(s)) {
    return DataTypeTag::kCreditCardNumber;
  }
  if (IsDate(s) || Matches(ClockRx(), s)) return DataTypeTag::kTime;
  if (Matches(PhoneRx(), s) && CountDigits(s) >= 7 &&
      s.find_first_of("+()- .") != std::string::npos && !ParseNumber(s)) {
    return DataTypeTag::kPhoneNumber;
  }
  if (Matches(DurationRx(), s)) return DataTypeTag::kDuration;
  if (Matches(TemperatureRx(), s)) return DataTypeTag::kTemperature;
  if (Matches(MoneyRx(), s)) return DataTypeTag::kAmountOfMoney;
  if (Matches(DistanceRx(), s)) return DataTypeTag::kDistance;
  if (Matches(VolumeRx(), s)) return DataTypeTag::kVolume;
  if (Matches(QuantityRx(), s)) return DataTypeTag::kQuantity;
  if (Matches(OrdinalRx(), s)) return DataTypeTag::kOrdinal;
  if (ParseNumber(s)) return DataTypeTag::kNumber;
  return DataTypeTag::kText;
}

const RuleDataTypePredictor& RuleDataTypePredictor::Default() {
  static const RuleDataTypePredictor predictor;
  return predictor;
}

HeuristicEntityTagger::HeuristicEntityTagger(
    std::unordered_map<std::string, NerTag> gazetteer)
    : gazetteer_(std::move(gazetteer)) {}

HeuristicEntityTagger HeuristicEntityTagger::FromGazetteerFile(
    const std::string& path) {
  HeuristicEntityTagger tagger;
  const auto rows = ParseCsv(ReadFile(path));
  for (size_t i = 0; i < rows.size(); ++i) {
    if (i == 0 && !rows[i].empty() && rows[i][0] == "ner_tag") continue;
    if (rows[i].size() != 2) {
      throw ParseError(path + ":" + std::to_string(i + 1) +
                       ": expected `ner_tag,phrase`");
    }
    auto tag = ParseNerTag(rows[i][0]);
    if (!tag) {
      throw ParseError(path + ":" + std::to_string(i + 1) + ": unknown tag " +
                       rows[i][0]);
    }
    tagger.AddPhrase(rows[i][1], *tag);
  }
  return tagger;
}

void HeuristicEntityTagger::AddPhrase(std::string_view phrase, NerTag tag) {
  gazetteer_[FoldCaseUtf8(phrase)] = tag;
}

NerTag HeuristicEntityTagger::Predict(std::string_view value) const {
  const std::string s(value);
  if (s.empty()) return NerTag::kText;
  if (auto it = gazetteer_.find(FoldCaseUtf8(s)); it != gazetteer_.end()) {
    return it->second;
  }
  if (Matches(YearRx(), s) || IsDate(s)) return NerTag::kDate;
  if (Matches(ClockRx(), s)) return NerTag::kTime;
  if (Matches(PercentRx(), s)) return NerTag::kPercent;
  if (Matches(MoneyRx(), s)) return NerTag::kMoney;
  if (Matches(DistanceRx(), s) || Matches(VolumeRx(), s) ||
      Matches(QuantityRx(), s) || Matches(TemperatureRx(), s)) {
    return NerTag::kQuantity;
  }
  if (Matches(OrdinalRx(), s)) return NerTag::kOrdinal;
  if (ParseNumber(s)) return NerTag::kCardinal;

  const std::vector<std::string> words = Words(s);
  if (words.empty()) return NerTag::kText;
  if (AnyWordIn({words.front()}, {"mr", "mrs", "ms", "dr", "prof", "sir"})) {
    return NerTag::kPerson;
  }
  if (AnyWordIn(words, {"inc", "corp", "corporation", "ltd", "llc", "company",
                        "co", "university", "college", "institute",
                        "association", "bank", "group", "club", "fc", "party",
                        "agency", "foundation"})) {
    return NerTag::kOrg;
  }
  if (AnyWordIn(words, {"airport", "bridge", "stadium", "tower", "station",
                        "hospital", "museum", "cathedral", "highway"})) {
    return NerTag::kFac;
  }
  if (AnyWordIn(words, {"river", "mountain", "mount", "lake", "island", "sea",
                        "ocean", "valley", "bay", "desert", "forest"})) {
    return NerTag::kLoc;
  }
  if (AnyWordIn(words, {"city", "county", "province", "state", "republic",
                        "kingdom", "district", "prefecture"})) {
    return NerTag::kGpe;
  }
  if (AnyWordIn(words, {"festival", "war", "olympics", "championship", "cup",
                        "election", "summit"})) {
    return NerTag::kEvent;
  }
  if (words.size() >= 2 && words.size() <= 4) {
    bool all_capitalized = true;
    for (const auto& w : words) all_capitalized &= Capitalized(w);
    if (all_capitalized) return NerTag::kPerson;
  }
  return NerTag::kText;
}

const NerClassMap& NerClassMap::Default() {
  static const NerClassMap mapping = [] {
    NerClassMap m;
    const std::string dbo = "http://dbpedia.org/ontology/";
    m.Add(NerTag::kPerson, dbo + "Person");
    m.Add(NerTag::kNorp, dbo + "EthnicGroup");
    m.Add(NerTag::kFac, dbo + "ArchitecturalStructure");
    m.Add(NerTag::kOrg, dbo + "Organisation");
    m.Add(NerTag::kGpe, dbo + "Place");
    m.Add(NerTag::kLoc, dbo + "Place");
    m.Add(NerTag::kProduct, dbo + "Device");
    m.Add(NerTag::kEvent, dbo + "Event");
    m.Add(NerTag::kWorkOfArt, dbo + "Work");
    m.Add(NerTag::kLaw, dbo + "Document");
    m.Add(NerTag::kLanguage, dbo + "Language");
    return m;
  }();
  return mapping;
}

NerClassMap NerClassMap::FromFile(const std::string& path) {
  return FromCsv(ReadFile(path), path);
}

NerClassMap NerClassMap::FromCsv(std::string_view content,
                                 const std::string& origin) {
  NerClassMap m;
  const auto rows = ParseCsv(content);
  for (size_t i = 0; i < rows.size(); ++i) {
    if (i == 0 && !rows[i].empty() && rows[i][0] == "ner_tag") continue;
    const std::string where = origin + ":" + std::to_string(i + 1);
    if (rows[i].size() != 2) throw ParseError(where + ": expected `ner_tag,class_iri`");
    auto tag = ParseNerTag(rows[i][0]);
    if (!tag) throw ParseError(where + ": unknown tag " + rows[i][0]);
    if (!IsEntityRelated(*tag)) {
      throw ParseError(where + ": tag " + rows[i][0] + " cannot map to a class");
    }
    m.Add(*tag, rows[i][1]);
  }
  return m;
}

void NerClassMap::Add(NerTag tag, std::string class_iri) {
  auto& classes = classes_[tag];
  if (std::find(classes.begin(), classes.end(), class_iri) == classes.end()) {
    classes.push_back(std::move(class_iri));
  }
}

const std::vector<std::string>& NerClassMap::ClassesFor(NerTag tag) const {
  static const std::vector<std::string> kNone;
  auto it = classes_.find(tag);
  return it == classes_.end() ? kNone : it->second;
}

std::pair<NerTag, std::vector<std::string>> PredictEntityType(
    std::string_view value, const EntityTypePredictor& tagger,
    const NerClassMap& mapping) {
  const NerTag tag = tagger.Predict(value);
  if (!IsEntityRelated(tag)) return {tag, {}};
  return {tag, mapping.ClassesFor(tag)};
}

}  // namespace tabmatch
