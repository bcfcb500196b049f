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

#include <gtest/gtest.h>

#include <filesystem>

#include "table/annotators.h"
#include "table/ingest.h"
#include "table/language.h"
#include "util/csv.h"
#include "util/error.h"

namespace tabmatch {
namespace {

const std::string kDbo = "http://dbpedia.org/ontology/";

TEST(LanguageTest, English) {
  const LanguageGuess g = NgramLanguagePredictor::Default().Predict("the quick brown fox jumps");
  EXPECT_EQ(g.code, "en");
  EXPECT_GT(g.confidence, 0.5);
}

TEST(LanguageTest, German) {
  const LanguageGuess g = NgramLanguagePredictor::Default().Predict("der schnelle braune Fuchs");
  EXPECT_EQ(g.code, "de");
  EXPECT_GT(g.confidence, 0.5);
}

TEST(LanguageTest, EmptyFallsBack) {
  const LanguageGuess g = NgramLanguagePredictor::Default().Predict("");
  EXPECT_EQ(g.code, "en");
  EXPECT_EQ(g.confidence, 0.0);
  EXPECT_TRUE(g.fallback);
}

TEST(DataTypeTest, Examples) {
  const auto& p = RuleDataTypePredictor::Default();
  EXPECT_EQ(p.Predict("12.5"), DataTypeTag::kNumber);
  EXPECT_EQ(p.Predict("a@b.com"), DataTypeTag::kEmail);
  EXPECT_EQ(p.Predict("Tokyo"), DataTypeTag::kText);
  EXPECT_EQ(p.Predict("https://example.org/x"), DataTypeTag::kUrl);
  EXPECT_EQ(p.Predict("2019-08-15"), DataTypeTag::kTime);
  EXPECT_EQ(p.Predict("$12"), DataTypeTag::kAmountOfMoney);
  EXPECT_EQ(p.Predict("12 km"), DataTypeTag::kDistance);
  EXPECT_EQ(p.Predict("3rd"), DataTypeTag::kOrdinal);
  EXPECT_EQ(p.Predict("4111 1111 1111 1111"), DataTypeTag::kCreditCardNumber);
}

TEST(DataTypeTest, Deterministic) {
  const auto& p = RuleDataTypePredictor::Default();
  for (const char* v : {"12.5", "x", "a@b.com", "12 kg", "", "10:30"}) {
    EXPECT_EQ(p.Predict(v), p.Predict(v));
  }
}

TEST(TagNamesTest, RoundTrip) {
  for (int i = 0; i <= static_cast<int>(DataTypeTag::kText); ++i) {
    const auto tag = static_cast<DataTypeTag>(i);
    EXPECT_EQ(ParseDataTypeTag(DataTypeTagName(tag)), tag);
  }
  for (int i = 0; i <= static_cast<int>(NerTag::kText); ++i) {
    const auto tag = static_cast<NerTag>(i);
    EXPECT_EQ(ParseNerTag(NerTagName(tag)), tag);
  }
}

TEST(EntityTypeTest, YearIsUnmappedDate) {
  HeuristicEntityTagger tagger;
  auto [tag, classes] = PredictEntityType("1984", tagger, NerClassMap::Default());
  EXPECT_EQ(tag, NerTag::kDate);
  EXPECT_TRUE(classes.empty());
}

TEST(EntityTypeTest, GazetteerPlace) {
  HeuristicEntityTagger tagger;
  tagger.AddPhrase("Tokyo", NerTag::kGpe);
  const NerClassMap map = NerClassMap::FromCsv("ner_tag,class_iri\nGPE," + kDbo + "Place\n", "m");
  auto [tag, classes] = PredictEntityType("tokyo", tagger, map);
  EXPECT_EQ(tag, NerTag::kGpe);
  EXPECT_EQ(classes, std::vector<std::string>{kDbo + "Place"});
}

TEST(EntityTypeTest, NumberIsCardinal) {
  HeuristicEntityTagger tagger;
  auto [tag, classes] = PredictEntityType("12.5", tagger, NerClassMap::Default());
  EXPECT_EQ(tag, NerTag::kCardinal);
  EXPECT_TRUE(classes.empty());
}

TEST(EntityTypeTest, ClassMapRejectsLiteralTags) {
  EXPECT_THROW(NerClassMap::FromCsv("DATE,http://x/C\n", "m"), Error);
  EXPECT_THROW(NerClassMap::FromCsv("NOPE,http://x/C\n", "m"), Error);
}

TEST(IngestTest, ShapeAndHeader) {
  const Table t = IngestCsv("City,Country\nTokyo,Japan\nParis,France\n", "t",
                            Annotators::Default());
  EXPECT_EQ(t.n_rows(), 3u);
  EXPECT_EQ(t.n_cols(), 2u);
  EXPECT_EQ(t.header(1), "Country");
  EXPECT_EQ(t.value(2, 0), "Paris");
  EXPECT_TRUE(t.warnings().empty());
}

TEST(IngestTest, RaggedRowIsPadded) {
  const Table t = IngestCsv("a,b,c\n1,2\n", "t", Annotators::Default());
  ASSERT_EQ(t.n_cols(), 3u);
  EXPECT_EQ(t.value(1, 2), "");
  EXPECT_FALSE(t.warnings().empty());
}

TEST(IngestTest, EveryCellTagged) {
  const Table t = IngestCsv("Name,Born,Mail\nAkira Tanaka,1948,a@b.com\n,,\n", "t",
                            Annotators::Default());
  EXPECT_EQ(t.cell(1, 1).entity_type, NerTag::kDate);
  EXPECT_EQ(t.cell(1, 2).datatype, DataTypeTag::kEmail);
  EXPECT_EQ(t.cell(2, 0).datatype, DataTypeTag::kText);
  EXPECT_EQ(t.cell(2, 0).entity_type, NerTag::kText);
}

TEST(IngestTest, EnglishPlaceNames) {
  const Table t = IngestCsv(
      "City,Country\nNew York,United States\nLondon,United Kingdom\nSydney,Australia\n"
      "Cape Town,South Africa\nToronto,Canada\n",
      "t", Annotators::Default());
  EXPECT_EQ(t.language().code, "en");
  EXPECT_GT(t.language().confidence, 0.5);
}

TEST(IngestTest, MissingFileIsIoError) {
  try {
    IngestTable("/nonexistent/t.csv", Annotators::Default());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kIo);
  }
}

}  // namespace
}  // namespace tabmatch
