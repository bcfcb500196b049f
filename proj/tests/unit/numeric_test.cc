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

#include <algorithm>
#include <filesystem>
#include <map>

#include "kg/knowledge_graph.h"
#include "numeric/numeric_labeling.h"
#include "support/fixtures.h"
#include "support/oracles.h"

namespace tabmatch {
namespace {

using testing::Iri;
using testing::Literal;
using testing::Rng;

const std::string kEx = "http://ex.org/";
const std::string kInt = "http://www.w3.org/2001/XMLSchema#integer";

std::vector<double> Sorted(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  return v;
}

TEST(KsStatisticTest, MatchesCdfOracle) {
  Rng rng(4);
  for (int i = 0; i < 500; ++i) {
    std::vector<double> a(rng.Below(15)), b(rng.Below(15));
    for (double& v : a) v = static_cast<double>(rng.Below(10));
    for (double& v : b) v = static_cast<double>(rng.Below(10));
    ASSERT_NEAR(KsStatistic(Sorted(a), Sorted(b)), testing::KsOracle(a, b), 1e-12);
  }
}

TEST(KsStatisticTest, IdenticalIsZero) {
  const std::vector<double> a = {1, 2, 3, 5, 8};
  EXPECT_EQ(KsStatistic(a, a), 0.0);
  EXPECT_EQ(KsStatistic(a, std::vector<double>{100, 200}), 1.0);
}

TEST(ProfilesTest, NoNumericLiteralsNoProfiles) {
  const KnowledgeGraph kg = KnowledgeGraph::FromTriples(
      {{Iri(kEx + "a"), kEx + "name", Literal("Alpha", "", "en")}});
  EXPECT_TRUE(BuildNumericProfiles(kg).empty());
}

TEST(ProfilesTest, ContainsExactlyTheRelationValues) {
  const testing::Fixture f = testing::MakeToyFixture();
  const KnowledgeGraph kg = KnowledgeGraph::FromTriples(f.triples);
  const std::string population = std::string(testing::kDbo) + "populationTotal";
  std::vector<double> oracle;
  for (const Triple& t : f.triples) {
    if (t.predicate == population) oracle.push_back(std::stod(t.object.value));
  }
  const auto profiles = BuildNumericProfiles(kg);
  auto it = std::find_if(profiles.begin(), profiles.end(),
                         [&](const NumericProfile& p) { return p.relation == population; });
  ASSERT_NE(it, profiles.end());
  EXPECT_EQ(it->sample, Sorted(oracle));
  EXPECT_EQ(it->population, oracle.size());
}

TEST(ProfilesTest, MixedRelationKeepsOnlyNumbers) {
  const KnowledgeGraph kg = KnowledgeGraph::FromTriples({
      {Iri(kEx + "a"), kEx + "code", Literal("12", kInt)},
      {Iri(kEx + "b"), kEx + "code", Literal("n/a")},
      {Iri(kEx + "c"), kEx + "code", Literal("7")},
  });
  const auto profiles = BuildNumericProfiles(kg);
  ASSERT_EQ(profiles.size(), 1u);
  EXPECT_EQ(profiles[0].sample, (std::vector<double>{7, 12}));
}

TEST(ProfilesTest, CapIsSeededAndBounded) {
  std::vector<Triple> triples;
  for (int i = 0; i < 500; ++i) {
    triples.push_back({Iri(kEx + "e" + std::to_string(i)), kEx + "v",
                       Literal(std::to_string(i), kInt)});
  }
  const KnowledgeGraph kg = KnowledgeGraph::FromTriples(triples);
  const auto a = BuildNumericProfiles(kg, 50, 1);
  const auto b = BuildNumericProfiles(kg, 50, 1);
  ASSERT_EQ(a.size(), 1u);
  EXPECT_EQ(a[0].sample.size(), 50u);
  EXPECT_EQ(a[0].population, 500u);
  EXPECT_EQ(a[0].sample, b[0].sample);
  EXPECT_NE(a[0].sample, BuildNumericProfiles(kg, 50, 2)[0].sample);
}

TEST(ProfilesTest, SaveLoadRoundTrip) {
  ProfileSet set;
  set.profiles = {{"r1", {1, 2.5, 3}, 3}, {"r2", {-1e9}, 4}};
  const std::string path =
      (std::filesystem::temp_directory_path() / "tabmatch_profiles_test.json").string();
  SaveProfiles(set, path);
  const ProfileSet loaded = LoadProfiles(path);
  std::filesystem::remove(path);
  ASSERT_EQ(loaded.profiles.size(), 2u);
  EXPECT_EQ(loaded.profiles[0].sample, set.profiles[0].sample);
  EXPECT_EQ(loaded.profiles[1].population, 4u);
  EXPECT_EQ(loaded.seed, set.seed);
}

KsNumericLabeler TwoProfiles() {
  std::vector<double> a, b;
  for (int i = 0; i < 30; ++i) a.push_back(1000 + 10 * i);
  for (int i = 0; i < 30; ++i) b.push_back(i);
  return KsNumericLabeler({{"A", a, a.size()}, {"B", b, b.size()}});
}

TEST(LabelNumericColumnTest, ProfileValuesRankFirst) {
  const auto labeler = TwoProfiles();
  std::vector<double> column;
  for (int i = 0; i < 12; ++i) column.push_back(1000 + 20 * i);
  const RelationRanking r = LabelNumericColumn(column, labeler, 100);
  ASSERT_EQ(r.relations.size(), 2u);
  EXPECT_EQ(r.relations[0], "A");
  EXPECT_EQ(r.raw.at("A"), 100.0);
  EXPECT_EQ(r.raw.at("B"), 99.0);
  EXPECT_NEAR(r.distribution.Sum(), 1.0, 1e-12);
}

TEST(LabelNumericColumnTest, ExactProfileHasZeroStatistic) {
  const testing::Fixture f = testing::MakeToyFixture();
  const KnowledgeGraph kg = KnowledgeGraph::FromTriples(f.triples);
  const auto profiles = BuildNumericProfiles(kg);
  const KsNumericLabeler labeler(profiles);
  for (const NumericProfile& p : profiles) {
    if (p.sample.size() < kMinNumericValues) continue;
    const RelationRanking r = LabelNumericColumn(p.sample, labeler, 100);
    ASSERT_FALSE(r.relations.empty());
    EXPECT_EQ(r.relations[0], p.relation);
  }
}

TEST(LabelNumericColumnTest, NineValuesIsEmpty) {
  const auto labeler = TwoProfiles();
  const std::vector<double> column(9, 5.0);
  EXPECT_TRUE(LabelNumericColumn(column, labeler, 100).relations.empty());
}

TEST(LabelNumericColumnTest, PermutationInvariantScaleSensitive) {
  const auto labeler = TwoProfiles();
  Rng rng(12);
  for (int i = 0; i < 50; ++i) {
    std::vector<double> column(10 + rng.Below(10));
    for (double& v : column) v = static_cast<double>(rng.Below(1500));
    std::vector<double> shuffled = column;
    for (size_t k = shuffled.size(); k > 1; --k) std::swap(shuffled[k - 1], shuffled[rng.Below(k)]);
    EXPECT_EQ(LabelNumericColumn(column, labeler, 100).relations,
              LabelNumericColumn(shuffled, labeler, 100).relations);
  }
  std::vector<double> small;
  for (int i = 0; i < 10; ++i) small.push_back(i);
  std::vector<double> large;
  for (double v : small) large.push_back(v * 1000 + 1000);
  EXPECT_EQ(LabelNumericColumn(small, labeler, 100).relations[0], "B");
  EXPECT_EQ(LabelNumericColumn(large, labeler, 100).relations[0], "A");
}

TEST(InferTypesTest, MaxOverRelationsMatchesBruteForce) {
  const testing::Fixture f = testing::MakeToyFixture();
  const KnowledgeGraph kg = KnowledgeGraph::FromTriples(f.triples);
  const std::string dbo = testing::kDbo;
  RelationRanking r1;
  r1.raw = {{dbo + "populationTotal", 100}, {dbo + "birthYear", 99}};
  RelationRanking r2;
  r2.raw = {{dbo + "areaTotal", 98}, {dbo + "demonym", 100}};
  const std::vector<RelationRanking> rankings = {r1, r2};
  const auto d = InferTypesFromRelations(rankings, kg);

  std::map<std::string, double> oracle;
  for (const auto& r : rankings) {
    for (const auto& [rel, score] : r.raw) {
      for (const auto& t : testing::ScanGraph(f.triples).TypesForRelation(rel)) {
        oracle[t] = std::max(oracle[t], score);
      }
    }
  }
  double total = 0;
  for (const auto& [t, s] : oracle) total += s;
  ASSERT_EQ(d.size(), oracle.size());
  for (const auto& [t, s] : oracle) EXPECT_NEAR(d.Get(t), s / total, 1e-12) << t;
  // Country carries populationTotal (100) and demonym (100); the shared
  // PopulatedPlace gets the max, not the sum.
  EXPECT_NEAR(d.Get(dbo + "PopulatedPlace"), 100 / total, 1e-12);
}

TEST(InferTypesTest, UnknownRelationsGiveNothing) {
  const KnowledgeGraph kg = KnowledgeGraph::FromTriples({});
  RelationRanking r;
  r.raw = {{"http://ex.org/nothing", 100}};
  const std::vector<RelationRanking> rankings = {r};
  EXPECT_TRUE(InferTypesFromRelations(rankings, kg).empty());
}

}  // namespace
}  // namespace tabmatch
