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

#include "numeric/numeric_labeling.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <set>
#include <utility>

#include <json.hpp>

#include "kg/knowledge_graph.h"
#include "util/csv.h"
#include "util/error.h"

namespace tabmatch {

std::vector<NumericProfile> BuildNumericProfiles(const KnowledgeGraph& kg, size_t cap,
                                                 uint64_t seed) {
  if (cap == 0) throw ConfigError("profile cap must be positive");
  struct Reservoir {
    std::vector<double> values;
    size_t seen = 0;
  };
  std::map<std::string, Reservoir> by_relation;
  std::mt19937_64 rng(seed);
  for (const std::string& entity : kg.entities()) {
    const std::optional<NodeId> id = kg.Find(entity);
    if (!id) continue;
    std::set<std::pair<std::string_view, double>> seen_here;
    for (const LiteralAttribute& attr : kg.LiteralAttributes(*id)) {
      if (!attr.numerical()) continue;
      if (!seen_here.emplace(attr.relation, attr.number).second) continue;
      Reservoir& res = by_relation[attr.relation];
      ++res.seen;
      if (res.values.size() < cap) {
        res.values.push_back(attr.number);
      } else {
        std::uniform_int_distribution<size_t> pick(0, res.seen - 1);
        const size_t slot = pick(rng);
        if (slot < cap) res.values[slot] = attr.number;
      }
    }
  }
  std::vector<NumericProfile> profiles;
  profiles.reserve(by_relation.size());
  for (auto& [relation, res] : by_relation) {
    std::sort(res.values.begin(), res.values.end());
    profiles.push_back({relation, std::move(res.values), res.seen});
  }
  return profiles;
}

double KsStatistic(std::span<const double> a, std::span<const double> b) {
  if (a.empty() && b.empty()) return 0.0;
  if (a.empty() || b.empty()) return 1.0;
  const double na = static_cast<double>(a.size());
  const double nb = static_cast<double>(b.size());
  size_t i = 0, j = 0;
  double d = 0.0;
  while (i < a.size() && j < b.size()) {
    const double x = std::min(a[i], b[j]);
    while (i < a.size() && a[i] <= x) ++i;
    while (j < b.size() && b[j] <= x) ++j;
    d = std::max(d, std::abs(static_cast<double>(i) / na - static_cast<double>(j) / nb));
  }
  return d;
}

KsNumericLabeler::KsNumericLabeler(std::vector<NumericProfile> profiles)
    : profiles_(std::move(profiles)) {
  for (NumericProfile& p : profiles_) {
    std::sort(p.sample.begin(), p.sample.end());
  }
}

std::vector<std::string> KsNumericLabeler::Rank(std::span<const double> values) const {
  std::vector<double> column(values.begin(), values.end());
  std::sort(column.begin(), column.end());
  struct Scored {
    double ks;
    size_t size_gap;
    const std::string* relation;
  };
  std::vector<Scored> scored;
  scored.reserve(profiles_.size());
  for (const NumericProfile& p : profiles_) {
    if (p.sample.empty()) continue;
    const size_t gap = p.sample.size() > column.size() ? p.sample.size() - column.size()
                                                       : column.size() - p.sample.size();
    scored.push_back({KsStatistic(column, p.sample), gap, &p.relation});
  }
  std::sort(scored.begin(), scored.end(), [](const Scored& x, const Scored& y) {
    if (x.ks != y.ks) return x.ks < y.ks;
    if (x.size_gap != y.size_gap) return x.size_gap < y.size_gap;
    return *x.relation < *y.relation;
  });
  std::vector<std::string> out;
  out.reserve(scored.size());
  for (const Scored& s : scored) out.push_back(*s.relation);
  return out;
}

RelationRanking LabelNumericColumn(std::span<const double> values,
                                   const NumericLabeler& labeler, size_t limit,
                                   size_t column) {
  RelationRanking ranking;
  ranking.column = column;
  if (values.size() < kMinNumericValues || limit == 0) return ranking;
  ranking.relations = labeler.Rank(values);
  if (ranking.relations.size() > limit) ranking.relations.resize(limit);
  for (size_t rank = 0; rank < ranking.relations.size(); ++rank) {
    ranking.raw[ranking.relations[rank]] = static_cast<double>(limit - rank);
  }
  ranking.distribution = CandidateDistribution::Normalize(ranking.raw);
  return ranking;
}

CandidateDistribution InferTypesFromRelations(std::span<const RelationRanking> rankings,
                                              const KnowledgeGraph& kg) {
  ScoreMap raw;
  for (const RelationRanking& ranking : rankings) {
    for (const auto& [relation, score] : ranking.raw) {
      for (const std::string& type : kg.TypesForRelation(relation)) {
        double& slot = raw[type];
        slot = std::max(slot, score);
      }
    }
  }
  return CandidateDistribution::Normalize(raw);
}

void SaveProfiles(const ProfileSet& set, const std::string& path) {
  nlohmann::json doc;
  doc["method"] = set.method;
  doc["seed"] = set.seed;
  doc["cap"] = set.cap;
  nlohmann::json list = nlohmann::json::array();
  for (const NumericProfile& p : set.profiles) {
    list.push_back({{"relation", p.relation},
                    {"population", p.population},
                    {"sample", p.sample}});
  }
  doc["profiles"] = std::move(list);
  WriteFile(path, doc.dump());
}

ProfileSet LoadProfiles(const std::string& path) {
  const nlohmann::json doc = nlohmann::json::parse(ReadFile(path), nullptr, false);
  if (doc.is_discarded() || !doc.is_object()) {
    throw ParseError(path + ": numeric profiles are not valid JSON");
  }
  ProfileSet set;
  try {
    set.method = doc.at("method").get<std::string>();
    set.seed = doc.at("seed").get<uint64_t>();
    set.cap = doc.at("cap").get<size_t>();
    for (const auto& p : doc.at("profiles")) {
      NumericProfile profile;
      profile.relation = p.at("relation").get<std::string>();
      profile.population = p.at("population").get<size_t>();
      profile.sample = p.at("sample").get<std::vector<double>>();
      for (double v : profile.sample) {
        if (!std::isfinite(v)) throw ParseError(path + ": non-finite profile value");
      }
      std::sort(profile.sample.begin(), profile.sample.end());
      set.profiles.push_back(std::move(profile));
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(path + ": malformed numeric profiles (" + e.what() + ")");
  }
  return set;
}

}  // namespace tabmatch
