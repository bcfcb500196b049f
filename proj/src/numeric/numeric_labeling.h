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

#ifndef TABMATCH_NUMERIC_NUMERIC_LABELING_H_
#define TABMATCH_NUMERIC_NUMERIC_LABELING_H_

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "lookup/distribution.h"

namespace tabmatch {

class KnowledgeGraph;

inline constexpr size_t kMinNumericValues = 10;
inline constexpr size_t kDefaultProfileCap = 10000;
inline constexpr uint64_t kDefaultProfileSeed = 20190815;

// Numeric values observed for one relation. `sample` is sorted ascending.
struct NumericProfile {
  std::string relation;
  std::vector<double> sample;
  size_t population = 0;  // values before capping
};

// One profile per relation with at least one numeric literal, sorted by
// relation. Values are deduplicated per (entity, relation); a relation with
// more than `cap` values keeps a reservoir sample drawn with `seed`.
std::vector<NumericProfile> BuildNumericProfiles(const KnowledgeGraph& kg,
                                                 size_t cap = kDefaultProfileCap,
                                                 uint64_t seed = kDefaultProfileSeed);

// Two-sample Kolmogorov-Smirnov statistic sup_x |F_a(x) - F_b(x)| for sorted
// samples. Returns 1 when exactly one side is empty, 0 when both are.
double KsStatistic(std::span<const double> a, std::span<const double> b);

// Ranks knowledge-graph relations by how well their value distribution fits a
// column. Implementations must be deterministic.
class NumericLabeler {
 public:
  virtual ~NumericLabeler() = default;
  virtual std::string method() const = 0;
  // Most similar first.
  virtual std::vector<std::string> Rank(std::span<const double> values) const = 0;
};

// Ascending KS statistic; ties go to the profile whose sample size is closer
// to the column's, then to the smaller relation id.
class KsNumericLabeler : public NumericLabeler {
 public:
  explicit KsNumericLabeler(std::vector<NumericProfile> profiles);

  std::string method() const override { return "ks"; }
  std::vector<std::string> Rank(std::span<const double> values) const override;
  const std::vector<NumericProfile>& profiles() const { return profiles_; }

 private:
  std::vector<NumericProfile> profiles_;
};

struct RelationRanking {
  size_t column = 0;
  std::vector<std::string> relations;  // best first, at most `limit`
  ScoreMap raw;                        // limit - rank
  CandidateDistribution distribution;
};

// Empty ranking when fewer than kMinNumericValues values are given.
RelationRanking LabelNumericColumn(std::span<const double> values,
                                   const NumericLabeler& labeler, size_t limit,
                                   size_t column = 0);

// Pr(t | M_num): every subject-side type of a ranked relation takes the max
// raw score over the relations implying it, across all given rankings; the
// result is normalized jointly.
CandidateDistribution InferTypesFromRelations(std::span<const RelationRanking> rankings,
                                              const KnowledgeGraph& kg);

// JSON persistence alongside the graph index.
struct ProfileSet {
  std::string method = "ks";
  uint64_t seed = kDefaultProfileSeed;
  size_t cap = kDefaultProfileCap;
  std::vector<NumericProfile> profiles;
};

void SaveProfiles(const ProfileSet& set, const std::string& path);
ProfileSet LoadProfiles(const std::string& path);

}  // namespace tabmatch

#endif  // TABMATCH_NUMERIC_NUMERIC_LABELING_H_
