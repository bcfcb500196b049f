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

#ifndef TABMATCH_HARNESS_CONFIG_H_
#define TABMATCH_HARNESS_CONFIG_H_

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "lookup/distribution.h"
#include "lookup/service.h"
#include "numeric/numeric_labeling.h"
#include "relation/relation_estimation.h"
#include "voting/final_voting.h"

namespace tabmatch {

enum class S8Source { kLookup, kFused };

// Run parameters. Parsed from a flat `key = value` file in TOML syntax:
// strings in double quotes, numbers, booleans and `#` comments; `[section]`
// headers prefix the keys that follow.
struct RunConfig {
  size_t alpha = 100;
  double beta = 0.5;
  std::array<double, 10> weights = {1, 1, 1, 1, 1, 1, 1, 1, 1, 1};  // w1..w10
  Aggregation aggregation = Aggregation::kSum;
  PairAggregation pair_aggregation = PairAggregation::kMax;
  S8Source s8_source = S8Source::kLookup;
  VoteWeighting vote_weighting = VoteWeighting::kUniform;
  // Remote services; the local graph search is always present unless
  // `services.local.enabled = false`.
  std::vector<ServiceConfig> services;
  bool local_service = true;
  std::string cache_dir;
  uint64_t seed = kDefaultProfileSeed;
  size_t workers = 1;
  std::string gazetteer;      // optional CSV `ner_tag,phrase`
  std::string ner_class_map;  // optional CSV `ner_tag,class_iri`

  double w(int k) const { return weights[static_cast<size_t>(k - 1)]; }

  // Throws ConfigError naming the offending key.
  void Validate() const;
  std::string ToJson() const;

  static RunConfig Parse(std::string_view content, const std::string& origin = "config");
  static RunConfig FromFile(const std::string& path);
};

}  // namespace tabmatch

#endif  // TABMATCH_HARNESS_CONFIG_H_
