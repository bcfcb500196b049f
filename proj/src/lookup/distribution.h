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

#ifndef TABMATCH_LOOKUP_DISTRIBUTION_H_
#define TABMATCH_LOOKUP_DISTRIBUTION_H_

#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>

namespace tabmatch {

using ScoreMap = std::map<std::string, double>;

// A normalized probability map over candidates (entities, types or
// relations). Nonempty distributions sum to 1 within rounding; entries with
// zero mass are never stored.
class CandidateDistribution {
 public:
  CandidateDistribution() = default;

  // Divides non-negative raw scores by their sum. All-zero input yields the
  // empty distribution.
  static CandidateDistribution Normalize(const ScoreMap& raw);

  bool empty() const { return items_.empty(); }
  size_t size() const { return items_.size(); }
  const ScoreMap& items() const { return items_; }
  double Get(std::string_view key) const;
  bool Contains(std::string_view key) const;
  double Sum() const;

  // Highest probability; ties go to the lexicographically smallest key.
  std::optional<std::string> Argmax() const;

  ScoreMap::const_iterator begin() const { return items_.begin(); }
  ScoreMap::const_iterator end() const { return items_.end(); }

 private:
  ScoreMap items_;
};

enum class Aggregation { kSum, kProduct };

struct WeightedSignal {
  const CandidateDistribution* distribution = nullptr;
  double weight = 1.0;
};

// Combines independent signals into one distribution. With `beta`, each
// candidate probability below beta is zeroed first and a signal left with
// no mass is dropped. Surviving (nonempty) signals are combined as
// sum_k w_k p_k(c) or prod_k w_k p_k(c), then renormalized. When
// `candidates` is given the output is restricted to those keys.
// Throws ConfigError when every weight is zero.
CandidateDistribution AggregateSignals(std::span<const WeightedSignal> signals,
                                       Aggregation mode,
                                       std::optional<double> beta = std::nullopt,
                                       const CandidateDistribution* candidates = nullptr);

}  // namespace tabmatch

#endif  // TABMATCH_LOOKUP_DISTRIBUTION_H_
