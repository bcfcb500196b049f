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

#ifndef TABMATCH_TESTS_SUPPORT_ORACLES_H_
#define TABMATCH_TESTS_SUPPORT_ORACLES_H_

// Brute-force reference implementations used to cross-check the library.
// They trade speed for obviousness and share no code with src/.

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "kg/ntriples.h"

namespace tabmatch::testing {

// Edit distance by the textbook full (n+1)x(m+1) table.
inline size_t EditDistanceOracle(const std::u32string& a, const std::u32string& b) {
  std::vector<std::vector<size_t>> d(a.size() + 1, std::vector<size_t>(b.size() + 1));
  for (size_t i = 0; i <= a.size(); ++i) d[i][0] = i;
  for (size_t j = 0; j <= b.size(); ++j) d[0][j] = j;
  for (size_t i = 1; i <= a.size(); ++i) {
    for (size_t j = 1; j <= b.size(); ++j) {
      d[i][j] = std::min({d[i - 1][j] + 1, d[i][j - 1] + 1,
                          d[i - 1][j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1)});
    }
  }
  return d[a.size()][b.size()];
}

inline double SimilarityOracle(const std::u32string& a, const std::u32string& b) {
  const size_t n = std::max(a.size(), b.size());
  if (n == 0) return 1.0;
  return 1.0 - static_cast<double>(EditDistanceOracle(a, b)) / static_cast<double>(n);
}

// Two-sample KS statistic by evaluating both empirical CDFs at every sample
// point.
inline double KsOracle(std::vector<double> a, std::vector<double> b) {
  if (a.empty() && b.empty()) return 0.0;
  if (a.empty() || b.empty()) return 1.0;
  std::vector<double> points = a;
  points.insert(points.end(), b.begin(), b.end());
  auto cdf = [](const std::vector<double>& s, double x) {
    size_t n = 0;
    for (double v : s) n += v <= x ? 1 : 0;
    return static_cast<double>(n) / static_cast<double>(s.size());
  };
  double best = 0.0;
  for (double x : points) best = std::max(best, std::abs(cdf(a, x) - cdf(b, x)));
  return best;
}

// Max-over-all-lists fusion followed by sum normalization.
inline std::map<std::string, double> FusionOracle(
    const std::vector<std::vector<std::string>>& lists, size_t alpha) {
  std::map<std::string, double> raw;
  for (const auto& list : lists) {
    for (size_t r = 0; r < list.size() && r < alpha; ++r) {
      const double s = static_cast<double>(alpha - r);
      raw[list[r]] = std::max(raw[list[r]], s);
    }
  }
  double total = 0.0;
  for (const auto& [k, v] : raw) total += v;
  for (auto& [k, v] : raw) v /= total;
  return raw;
}

// Graph queries by scanning the whole triple list each time.
class ScanGraph {
 public:
  explicit ScanGraph(const std::vector<Triple>& triples) : triples_(triples) {}

  std::set<std::string> Ancestors(const std::string& cls) const {
    std::set<std::string> seen;
    std::vector<std::string> stack = {cls};
    while (!stack.empty()) {
      const std::string c = stack.back();
      stack.pop_back();
      for (const Triple& t : triples_) {
        if (t.predicate == kSubClassOf && t.subject.value == c &&
            seen.insert(t.object.value).second) {
          stack.push_back(t.object.value);
        }
      }
    }
    seen.erase(cls);
    return seen;
  }

  std::set<std::string> TypesOf(const std::string& e) const {
    std::set<std::string> out;
    for (const Triple& t : triples_) {
      if (t.predicate == kType && t.subject.value == e && !t.object.is_literal()) {
        out.insert(t.object.value);
        for (const auto& a : Ancestors(t.object.value)) out.insert(a);
      }
    }
    return out;
  }

  std::set<std::string> RelationsBetween(const std::string& a, const std::string& b) const {
    std::set<std::string> out;
    for (const Triple& t : triples_) {
      if (IsSchema(t.predicate) || t.object.is_literal()) continue;
      if (t.subject.value == a && t.object.value == b) out.insert(t.predicate);
    }
    return out;
  }

  // (relation, lexical form) pairs of literal-valued non-schema triples.
  std::multiset<std::pair<std::string, std::string>> LiteralAttributes(
      const std::string& e) const {
    std::multiset<std::pair<std::string, std::string>> out;
    for (const Triple& t : triples_) {
      if (IsSchema(t.predicate) || !t.object.is_literal()) continue;
      if (t.subject.value == e) out.emplace(t.predicate, t.object.value);
    }
    return out;
  }

  std::set<std::string> TypesForRelation(const std::string& r) const {
    std::set<std::string> out;
    for (const Triple& t : triples_) {
      if (t.predicate != r) continue;
      for (const auto& c : TypesOf(t.subject.value)) out.insert(c);
    }
    return out;
  }

  static bool IsSchema(const std::string& p) {
    return p == kType || p == kSubClassOf || p == kLabel;
  }

  static constexpr const char* kType = "http://www.w3.org/1999/02/22-rdf-syntax-ns#type";
  static constexpr const char* kSubClassOf = "http://www.w3.org/2000/01/rdf-schema#subClassOf";
  static constexpr const char* kLabel = "http://www.w3.org/2000/01/rdf-schema#label";

 private:
  const std::vector<Triple>& triples_;
};

}  // namespace tabmatch::testing

#endif  // TABMATCH_TESTS_SUPPORT_ORACLES_H_
