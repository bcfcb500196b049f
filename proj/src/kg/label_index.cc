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

#include "kg/label_index.h"

#include <algorithm>
#include <cmath>
#include <map>

#include "text/similarity.h"
#include "text/unicode.h"

namespace tabmatch {
namespace {

constexpr char32_t kPad = 0x10FFFF;

uint64_t GramKey(char32_t a, char32_t b) {
  return (static_cast<uint64_t>(a) << 32) | static_cast<uint64_t>(b);
}

std::map<uint64_t, uint32_t> PaddedBigrams(const std::u32string& s) {
  std::map<uint64_t, uint32_t> grams;
  char32_t prev = kPad;
  for (char32_t c : s) {
    ++grams[GramKey(prev, c)];
    prev = c;
  }
  ++grams[GramKey(prev, kPad)];
  return grams;
}

size_t MaxEdits(size_t longest) {
  return static_cast<size_t>(
      std::floor((1.0 - kFuzzyLabelFloor) * static_cast<double>(longest) + 1e-9));
}

std::u32string FoldQuery(std::string_view text) {
  std::u32string folded = FoldCase(text);
  while (!folded.empty() && folded.back() == U' ') folded.pop_back();
  size_t start = 0;
  while (start < folded.size() && folded[start] == U' ') ++start;
  return folded.substr(start);
}

}  // namespace

LabelIndex::LabelIndex(
    const std::vector<std::pair<std::string, std::string>>& labels) {
  std::vector<std::string> names;
  for (const auto& [label, entity] : labels) names.push_back(entity);
  std::sort(names.begin(), names.end());
  names.erase(std::unique(names.begin(), names.end()), names.end());
  entity_names_ = names;
  std::unordered_map<std::string_view, uint32_t> entity_ids;
  for (uint32_t i = 0; i < entity_names_.size(); ++i) entity_ids[entity_names_[i]] = i;

  for (const auto& [label, entity] : labels) {
    std::u32string folded = FoldQuery(label);
    if (folded.empty()) continue;
    const uint32_t entry = static_cast<uint32_t>(entries_.size());
    entries_.push_back(Entry{folded, entity_ids.at(entity)});
    exact_[folded].push_back(entry);
    sorted_.emplace_back(folded, entry);
    for (const auto& [gram, count] : PaddedBigrams(folded)) {
      bigrams_[gram].push_back(Posting{entry, count});
    }
  }
  std::sort(sorted_.begin(), sorted_.end());
}

std::vector<LabelIndex::Hit> LabelIndex::Search(std::string_view query,
                                                size_t limit) const {
  const std::u32string q = FoldQuery(query);
  if (q.empty() || limit == 0) return {};

  // Best (tier, similarity) per entity.
  std::unordered_map<uint32_t, std::pair<int, double>> best;
  auto offer = [&](uint32_t entity, int tier, double sim) {
    auto [it, inserted] = best.try_emplace(entity, tier, sim);
    if (inserted) return;
    auto& [t, s] = it->second;
    if (tier < t || (tier == t && sim > s)) {
      t = tier;
      s = sim;
    }
  };

  if (auto it = exact_.find(q); it != exact_.end()) {
    for (uint32_t entry : it->second) offer(entries_[entry].entity, 0, 1.0);
  }

  for (auto it = std::lower_bound(sorted_.begin(), sorted_.end(),
                                  std::make_pair(q, uint32_t{0}));
       it != sorted_.end() && it->first.compare(0, q.size(), q) == 0; ++it) {
    if (it->first.size() == q.size()) continue;
    offer(entries_[it->second].entity, 1,
          NormalizedSimilarity(q, it->first));
  }

  std::unordered_map<uint32_t, uint32_t> shared;
  for (const auto& [gram, count] : PaddedBigrams(q)) {
    auto it = bigrams_.find(gram);
    if (it == bigrams_.end()) continue;
    for (const Posting& p : it->second) shared[p.entry] += std::min(count, p.count);
  }
  for (const auto& [entry, hits] : shared) {
    const Entry& e = entries_[entry];
    const size_t longest = std::max(q.size(), e.folded.size());
    const size_t max_edits = MaxEdits(longest);
    const size_t shorter = std::min(q.size(), e.folded.size());
    if (longest - shorter > max_edits) continue;
    // q-gram lemma for padded bigrams.
    const long needed = static_cast<long>(longest + 1) - 2 * static_cast<long>(max_edits);
    if (static_cast<long>(hits) < needed) continue;
    const double sim = NormalizedSimilarity(q, e.folded);
    if (sim + 1e-12 < kFuzzyLabelFloor) continue;
    offer(e.entity, 2, sim);
  }

  std::vector<Hit> hits;
  hits.reserve(best.size());
  for (const auto& [entity, ts] : best) {
    hits.push_back(Hit{entity_names_[entity], ts.first, ts.second});
  }
  std::sort(hits.begin(), hits.end(), [](const Hit& a, const Hit& b) {
    if (a.tier != b.tier) return a.tier < b.tier;
    if (a.similarity != b.similarity) return a.similarity > b.similarity;
    return a.entity < b.entity;
  });
  if (hits.size() > limit) hits.resize(limit);
  return hits;
}

}  // namespace tabmatch
