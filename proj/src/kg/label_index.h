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

#ifndef TABMATCH_KG_LABEL_INDEX_H_
#define TABMATCH_KG_LABEL_INDEX_H_

#include <cstdint>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace tabmatch {

inline constexpr double kFuzzyLabelFloor = 0.6;

// Case-insensitive label index with three match tiers. Padded character
// bigram postings with a count filter keep the fuzzy tier sublinear; every
// surviving candidate is verified with the exact edit distance.
class LabelIndex {
 public:
  struct Hit {
    std::string entity;
    int tier = 0;  // 0 exact, 1 prefix, 2 fuzzy
    double similarity = 0.0;
  };

  LabelIndex() = default;
  // (label, entity) pairs; an entity may carry several labels.
  explicit LabelIndex(const std::vector<std::pair<std::string, std::string>>& labels);

  // Ranked by tier, then similarity (descending), then entity id.
  std::vector<Hit> Search(std::string_view query, size_t limit) const;

  size_t size() const { return entries_.size(); }

 private:
  struct Entry {
    std::u32string folded;
    uint32_t entity;
  };
  struct Posting {
    uint32_t entry;
    uint32_t count;
  };

  std::vector<std::string> entity_names_;
  std::vector<Entry> entries_;
  std::unordered_map<std::u32string, std::vector<uint32_t>> exact_;
  std::vector<std::pair<std::u32string, uint32_t>> sorted_;  // (folded, entry)
  std::unordered_map<uint64_t, std::vector<Posting>> bigrams_;
};

}  // namespace tabmatch

#endif  // TABMATCH_KG_LABEL_INDEX_H_
