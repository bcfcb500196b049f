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

#ifndef TABMATCH_TEXT_SIMILARITY_H_
#define TABMATCH_TEXT_SIMILARITY_H_

#include <cstddef>
#include <string_view>

namespace tabmatch {

// Edit distance over code points (insert, delete, substitute; unit costs).
size_t Levenshtein(std::u32string_view a, std::u32string_view b);

// 1 - d(a, b) / max(|a|, |b|), with 1.0 for two empty strings. Operates on
// already folded input.
double NormalizedSimilarity(std::u32string_view a, std::u32string_view b);

// Case-insensitive variant over UTF-8 strings.
double LabelSimilarity(std::string_view a, std::string_view b);

}  // namespace tabmatch

#endif  // TABMATCH_TEXT_SIMILARITY_H_
