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

#include "table/language.h"

#include <cmath>
#include <limits>
#include <unordered_set>
#include <vector>

#include "text/unicode.h"

namespace tabmatch {
namespace {

constexpr size_t kMaxGram = 3;

// Letters only; everything else separates words.
std::u32string Normalize(std::string_view text) {
  std::u32string folded = FoldCase(text);
  std::u32string out = U" ";
  for (char32_t c : folded) {
    if (IsLetter(c)) {
      out.push_back(c);
    } else if (out.back() != U' ') {
      out.push_back(U' ');
    }
  }
  if (out.back() != U' ') out.push_back(U' ');
  return out;
}

template <typename Fn>
void ForEachGram(const std::u32string& s, Fn&& fn) {
  for (size_t n = 1; n <= kMaxGram; ++n) {
    if (s.size() < n) break;
    for (size_t i = 0; i + n <= s.size(); ++i) {
      std::u32string_view gram(s.data() + i, n);
      if (gram == U" ") continue;
      fn(gram);
    }
  }
}

}  // namespace

NgramLanguagePredictor::NgramLanguagePredictor(
    const std::map<std::string, std::string>& corpora) {
  std::unordered_set<std::u32string> vocabulary;
  for (const auto& [code, text] : corpora) {
    Profile& profile = profiles_[code];
    ForEachGram(Normalize(text), [&](std::u32string_view gram) {
      profile.counts[std::u32string(gram)] += 1;
      profile.total += 1;
      vocabulary.emplace(gram);
    });
  }
  vocabulary_size_ = std::max<double>(1, static_cast<double>(vocabulary.size()));
}

const NgramLanguagePredictor& NgramLanguagePredictor::Default() {
  static const NgramLanguagePredictor predictor(BundledLanguageCorpora());
  return predictor;
}

LanguageGuess NgramLanguagePredictor::Predict(std::string_view text) const {
  const std::u32string normalized = Normalize(text);
  if (profiles_.empty() || normalized.size() <= 1) {
    return LanguageGuess{"en", 0.0, true};
  }
  std::vector<std::pair<std::string, double>> log_likelihood;
  for (const auto& [code, profile] : profiles_) {
    double score = 0;
    const double denominator = profile.total + vocabulary_size_;
    ForEachGram(normalized, [&](std::u32string_view gram) {
      auto it = profile.counts.find(std::u32string(gram));
      const double count = it == profile.counts.end() ? 0.0 : it->second;
      score += std::log((count + 1.0) / denominator);
    });
    log_likelihood.emplace_back(code, score);
  }
  double best = -std::numeric_limits<double>::infinity();
  std::string best_code;
  for (const auto& [code, score] : log_likelihood) {
    if (score > best) {
      best = score;
      best_code = code;
    }
  }
  double partition = 0;
  for (const auto& [code, score] : log_likelihood) {
    partition += std::exp(score - best);
  }
  return LanguageGuess{best_code, 1.0 / partition, false};
}

}  // namespace tabmatch
