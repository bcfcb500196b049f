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

#ifndef TABMATCH_TABLE_LANGUAGE_H_
#define TABMATCH_TABLE_LANGUAGE_H_

#include <map>
#include <string>
#include <string_view>
#include <unordered_map>

#include "table/table.h"

namespace tabmatch {

class LanguagePredictor {
 public:
  virtual ~LanguagePredictor() = default;
  // Empty input yields {"en", 0.0, fallback=true}.
  virtual LanguageGuess Predict(std::string_view text) const = 0;
};

// Multinomial naive Bayes over character 1..3-grams of the case-folded,
// space-padded text. Confidence is the posterior of the winning language
// under a uniform prior.
class NgramLanguagePredictor : public LanguagePredictor {
 public:
  // `corpora` maps ISO-639-1 code to training text.
  explicit NgramLanguagePredictor(const std::map<std::string, std::string>& corpora);

  // Profiles trained on the bundled en/de/fr/es/it samples.
  static const NgramLanguagePredictor& Default();

  LanguageGuess Predict(std::string_view text) const override;

 private:
  struct Profile {
    std::unordered_map<std::u32string, double> counts;
    double total = 0;
  };
  std::map<std::string, Profile> profiles_;
  double vocabulary_size_ = 1;
};

// Training text for the default profiles, keyed by language code.
const std::map<std::string, std::string>& BundledLanguageCorpora();

}  // namespace tabmatch

#endif  // TABMATCH_TABLE_LANGUAGE_H_
