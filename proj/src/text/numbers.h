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

#ifndef TABMATCH_TEXT_NUMBERS_H_
#define TABMATCH_TEXT_NUMBERS_H_

#include <optional>
#include <string_view>

namespace tabmatch {

// Parses a plain numeric literal: optional sign, digits with an optional
// fraction and exponent, and comma thousands separators in groups of three
// ("13,929,286"). Surrounding spaces are ignored. Non-finite results are
// rejected.
std::optional<double> ParseNumber(std::string_view text);

}  // namespace tabmatch

#endif  // TABMATCH_TEXT_NUMBERS_H_
