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

#ifndef TABMATCH_TEXT_UNICODE_H_
#define TABMATCH_TEXT_UNICODE_H_

#include <string>
#include <string_view>

namespace tabmatch {

// Repairs a raw cell or file string: bytes that are not valid UTF-8 are read
// as Windows-1252, UTF-8 text that was mis-decoded as Latin-1/Windows-1252 is
// re-decoded, the result is NFC-normalized, control characters are dropped
// and whitespace runs collapse to a single space. Idempotent.
std::string DecodeText(std::string_view raw);

bool IsValidUtf8(std::string_view bytes);

// Decodes UTF-8; invalid bytes are mapped through Windows-1252.
std::u32string ToCodePoints(std::string_view text);
std::string ToUtf8(std::u32string_view code_points);

// Full Unicode case folding, one code point at a time.
std::u32string FoldCase(std::string_view text);
std::string FoldCaseUtf8(std::string_view text);

bool IsLetter(char32_t c);
bool IsDigit(char32_t c);
bool IsUpper(char32_t c);
char32_t ToUpper(char32_t c);

}  // namespace tabmatch

#endif  // TABMATCH_TEXT_UNICODE_H_
