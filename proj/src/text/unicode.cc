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

#include "text/unicode.h"

#include <unicode/normalizer2.h>
#include <unicode/uchar.h>
#include <unicode/unistr.h>
#include <unicode/utf8.h>

#include <array>
#include <optional>

namespace tabmatch {
namespace {

// Windows-1252 code points for bytes 0x80..0x9F. Zero marks undefined slots,
// which fall back to the C1 control of the same value.
constexpr std::array<char32_t, 32> kCp1252High = {
    0x20AC, 0,      0x201A, 0x0192, 0x201E, 0x2026, 0x2020, 0x2021,
    0x02C6, 0x2030, 0x0160, 0x2039, 0x0152, 0,      0x017D, 0,
    0,      0x2018, 0x2019, 0x201C, 0x201D, 0x2022, 0x2013, 0x2014,
    0x02DC, 0x2122, 0x0161, 0x203A, 0x0153, 0,      0x017E, 0};

char32_t Cp1252ToCodePoint(unsigned char b) {
  if (b >= 0x80 && b <= 0x9F && kCp1252High[b - 0x80] != 0) {
    return kCp1252High[b - 0x80];
  }
  return b;
}

std::optional<unsigned char> CodePointToCp1252(char32_t c) {
  if (c < 0x80 || (c >= 0xA0 && c <= 0xFF)) return static_cast<unsigned char>(c);
  if (c >= 0x80 && c <= 0x9F) return static_cast<unsigned char>(c);
  for (size_t i = 0; i < kCp1252High.size(); ++i) {
    if (kCp1252High[i] == c) return static_cast<unsigned char>(0x80 + i);
  }
  return std::nullopt;
}

// One round of mojibake repair: the string's code points are reinterpreted
// as single bytes and decoded as UTF-8. Accepted only if every code point
// maps to a byte, the bytes form valid UTF-8, and the decode actually merged
// a multi-byte sequence.
std::optional<std::u32string> RepairMojibake(const std::u32string& cps) {
  std::string bytes;
  bytes.reserve(cps.size());
  bool high = false;
  for (char32_t c : cps) {
    auto b = CodePointToCp1252(c);
    if (!b) return std::nullopt;
    if (*b >= 0x80) high = true;
    bytes.push_back(static_cast<char>(*b));
  }
  if (!high || !IsValidUtf8(bytes)) return std::nullopt;
  std::u32string repaired = ToCodePoints(bytes);
  if (repaired.size() >= cps.size()) return std::nullopt;
  return repaired;
}

bool IsDroppedControl(char32_t c) {
  if (c == U'\t' || c == U'\n' || c == U'\r' || c == 0x0B || c == 0x0C) {
    return false;
  }
  if (c == 0xFEFF) return true;
  return u_charType(static_cast<UChar32>(c)) == U_CONTROL_CHAR;
}

bool IsSpace(char32_t c) {
  return c == U'\t' || c == U'\n' || c == U'\r' || c == 0x0B || c == 0x0C ||
         u_isUWhiteSpace(static_cast<UChar32>(c));
}

std::u32string StripAndCollapse(const std::u32string& cps) {
  std::u32string out;
  out.reserve(cps.size());
  bool pending_space = false;
  for (char32_t c : cps) {
    if (IsDroppedControl(c)) continue;
    if (IsSpace(c)) {
      pending_space = !out.empty();
      continue;
    }
    if (pending_space) out.push_back(U' ');
    pending_space = false;
    out.push_back(c);
  }
  return out;
}

std::u32string Nfc(const std::u32string& cps) {
  UErrorCode status = U_ZERO_ERROR;
  const icu::Normalizer2* nfc = icu::Normalizer2::getNFCInstance(status);
  if (U_FAILURE(status)) return cps;
  icu::UnicodeString in = icu::UnicodeString::fromUTF32(
      reinterpret_cast<const UChar32*>(cps.data()),
      static_cast<int32_t>(cps.size()));
  if (nfc->isNormalized(in, status) && U_SUCCESS(status)) return cps;
  status = U_ZERO_ERROR;
  icu::UnicodeString out = nfc->normalize(in, status);
  if (U_FAILURE(status)) return cps;
  std::u32string result(static_cast<size_t>(out.countChar32()), U'\0');
  status = U_ZERO_ERROR;
  out.toUTF32(reinterpret_cast<UChar32*>(result.data()),
              static_cast<int32_t>(result.size()), status);
  return result;
}

}  // namespace

bool IsValidUtf8(std::string_view bytes) {
  const auto* s = reinterpret_cast<const uint8_t*>(bytes.data());
  const int32_t length = static_cast<int32_t>(bytes.size());
  int32_t i = 0;
  while (i < length) {
    UChar32 c;
    U8_NEXT(s, i, length, c);
    if (c < 0) return false;
  }
  return true;
}

std::u32string ToCodePoints(std::string_view text) {
  std::u32string out;
  out.reserve(text.size());
  const auto* s = reinterpret_cast<const uint8_t*>(text.data());
  const int32_t length = static_cast<int32_t>(text.size());
  int32_t i = 0;
  while (i < length) {
    const int32_t start = i;
    UChar32 c;
    U8_NEXT(s, i, length, c);
    if (c < 0) {
      // Re-read the offending byte alone as Windows-1252.
      i = start + 1;
      out.push_back(Cp1252ToCodePoint(s[start]));
    } else {
      out.push_back(static_cast<char32_t>(c));
    }
  }
  return out;
}

std::string ToUtf8(std::u32string_view code_points) {
  std::string out;
  out.reserve(code_points.size());
  for (char32_t c : code_points) {
    uint8_t buf[U8_MAX_LENGTH];
    int32_t n = 0;
    UBool error = false;
    U8_APPEND(buf, n, U8_MAX_LENGTH, static_cast<UChar32>(c), error);
    if (error) continue;
    out.append(reinterpret_cast<const char*>(buf), static_cast<size_t>(n));
  }
  return out;
}

std::string DecodeText(std::string_view raw) {
  std::u32string cps = ToCodePoints(raw);
  // Every stage either shrinks the string or is idempotent, so iterating to
  // a fixpoint terminates quickly; the cap only guards pathological input.
  for (int round = 0; round < 16; ++round) {
    std::u32string next = cps;
    while (auto repaired = RepairMojibake(next)) next = std::move(*repaired);
    next = StripAndCollapse(Nfc(next));
    if (next == cps) break;
    cps = std::move(next);
  }
  return ToUtf8(cps);
}

std::u32string FoldCase(std::string_view text) {
  std::u32string cps = ToCodePoints(text);
  for (char32_t& c : cps) {
    c = static_cast<char32_t>(
        u_foldCase(static_cast<UChar32>(c), U_FOLD_CASE_DEFAULT));
  }
  return cps;
}

std::string FoldCaseUtf8(std::string_view text) { return ToUtf8(FoldCase(text)); }

bool IsLetter(char32_t c) { return u_isalpha(static_cast<UChar32>(c)); }
bool IsDigit(char32_t c) { return u_isdigit(static_cast<UChar32>(c)); }
bool IsUpper(char32_t c) { return u_isupper(static_cast<UChar32>(c)); }
char32_t ToUpper(char32_t c) {
  return static_cast<char32_t>(u_toupper(static_cast<UChar32>(c)));
}

}  // namespace tabmatch
