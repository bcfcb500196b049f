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

#ifndef TABMATCH_KG_NTRIPLES_H_
#define TABMATCH_KG_NTRIPLES_H_

#include <istream>
#include <string>
#include <string_view>
#include <vector>

namespace tabmatch {

struct Term {
  enum class Kind { kIri, kBlank, kLiteral };

  Kind kind = Kind::kIri;
  // IRI without angle brackets, blank node label without "_:", or the
  // unescaped literal lexical form.
  std::string value;
  std::string datatype;  // literals only; empty when absent
  std::string language;  // literals only; empty when absent

  bool is_literal() const { return kind == Kind::kLiteral; }
  bool operator==(const Term&) const = default;
  auto operator<=>(const Term&) const = default;
};

struct Triple {
  Term subject;
  std::string predicate;
  Term object;

  bool operator==(const Triple&) const = default;
  auto operator<=>(const Triple&) const = default;
};

// Parses one N-Triples statement. Returns false for blank and comment lines.
// Throws ParseError (message carries `line_number`) on malformed input.
bool ParseNTriplesLine(std::string_view line, size_t line_number, Triple* out);

std::vector<Triple> ParseNTriples(std::istream& in);
std::vector<Triple> ReadNTriplesFile(const std::string& path);

std::string FormatTerm(const Term& term);
std::string FormatTriple(const Triple& triple);

}  // namespace tabmatch

#endif  // TABMATCH_KG_NTRIPLES_H_
