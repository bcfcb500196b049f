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

#include "kg/ntriples.h"

#include <cctype>
#include <fstream>

#include "text/unicode.h"
#include "util/error.h"

namespace tabmatch {
namespace {

class LineParser {
 public:
  LineParser(std::string_view line, size_t line_number)
      : s_(line), line_number_(line_number) {}

  [[noreturn]] void Fail(const std::string& what) const {
    throw ParseError("line " + std::to_string(line_number_) + ", column " +
                     std::to_string(pos_ + 1) + ": " + what);
  }

  void SkipSpace() {
    while (pos_ < s_.size() && (s_[pos_] == ' ' || s_[pos_] == '\t')) ++pos_;
  }
  bool AtEnd() const { return pos_ >= s_.size(); }
  char Peek() const { return AtEnd() ? '\0' : s_[pos_]; }

  std::string Iri() {
    if (Peek() != '<') Fail("expected '<'");
    ++pos_;
    std::string out;
    while (!AtEnd() && s_[pos_] != '>') {
      if (s_[pos_] == '\\') {
        out += Escape();
      } else {
        if (s_[pos_] == ' ') Fail("space inside IRI");
        out.push_back(s_[pos_++]);
      }
    }
    if (AtEnd()) Fail("unterminated IRI");
    ++pos_;
    if (out.empty()) Fail("empty IRI");
    return out;
  }

  std::string Blank() {
    if (s_.substr(pos_, 2) != "_:") Fail("expected blank node");
    pos_ += 2;
    const size_t start = pos_;
    while (!AtEnd() && s_[pos_] != ' ' && s_[pos_] != '\t' && s_[pos_] != '.') ++pos_;
    // A trailing dot belongs to the statement, not the label.
    if (pos_ == start) Fail("empty blank node label");
    return std::string(s_.substr(start, pos_ - start));
  }

  Term SubjectOrObject(bool allow_literal) {
    Term t;
    switch (Peek()) {
      case '<':
        t.kind = Term::Kind::kIri;
        t.value = Iri();
        return t;
      case '_':
        t.kind = Term::Kind::kBlank;
        t.value = Blank();
        return t;
      case '"':
        if (!allow_literal) Fail("literal not allowed here");
        return Literal();
      default:
        Fail("expected IRI, blank node or literal");
    }
  }

  Term Literal() {
    Term t;
    t.kind = Term::Kind::kLiteral;
    ++pos_;
    while (!AtEnd() && s_[pos_] != '"') {
      if (s_[pos_] == '\\') {
        t.value += Escape();
      } else {
        t.value.push_back(s_[pos_++]);
      }
    }
    if (AtEnd()) Fail("unterminated literal");
    ++pos_;
    if (Peek() == '@') {
      ++pos_;
      const size_t start = pos_;
      while (!AtEnd() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) ||
                          s_[pos_] == '-')) {
        ++pos_;
      }
      if (pos_ == start) Fail("empty language tag");
      t.language = std::string(s_.substr(start, pos_ - start));
    } else if (s_.substr(pos_, 2) == "^^") {
      pos_ += 2;
      t.datatype = Iri();
    }
    return t;
  }

  std::string Escape() {
    ++pos_;
    if (AtEnd()) Fail("dangling escape");
    const char c = s_[pos_++];
    switch (c) {
      case 't': return "\t";
      case 'b': return "\b";
      case 'n': return "\n";
      case 'r': return "\r";
      case 'f': return "\f";
      case '"': return "\"";
      case '\'': return "'";
      case '\\': return "\\";
      case '>': return ">";
      case 'u':
      case 'U': {
        const size_t digits = c == 'u' ? 4 : 8;
        if (pos_ + digits > s_.size()) Fail("short unicode escape");
        char32_t cp = 0;
        for (size_t i = 0; i < digits; ++i) {
          const char h = s_[pos_++];
          cp <<= 4;
          if (h >= '0' && h <= '9') cp |= static_cast<char32_t>(h - '0');
          else if (h >= 'a' && h <= 'f') cp |= static_cast<char32_t>(h - 'a' + 10);
          else if (h >= 'A' && h <= 'F') cp |= static_cast<char32_t>(h - 'A' + 10);
          else Fail("bad hex digit in unicode escape");
        }
        return ToUtf8(std::u32string(1, cp));
      }
      default:
        Fail(std::string("unknown escape \\") + c);
    }
  }

  void ExpectDot() {
    SkipSpace();
    if (Peek() != '.') Fail("expected '.' terminating the triple");
    ++pos_;
    SkipSpace();
    if (!AtEnd() && Peek() != '#') Fail("trailing characters after '.'");
  }

 private:
  std::string_view s_;
  size_t line_number_;
  size_t pos_ = 0;
};

void AppendEscaped(std::string& out, std::string_view s, bool iri) {
  for (char c : s) {
    switch (c) {
      case '\\': out += "\\\\"; break;
      case '"': out += iri ? "\"" : "\\\""; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      case '>': out += iri ? "\\u003E" : ">"; break;
      default: out.push_back(c);
    }
  }
}

}  // namespace

bool ParseNTriplesLine(std::string_view line, size_t line_number, Triple* out) {
  while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) {
    line.remove_suffix(1);
  }
  LineParser p(line, line_number);
  p.SkipSpace();
  if (p.AtEnd() || p.Peek() == '#') return false;
  out->subject = p.SubjectOrObject(false);
  p.SkipSpace();
  out->predicate = p.Iri();
  p.SkipSpace();
  out->object = p.SubjectOrObject(true);
  p.ExpectDot();
  return true;
}

std::vector<Triple> ParseNTriples(std::istream& in) {
  std::vector<Triple> triples;
  std::string line;
  size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    Triple t;
    if (ParseNTriplesLine(line, line_number, &t)) triples.push_back(std::move(t));
  }
  return triples;
}

std::vector<Triple> ReadNTriplesFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  try {
    return ParseNTriples(in);
  } catch (const Error& e) {
    throw ParseError(path + ": " + e.what());
  }
}

std::string FormatTerm(const Term& term) {
  std::string out;
  switch (term.kind) {
    case Term::Kind::kIri:
      out.push_back('<');
      AppendEscaped(out, term.value, true);
      out.push_back('>');
      break;
    case Term::Kind::kBlank:
      out = "_:" + term.value;
      break;
    case Term::Kind::kLiteral:
      out.push_back('"');
      AppendEscaped(out, term.value, false);
      out.push_back('"');
      if (!term.language.empty()) {
        out += "@" + term.language;
      } else if (!term.datatype.empty()) {
        out += "^^<" + term.datatype + ">";
      }
      break;
  }
  return out;
}

std::string FormatTriple(const Triple& triple) {
  Term predicate{Term::Kind::kIri, triple.predicate, "", ""};
  return FormatTerm(triple.subject) + " " + FormatTerm(predicate) + " " +
         FormatTerm(triple.object) + " .";
}

}  // namespace tabmatch
