// Copyright 2026 The caseframe Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CASEFRAME_AVM_HPP_
#define CASEFRAME_AVM_HPP_

// Attribute-value matrix text. Grammar:
//
//   value   := ['#' name '='] (bracket | symbol | string) | '#' name
//   bracket := '[' [type] (FEATURE ':' value)* ']'
//
// `;` starts a comment running to the end of the line.

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "caseframe/diagnostics.hpp"
#include "caseframe/feature_structure.hpp"
#include "caseframe/type_lattice.hpp"
#include "json.hpp"

namespace caseframe {

struct Token {
  enum class Kind {
    symbol,     // identifiers, atoms, numbers
    feature,    // SYMBOL immediately followed by ':' (the colon is consumed)
    string,
    tag,        // '#name'
    punct,      // [ ] ( ) & | < = . , :=
    end,
  };
  Kind kind = Kind::end;
  std::string text;
  SourcePos pos;
};

// Throws ParseError on a malformed token.
std::vector<Token> tokenize(std::string_view text, const std::string &file);

struct AvmTerm;

struct AvmFeature {
  std::string name;
  SourcePos pos;
  std::vector<AvmTerm> value;  // exactly one element
};

struct AvmTerm {
  enum class Kind { bracket, symbol, string, tag_ref };
  Kind kind = Kind::bracket;
  SourcePos pos;
  // Type name (bracket, may be empty), atom name, string text, or tag name.
  std::string text;
  // Set when the term is introduced as `#name=...`.
  std::optional<std::string> tag;
  std::vector<AvmFeature> features;

  const AvmTerm *feature(std::string_view name) const;
};

// Recursive-descent reader over a token stream; shared with the lexicon
// parser, which embeds AVMs in its statements.
class AvmReader {
 public:
  AvmReader(const std::vector<Token> &tokens, std::size_t &cursor)
      : tokens_(tokens), cursor_(cursor) {}
  AvmTerm read_value();

 private:
  AvmTerm read_bracket();
  const Token &peek() const { return tokens_[cursor_]; }

  const std::vector<Token> &tokens_;
  std::size_t &cursor_;
};

// Parses exactly one AVM value.
AvmTerm parse_avm_term(std::string_view text, const std::string &file = "<input>");

// Builds and normalizes the structure denoted by `term`. Symbols listed in
// `substitutions` are replaced by the mapped type name first. Throws
// ParseError positioned at the offending term.
FeatureStructure compile_avm(const TypeLattice &lattice, const AvmTerm &term,
                             const std::map<std::string, std::string> &substitutions = {});

FeatureStructure read_avm(const TypeLattice &lattice, std::string_view text,
                          const std::string &file = "<input>");

// Canonical multi-line rendering; byte-stable for isomorphic structures.
std::string write_avm(const TypeLattice &lattice, const FeatureStructure &fs);

// Nested records with explicit tag/ref fields and sorted keys.
nlohmann::json write_tree(const TypeLattice &lattice, const FeatureStructure &fs);

// Single-line rendering of an uncompiled term.
std::string write_term(const AvmTerm &term);

// Replaces (or creates) the value at `path`, adding brackets as needed.
void set_term(AvmTerm &root, const FeaturePath &path, AvmTerm value);

std::string quote(std::string_view text);

}  // namespace caseframe

#endif  // CASEFRAME_AVM_HPP_
