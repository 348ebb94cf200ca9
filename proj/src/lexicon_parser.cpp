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

#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "caseframe/lexicon.hpp"

namespace caseframe {

namespace {

constexpr std::string_view kTierNames[] = {"verb-feature", "morphological", "co-occurrence",
                                           "lexical", "semantic"};

bool is_keyword(const Token &tok) {
  static const std::set<std::string, std::less<>> keywords = {
      "type", "concept", "marker", "constraint", "semantics", "sense", "include"};
  return tok.kind == Token::Kind::symbol && keywords.count(tok.text) > 0;
}

[[noreturn]] void fail(const SourcePos &pos, std::string message) {
  throw ParseError(Diagnostic{pos, Diagnostic::Severity::error, std::move(message)});
}

class Parser {
 public:
  Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}  // NOLINT

  ParseOutput run() {
    ParseOutput out;
    while (peek().kind != Token::Kind::end) {
      std::size_t start = cursor_;
      try {
        out.declarations.push_back(statement());
      } catch (const ParseError &e) {
        out.diagnostics.push_back(e.diagnostic());
        recover(start);
      }
    }
    return out;
  }

 private:
  const Token &peek(std::size_t ahead = 0) const {
    return tokens_[std::min(cursor_ + ahead, tokens_.size() - 1)];
  }
  const Token &next() {
    const Token &tok = peek();
    if (tok.kind != Token::Kind::end) ++cursor_;
    return tok;
  }
  bool at_punct(std::string_view p) const {
    return peek().kind == Token::Kind::punct && peek().text == p;
  }
  bool at_word(std::string_view w) const {
    return peek().kind == Token::Kind::symbol && peek().text == w;
  }
  void expect_punct(std::string_view p, std::string_view what) {
    if (!at_punct(p)) {
      fail(peek().pos, "expected `" + std::string(p) + "` " + std::string(what) + ", found " +
                           describe(peek()));
    }
    ++cursor_;
  }
  static std::string describe(const Token &tok) {
    switch (tok.kind) {
      case Token::Kind::end:
        return "end of input";
      case Token::Kind::string:
        return "string " + quote(tok.text);
      case Token::Kind::feature:
        return "`" + tok.text + ":`";
      case Token::Kind::tag:
        return "`#" + tok.text + "`";
      default:
        return "`" + tok.text + "`";
    }
  }
  dsl::Name name(std::string_view what) {
    if (peek().kind != Token::Kind::symbol) {
      fail(peek().pos, "expected " + std::string(what) + ", found " + describe(peek()));
    }
    const Token &tok = next();
    return {tok.text, tok.pos};
  }

  // Skips past the failing statement: to the next `.` that is followed by a
  // statement keyword or the end of input.
  void recover(std::size_t start) {
    if (cursor_ == start) ++cursor_;
    while (peek().kind != Token::Kind::end) {
      if (at_punct(".") && (is_keyword(peek(1)) || peek(1).kind == Token::Kind::end)) {
        ++cursor_;
        return;
      }
      ++cursor_;
    }
  }

  dsl::Declaration statement() {
    const Token &kw = peek();
    if (kw.kind != Token::Kind::symbol || !is_keyword(kw)) {
      fail(kw.pos, "expected a statement keyword, found " + describe(kw));
    }
    std::string word = kw.text;
    ++cursor_;
    if (word == "type") return type_statement(kw.pos, false);
    if (word == "concept") return type_statement(kw.pos, true);
    if (word == "marker") return marker_statement(kw.pos);
    if (word == "constraint") return constraint_statement(kw.pos);
    if (word == "semantics") return semantics_statement(kw.pos);
    if (word == "sense") return sense_statement(kw.pos);
    return include_statement(kw.pos);
  }

  dsl::Ref ref() {
    dsl::Name n = name("a type or constraint name");
    dsl::Ref out{n.text, std::nullopt, n.pos};
    if (at_punct("(")) {
      ++cursor_;
      out.argument = name("a type argument").text;
      expect_punct(")", "after the type argument");
    }
    return out;
  }

  dsl::TypeStmt type_statement(SourcePos pos, bool is_concept) {
    dsl::TypeStmt stmt;
    stmt.pos = pos;
    stmt.is_concept = is_concept;
    if (is_concept && at_word("major")) {
      stmt.major = true;
      ++cursor_;
    }
    stmt.name = name(is_concept ? "a concept name" : "a type name");
    if (at_punct("<") || at_punct("&")) {
      ++cursor_;
      stmt.parents.push_back(ref());
      while (at_punct("&") || at_punct(",")) {
        ++cursor_;
        stmt.parents.push_back(ref());
      }
    } else if (at_punct("=")) {
      if (is_concept) fail(peek().pos, "concepts take `<` parents, not a `=` subtype list");
      ++cursor_;
      stmt.subtypes.push_back(name("a subtype name"));
      while (at_punct("|")) {
        ++cursor_;
        stmt.subtypes.push_back(name("a subtype name"));
      }
    }
    if (at_punct("[")) {
      if (is_concept) fail(peek().pos, "concepts cannot declare features");
      ++cursor_;
      while (!at_punct("]")) {
        if (peek().kind != Token::Kind::feature) {
          if (peek().kind == Token::Kind::end || at_punct(".")) {
            fail(tokens_[cursor_ - 1].pos, "unterminated feature block");
          }
          fail(peek().pos, "expected FEATURE: in a feature block, found " + describe(peek()));
        }
        const Token &f = next();
        dsl::Name feature{f.text, f.pos};
        dsl::Name value = name("a value type");
        stmt.features.emplace_back(std::move(feature), std::move(value));
      }
      ++cursor_;
    }
    expect_punct(".", "to end the declaration");
    return stmt;
  }

  dsl::MarkerStmt marker_statement(SourcePos pos) {
    dsl::MarkerStmt stmt;
    stmt.pos = pos;
    if (peek().kind != Token::Kind::string) {
      fail(peek().pos, "expected a quoted stem after `marker`, found " + describe(peek()));
    }
    stmt.stem = next().text;
    stmt.concepts.push_back(name("a concept name"));
    while (at_punct(",")) {
      ++cursor_;
      stmt.concepts.push_back(name("a concept name"));
    }
    expect_punct(".", "to end the marker");
    return stmt;
  }

  AvmTerm body() {
    expect_punct(":=", "before the definition body");
    AvmReader reader(tokens_, cursor_);
    AvmTerm term = reader.read_value();
    expect_punct(".", "to end the definition");
    return term;
  }

  dsl::ConstraintStmt constraint_statement(SourcePos pos) {
    dsl::ConstraintStmt stmt;
    stmt.pos = pos;
    stmt.name = name("a constraint name");
    if (at_punct("(")) {
      ++cursor_;
      stmt.parameter = name("a parameter name").text;
      expect_punct(")", "after the parameter");
    }
    if (peek().kind != Token::Kind::symbol) {
      fail(peek().pos, "expected a tier (verb-feature, morphological, co-occurrence, lexical, "
                       "semantic), found " + describe(peek()));
    }
    const Token &tier = next();
    auto parsed = parse_tier(tier.text);
    if (!parsed) fail(tier.pos, "unknown tier `" + tier.text + "`");
    stmt.tier = *parsed;
    stmt.body = body();
    return stmt;
  }

  dsl::SemanticsStmt semantics_statement(SourcePos pos) {
    dsl::SemanticsStmt stmt;
    stmt.pos = pos;
    stmt.name = name("a semantics name");
    stmt.body = body();
    return stmt;
  }

  dsl::SenseStmt sense_statement(SourcePos pos) {
    dsl::SenseStmt stmt;
    stmt.pos = pos;
    stmt.name = name("a sense name");
    expect_punct(":=", "before the constraint list");
    stmt.refs.push_back(ref());
    while (at_punct("&")) {
      ++cursor_;
      stmt.refs.push_back(ref());
    }
    if (at_word("priority")) {
      ++cursor_;
      const Token &num = peek();
      bool negative = false;
      std::string digits = num.text;
      if (num.kind == Token::Kind::symbol && !digits.empty() && digits[0] == '-') {
        negative = true;
        digits.erase(0, 1);
      }
      if (num.kind != Token::Kind::symbol || digits.empty() || digits.size() > 6 ||
          digits.find_first_not_of("0123456789") != std::string::npos) {
        fail(num.pos, "expected an integer priority, found " + describe(num));
      }
      stmt.priority = std::stoi(digits) * (negative ? -1 : 1);
      ++cursor_;
    }
    expect_punct(".", "to end the sense");
    return stmt;
  }

  dsl::IncludeStmt include_statement(SourcePos pos) {
    if (peek().kind != Token::Kind::string) {
      fail(peek().pos, "expected a quoted path after `include`, found " + describe(peek()));
    }
    dsl::IncludeStmt stmt{pos, next().text};
    expect_punct(".", "to end the include");
    return stmt;
  }

  std::vector<Token> tokens_;
  std::size_t cursor_ = 0;
};

}  // namespace

std::string_view to_string(Tier tier) { return kTierNames[static_cast<int>(tier)]; }

std::optional<Tier> parse_tier(std::string_view text) {
  for (int i = 0; i < 5; ++i) {
    if (kTierNames[i] == text) return static_cast<Tier>(i);
  }
  return std::nullopt;
}

std::string dsl::Ref::str() const {
  return argument ? name + "(" + *argument + ")" : name;
}

ParseOutput parse(std::string_view source, const std::string &file) {
  std::vector<Token> tokens;
  try {
    tokens = tokenize(source, file);
  } catch (const ParseError &e) {
    return {{}, {e.diagnostic()}};
  }
  return Parser(std::move(tokens)).run();
}

namespace {

struct IncludeWalker {
  ParseOutput out;
  std::set<std::string> seen;

  void visit(const std::filesystem::path &path, const SourcePos *from) {
    std::error_code ec;
    auto canonical = std::filesystem::weakly_canonical(path, ec);
    std::string key = ec ? path.string() : canonical.string();
    if (!seen.insert(key).second) return;  // already spliced
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      SourcePos pos = from ? *from : SourcePos{path.string(), 0, 0};
      out.diagnostics.push_back({pos, Diagnostic::Severity::error,
                                 "cannot read lexicon file `" + path.string() + "`"});
      return;
    }
    std::ostringstream text;
    text << in.rdbuf();
    ParseOutput parsed = parse(text.str(), path.string());
    for (auto &d : parsed.diagnostics) out.diagnostics.push_back(std::move(d));
    for (auto &decl : parsed.declarations) {
      if (auto *inc = std::get_if<dsl::IncludeStmt>(&decl)) {
        visit((path.parent_path() / inc->path).lexically_normal(), &inc->pos);
        continue;
      }
      out.declarations.push_back(std::move(decl));
    }
  }
};

}  // namespace

ParseOutput parse_files(const std::vector<std::string> &paths) {
  IncludeWalker walker;
  for (const auto &p : paths) walker.visit(p, nullptr);
  return std::move(walker.out);
}

}  // namespace caseframe
