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

#include "caseframe/avm.hpp"

#include <set>

#include "caseframe/unify.hpp"
#include "workspace.hpp"

namespace caseframe {

std::string Diagnostic::str() const {
  std::string out = pos.file + ":" + std::to_string(pos.line) + ":" + std::to_string(pos.col) + ": ";
  out += severity == Severity::error ? "error: " : "warning: ";
  out += message;
  return out;
}

ParseError::ParseError(Diagnostic diag) : std::runtime_error(diag.str()), diag_(std::move(diag)) {}

namespace {

bool is_symbol_char(unsigned char c) {
  return std::isalnum(c) || c == '-' || c == '_' || c == '+' || c == '*' || c == '\'' ||
         c == '/' || c == '!' || c == '?' || c >= 0x80;
}

[[noreturn]] void error_at(SourcePos pos, std::string message) {
  throw ParseError(Diagnostic{std::move(pos), Diagnostic::Severity::error, std::move(message)});
}

}  // namespace

std::vector<Token> tokenize(std::string_view text, const std::string &file) {
  std::vector<Token> out;
  std::size_t i = 0;
  int line = 1, col = 1;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n && i < text.size(); ++k, ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  while (i < text.size()) {
    auto c = static_cast<unsigned char>(text[i]);
    if (std::isspace(c)) {
      advance(1);
      continue;
    }
    if (c == ';') {
      while (i < text.size() && text[i] != '\n') advance(1);
      continue;
    }
    SourcePos pos{file, line, col};
    if (c == '"') {
      std::string value;
      advance(1);
      bool closed = false;
      while (i < text.size()) {
        char ch = text[i];
        if (ch == '"') {
          advance(1);
          closed = true;
          break;
        }
        if (ch == '\\' && i + 1 < text.size()) {
          value += text[i + 1];
          advance(2);
          continue;
        }
        if (ch == '\n') break;
        value += ch;
        advance(1);
      }
      if (!closed) error_at(pos, "unterminated string");
      out.push_back({Token::Kind::string, std::move(value), pos});
      continue;
    }
    if (c == '#') {
      advance(1);
      std::size_t start = i;
      while (i < text.size() && is_symbol_char(static_cast<unsigned char>(text[i]))) advance(1);
      if (i == start) error_at(pos, "expected tag name after `#`");
      out.push_back({Token::Kind::tag, std::string(text.substr(start, i - start)), pos});
      continue;
    }
    if (c == ':') {
      if (i + 1 < text.size() && text[i + 1] == '=') {
        advance(2);
        out.push_back({Token::Kind::punct, ":=", pos});
      } else {
        advance(1);
        out.push_back({Token::Kind::punct, ":", pos});
      }
      continue;
    }
    if (std::string_view("[]()&|<=.,").find(static_cast<char>(c)) != std::string_view::npos) {
      advance(1);
      out.push_back({Token::Kind::punct, std::string(1, static_cast<char>(c)), pos});
      continue;
    }
    if (is_symbol_char(c)) {
      std::size_t start = i;
      while (i < text.size() && is_symbol_char(static_cast<unsigned char>(text[i]))) advance(1);
      std::string word(text.substr(start, i - start));
      bool feature = i < text.size() && text[i] == ':' &&
                     !(i + 1 < text.size() && text[i + 1] == '=');
      if (feature) {
        advance(1);
        out.push_back({Token::Kind::feature, std::move(word), pos});
      } else {
        out.push_back({Token::Kind::symbol, std::move(word), pos});
      }
      continue;
    }
    error_at(pos, std::string("unexpected character `") + static_cast<char>(c) + "`");
  }
  out.push_back({Token::Kind::end, "", SourcePos{file, line, col}});
  return out;
}

const AvmTerm *AvmTerm::feature(std::string_view name) const {
  for (const auto &f : features) {
    if (f.name == name) return &f.value.front();
  }
  return nullptr;
}

AvmTerm AvmReader::read_value() {
  const Token &tok = peek();
  switch (tok.kind) {
    case Token::Kind::tag: {
      AvmTerm ref{AvmTerm::Kind::tag_ref, tok.pos, tok.text, std::nullopt, {}};
      ++cursor_;
      if (peek().kind == Token::Kind::punct && peek().text == "=") {
        ++cursor_;
        AvmTerm inner = read_value();
        if (inner.kind == AvmTerm::Kind::tag_ref || inner.tag) {
          error_at(inner.pos, "a tag cannot be bound to another tag");
        }
        inner.tag = ref.text;
        inner.pos = ref.pos;
        return inner;
      }
      return ref;
    }
    case Token::Kind::string: {
      AvmTerm term{AvmTerm::Kind::string, tok.pos, tok.text, std::nullopt, {}};
      ++cursor_;
      return term;
    }
    case Token::Kind::symbol: {
      AvmTerm term{AvmTerm::Kind::symbol, tok.pos, tok.text, std::nullopt, {}};
      ++cursor_;
      return term;
    }
    case Token::Kind::punct:
      if (tok.text == "[") return read_bracket();
      error_at(tok.pos, "expected a value, found `" + tok.text + "`");
    case Token::Kind::feature:
      error_at(tok.pos, "expected a value, found feature `" + tok.text + ":`");
    case Token::Kind::end:
      error_at(tok.pos, "expected a value, found end of input");
  }
  error_at(tok.pos, "expected a value");
}

AvmTerm AvmReader::read_bracket() {
  AvmTerm term{AvmTerm::Kind::bracket, peek().pos, "", std::nullopt, {}};
  ++cursor_;
  if (peek().kind == Token::Kind::symbol) {
    term.text = peek().text;
    ++cursor_;
  }
  std::set<std::string> seen;
  while (true) {
    const Token &tok = peek();
    if (tok.kind == Token::Kind::punct && tok.text == "]") {
      ++cursor_;
      return term;
    }
    if (tok.kind == Token::Kind::feature) {
      if (!seen.insert(tok.text).second) {
        error_at(tok.pos, "feature " + tok.text + " appears twice in one matrix");
      }
      AvmFeature feature{tok.text, tok.pos, {}};
      ++cursor_;
      feature.value.push_back(read_value());
      term.features.push_back(std::move(feature));
      continue;
    }
    if (tok.kind == Token::Kind::end || (tok.kind == Token::Kind::punct && tok.text == ".")) {
      error_at(term.pos, "unterminated matrix: `[` is never closed");
    }
    error_at(tok.pos, "expected FEATURE: or `]`, found `" + tok.text + "`");
  }
}

AvmTerm parse_avm_term(std::string_view text, const std::string &file) {
  auto tokens = tokenize(text, file);
  std::size_t cursor = 0;
  AvmReader reader(tokens, cursor);
  AvmTerm term = reader.read_value();
  if (tokens[cursor].kind != Token::Kind::end) {
    error_at(tokens[cursor].pos, "trailing input after value: `" + tokens[cursor].text + "`");
  }
  return term;
}

namespace {

struct Compiler {
  const TypeLattice &lattice;
  const std::map<std::string, std::string> &substitutions;
  detail::Workspace ws{lattice};
  std::map<std::string, NodeIndex> tags;
  const AvmTerm *root_term = nullptr;

  TypeId lookup(const std::string &name, const SourcePos &pos) {
    const std::string *resolved = &name;
    if (auto it = substitutions.find(name); it != substitutions.end()) resolved = &it->second;
    auto t = lattice.find(*resolved);
    if (!t) error_at(pos, "unknown type `" + *resolved + "`");
    return *t;
  }

  void check(const AvmTerm &term) {
    if (const auto &failure = ws.failure()) {
      error_at(term.pos, failure->describe());
    }
  }

  NodeIndex compile(const AvmTerm &term, const FeaturePath &path) {
    NodeIndex node = 0;
    switch (term.kind) {
      case AvmTerm::Kind::tag_ref: {
        auto [it, inserted] = tags.emplace(term.text, 0);
        if (inserted) it->second = ws.add(kTopType);
        return it->second;
      }
      case AvmTerm::Kind::string:
        node = ws.add(kStringType, term.text);
        break;
      case AvmTerm::Kind::symbol:
        node = ws.add(lookup(term.text, term.pos));
        break;
      case AvmTerm::Kind::bracket: {
        node = ws.add(term.text.empty() ? kTopType : lookup(term.text, term.pos));
        for (const auto &feature : term.features) {
          FeaturePath child_path = path;
          child_path.push_back(feature.name);
          NodeIndex child = compile(feature.value.front(), child_path);
          if (!ws.attach(node, feature.name, child, path)) check(feature.value.front());
        }
        break;
      }
    }
    if (term.tag) {
      auto [it, inserted] = tags.emplace(*term.tag, node);
      if (!inserted && !ws.unify(it->second, node, path)) check(term);
    }
    return node;
  }
};

}  // namespace

FeatureStructure compile_avm(const TypeLattice &lattice, const AvmTerm &term,
                             const std::map<std::string, std::string> &substitutions) {
  Compiler compiler{lattice, substitutions};
  NodeIndex root = compiler.compile(term, {});
  UnifyResult result = compiler.ws.finish(root);
  if (!result) error_at(term.pos, result.failure().describe());
  return std::move(result.value());
}

FeatureStructure read_avm(const TypeLattice &lattice, std::string_view text,
                          const std::string &file) {
  return compile_avm(lattice, parse_avm_term(text, file));
}

std::string quote(std::string_view text) {
  std::string out = "\"";
  for (char c : text) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  out += '"';
  return out;
}

namespace {

struct Printer {
  const TypeLattice &lattice;
  const FeatureStructure &fs;
  std::vector<unsigned> in_degree = fs.in_degrees();
  std::vector<int> tag = std::vector<int>(fs.size(), 0);
  int next_tag = 1;
  std::string out;

  void value(NodeIndex n, int depth) {
    if (tag[n] > 0) {
      out += "#" + std::to_string(tag[n]);
      return;
    }
    if (in_degree[n] > 1) {
      tag[n] = next_tag++;
      out += "#" + std::to_string(tag[n]) + "=";
    }
    const Node &node = fs.node(n);
    if (node.literal) {
      out += quote(*node.literal);
      return;
    }
    if (node.arcs.empty()) {
      out += lattice.name(node.type);
      return;
    }
    out += "[" + lattice.name(node.type);
    for (const auto &arc : node.arcs) {
      out += "\n";
      out.append(static_cast<std::size_t>(2 * (depth + 1)), ' ');
      out += arc.feature + ": ";
      value(arc.target, depth + 1);
    }
    out += "]";
  }

  nlohmann::json tree(NodeIndex n) {
    if (tag[n] > 0) return nlohmann::json{{"ref", tag[n]}};
    nlohmann::json j;
    if (in_degree[n] > 1) {
      tag[n] = next_tag++;
      j["tag"] = tag[n];
    }
    const Node &node = fs.node(n);
    j["type"] = lattice.name(node.type);
    if (node.literal) j["value"] = *node.literal;
    if (!node.arcs.empty()) {
      nlohmann::json features = nlohmann::json::object();
      for (const auto &arc : node.arcs) features[arc.feature] = tree(arc.target);
      j["features"] = std::move(features);
    }
    return j;
  }
};

}  // namespace

std::string write_avm(const TypeLattice &lattice, const FeatureStructure &fs) {
  Printer p{lattice, fs};
  p.value(fs.root(), 0);
  p.out += "\n";
  return std::move(p.out);
}

nlohmann::json write_tree(const TypeLattice &lattice, const FeatureStructure &fs) {
  Printer p{lattice, fs};
  return p.tree(fs.root());
}

std::string write_term(const AvmTerm &term) {
  std::string out;
  if (term.tag) out += "#" + *term.tag + "=";
  switch (term.kind) {
    case AvmTerm::Kind::tag_ref: return "#" + term.text;
    case AvmTerm::Kind::string: return out + quote(term.text);
    case AvmTerm::Kind::symbol: return out + term.text;
    case AvmTerm::Kind::bracket:
      out += "[" + term.text;
      for (const auto &f : term.features) {
        if (out.back() != '[') out += ' ';
        out += f.name + ": " + write_term(f.value.front());
      }
      return out + "]";
  }
  return out;
}

void set_term(AvmTerm &root, const FeaturePath &path, AvmTerm value) {
  if (path.empty()) {
    root = std::move(value);
    return;
  }
  AvmTerm *cur = &root;
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (cur->kind != AvmTerm::Kind::bracket) {
      if (cur->kind == AvmTerm::Kind::symbol) {
        AvmTerm bracket{AvmTerm::Kind::bracket, cur->pos, cur->text, cur->tag, {}};
        *cur = std::move(bracket);
      } else {
        throw std::invalid_argument("cannot descend into a string or tag at " + to_string(path));
      }
    }
    AvmFeature *slot = nullptr;
    for (auto &f : cur->features) {
      if (f.name == path[i]) slot = &f;
    }
    if (!slot) {
      cur->features.push_back({path[i], cur->pos, {AvmTerm{AvmTerm::Kind::bracket, cur->pos, "", std::nullopt, {}}}});
      slot = &cur->features.back();
    }
    if (i + 1 == path.size()) {
      slot->value.front() = std::move(value);
      return;
    }
    cur = &slot->value.front();
  }
}

}  // namespace caseframe
