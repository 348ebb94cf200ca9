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

#include "caseframe/corpus.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "caseframe/avm.hpp"
#include "caseframe/resolver.hpp"

namespace caseframe {

namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

}  // namespace

std::vector<std::string> CorpusManifest::cases() const {
  std::vector<std::string> out;
  auto add = [&](const std::string &c) {
    if (std::find(out.begin(), out.end(), c) == out.end()) out.push_back(c);
  };
  for (const auto &g : goldens) add(g.case_name);
  for (const auto &c : empty_cases) add(c);
  return out;
}

fs::path CorpusManifest::input_path(const std::string &case_name) const {
  return dir / case_name / "input.avm";
}

fs::path CorpusManifest::expected_path(const Golden &g) const {
  return dir / g.case_name / ("expected-" + std::to_string(g.rank) + "-" + g.sense + ".avm");
}

CorpusManifest read_manifest(const fs::path &file) {
  CorpusManifest m;
  m.dir = file.parent_path();
  std::istringstream in(slurp(file));
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    auto fail = [&](const std::string &msg) {
      throw ParseError({{file.string(), number, 1}, Diagnostic::Severity::error, msg});
    };
    std::istringstream words(line);
    std::string kind;
    if (!(words >> kind) || kind[0] == '#') continue;
    if (kind == "lexicon") {
      std::string path;
      if (!(words >> path)) fail("lexicon needs a path");
      m.lexicons.push_back(m.dir / path);
    } else if (kind == "golden") {
      CorpusManifest::Golden g;
      if (!(words >> g.case_name >> g.rank >> g.sense)) fail("golden needs CASE RANK SENSE");
      m.goldens.push_back(g);
    } else if (kind == "none") {
      std::string c;
      if (!(words >> c)) fail("none needs CASE");
      m.empty_cases.push_back(c);
    } else if (kind == "negative") {
      CorpusManifest::Negative n;
      std::string path;
      if (!(words >> n.case_name >> n.sense >> n.constraint >> path)) {
        fail("negative needs CASE SENSE CONSTRAINT PATH VALUE");
      }
      std::getline(words >> std::ws, n.value);
      if (n.value.empty()) fail("negative needs a value");
      n.path = parse_path(path);
      n.line = number;
      m.negatives.push_back(std::move(n));
    } else {
      fail("unknown manifest entry `" + kind + "`");
    }
  }
  return m;
}

std::size_t CorpusReport::failures() const {
  return static_cast<std::size_t>(
      std::count_if(entries.begin(), entries.end(), [](const CorpusEntry &e) { return !e.passed; }));
}

CorpusReport corpus_check(const Lexicon &lex, const CorpusManifest &manifest) {
  const TypeLattice &lat = lex.lattice();
  CorpusReport report;
  for (const auto &c : manifest.cases()) {
    CorpusEntry entry{c, false, ""};
    try {
      FeatureStructure input = read_avm(lat, slurp(manifest.input_path(c)),
                                        manifest.input_path(c).string());
      auto results = resolve(lex, input);
      std::vector<CorpusManifest::Golden> expected;
      for (const auto &g : manifest.goldens) {
        if (g.case_name == c) expected.push_back(g);
      }
      std::sort(expected.begin(), expected.end(),
                [](const auto &a, const auto &b) { return a.rank < b.rank; });
      std::ostringstream why;
      if (results.size() != expected.size()) {
        why << "expected " << expected.size() << " readings, got " << results.size() << ";";
      }
      for (std::size_t i = 0; i < std::min(results.size(), expected.size()); ++i) {
        const auto &g = expected[i];
        const auto &r = results[i];
        if (g.rank != r.rank || g.sense != r.sense) {
          why << " rank " << r.rank << " is " << r.sense << ", expected " << g.sense << ";";
          continue;
        }
        FeatureStructure want = read_avm(lat, slurp(manifest.expected_path(g)),
                                         manifest.expected_path(g).string());
        if (!(want == r.frame)) {
          why << " rank " << r.rank << " " << r.sense << " differs from "
              << manifest.expected_path(g).filename().string() << ";";
        }
      }
      entry.detail = why.str();
      entry.passed = entry.detail.empty();
    } catch (const ParseError &e) {
      entry.detail = e.diagnostic().str();
    } catch (const std::exception &e) {
      entry.detail = e.what();
    }
    report.entries.push_back(std::move(entry));
  }
  return report;
}

FeatureStructure mutated_input(const Lexicon &lex, const CorpusManifest &manifest,
                               const CorpusManifest::Negative &n) {
  fs::path input = manifest.input_path(n.case_name);
  AvmTerm term = parse_avm_term(slurp(input), input.string());
  set_term(term, n.path, parse_avm_term(n.value, "manifest:" + std::to_string(n.line)));
  return compile_avm(lex.lattice(), term);
}

CorpusReport negative_check(const Lexicon &lex, const CorpusManifest &manifest) {
  CorpusReport report;
  for (const auto &n : manifest.negatives) {
    CorpusEntry entry{n.case_name + " without " + n.constraint, false, ""};
    try {
      FeatureStructure input = mutated_input(lex, manifest, n);
      auto results = resolve(lex, input);
      bool still = std::any_of(results.begin(), results.end(),
                               [&](const ResolutionResult &r) { return r.sense == n.sense; });
      Explanation ex = explain(lex, input, n.sense);
      bool blamed = std::any_of(ex.records.begin(), ex.records.end(), [&](const TraceRecord &r) {
        return !r.accepted && r.name == n.constraint;
      });
      if (still) entry.detail = n.sense + " still resolves";
      else if (!blamed) entry.detail = "explain does not blame " + n.constraint;
      entry.passed = !still && blamed;
    } catch (const ParseError &e) {
      entry.detail = e.diagnostic().str();
    } catch (const std::exception &e) {
      entry.detail = e.what();
    }
    report.entries.push_back(std::move(entry));
  }
  return report;
}

}  // namespace caseframe
