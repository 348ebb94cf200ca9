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

#ifndef CASEFRAME_CORPUS_HPP_
#define CASEFRAME_CORPUS_HPP_

#include <filesystem>
#include <string>
#include <vector>

#include "caseframe/feature_structure.hpp"
#include "caseframe/lexicon.hpp"

namespace caseframe {

// The golden frame corpus: frames/<case>/input.avm plus
// expected-<rank>-<SENSE>.avm, indexed by a manifest file.
struct CorpusManifest {
  struct Golden {
    std::string case_name;
    int rank = 0;
    std::string sense;
  };
  struct Negative {
    std::string case_name;
    std::string sense;
    std::string constraint;
    FeaturePath path;
    std::string value;  // AVM text
    int line = 0;
  };

  std::filesystem::path dir;
  std::vector<std::filesystem::path> lexicons;
  std::vector<Golden> goldens;
  std::vector<std::string> empty_cases;
  std::vector<Negative> negatives;

  // Every case with an input, golden cases first, in manifest order.
  std::vector<std::string> cases() const;
  std::filesystem::path input_path(const std::string &case_name) const;
  std::filesystem::path expected_path(const Golden &g) const;
};

// Throws ParseError on a malformed line.
CorpusManifest read_manifest(const std::filesystem::path &file);

struct CorpusEntry {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct CorpusReport {
  std::vector<CorpusEntry> entries;
  std::size_t failures() const;
  bool passed() const { return failures() == 0; }
};

// Each case resolves to exactly its expected files, isomorphic and in rank
// order; `none` cases resolve to nothing.
CorpusReport corpus_check(const Lexicon &lex, const CorpusManifest &manifest);

// Each mutated input loses the sense, and explain blames the constraint.
CorpusReport negative_check(const Lexicon &lex, const CorpusManifest &manifest);

// The input of a negative control, mutated.
FeatureStructure mutated_input(const Lexicon &lex, const CorpusManifest &manifest,
                               const CorpusManifest::Negative &n);

}  // namespace caseframe

#endif  // CASEFRAME_CORPUS_HPP_
