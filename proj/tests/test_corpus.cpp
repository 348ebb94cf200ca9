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


#include <fstream>

#include "caseframe/corpus.hpp"
#include "caseframe/resolver.hpp"
#include "doctest.h"
#include "support/testkit.hpp"

using namespace caseframe;

namespace {

std::filesystem::path scratch(const std::string &text) {
  auto path = std::filesystem::temp_directory_path() / "caseframe-manifest.scratch";
  std::ofstream(path) << text;
  return path;
}

}  // namespace

TEST_CASE("the shipped manifest") {
  CorpusManifest m = read_manifest(testkit::manifest_path());
  CHECK(m.goldens.size() == 19);
  CHECK(m.empty_cases.size() == 3);
  CHECK(m.negatives.size() == 80);
  CHECK(m.cases().size() == 20);
  REQUIRE(m.lexicons.size() == 1);
  CHECK(std::filesystem::exists(m.lexicons[0]));
  CHECK(m.expected_path(m.goldens[0]).filename() == "expected-1-SENSE-EAT1.avm");
}

TEST_CASE("corpus and negative checks pass on the reference lexicon") {
  CorpusManifest m = read_manifest(testkit::manifest_path());
  CorpusReport golden = corpus_check(testkit::reference(), m);
  for (const auto &e : golden.entries) {
    CAPTURE(e.detail);
    CHECK(e.passed);
  }
  CorpusReport negative = negative_check(testkit::reference(), m);
  CHECK(negative.entries.size() == m.negatives.size());
  CHECK(negative.passed());
}

TEST_CASE("a mutation removes its sense") {
  CorpusManifest m = read_manifest(testkit::manifest_path());
  const auto &n = m.negatives.front();
  FeatureStructure changed = mutated_input(testkit::reference(), m, n);
  for (const auto &r : resolve(testkit::reference(), changed)) CHECK(r.sense != n.sense);
}

TEST_CASE("a wrong golden is caught") {
  CorpusManifest m = read_manifest(testkit::manifest_path());
  m.goldens[0].sense = "SENSE-GET-MENTALLY-DERANGED";
  CHECK_FALSE(corpus_check(testkit::reference(), m).passed());

  CorpusManifest swapped = read_manifest(testkit::manifest_path());
  swapped.negatives[0].constraint = "NO-SUCH-CONSTRAINT";
  CHECK(negative_check(testkit::reference(), swapped).failures() == 1);
}

TEST_CASE("manifest errors") {
  auto bad = scratch("lexicon ../lexicons/reference.cfl\ngolden kafa-adam one SENSE-X\n");
  try {
    read_manifest(bad);
    FAIL("expected a parse error");
  } catch (const ParseError &e) {
    CHECK(e.diagnostic().pos.line == 2);
  }
  CHECK_THROWS_AS(read_manifest(scratch("frobnicate x\n")), ParseError);
  CHECK_THROWS_AS(read_manifest(scratch("negative kafa-adam SENSE-X C VERB.STEM\n")), ParseError);
  std::filesystem::remove(bad);
  CHECK_THROWS_AS(read_manifest(testkit::source_dir() / "frames" / "no-such-manifest"), std::runtime_error);
}
