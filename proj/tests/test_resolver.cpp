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


#include <algorithm>
#include <set>

#include "caseframe/avm.hpp"
#include "caseframe/resolver.hpp"
#include "doctest.h"
#include "support/testkit.hpp"

using namespace caseframe;

namespace {

const Lexicon &ref() { return testkit::reference(); }
const TypeLattice &lat() { return ref().lattice(); }

FeatureStructure frame(const std::string &name, const std::string &file = "input.avm") {
  return read_avm(lat(), testkit::read_text(testkit::source_dir() / "frames" / name / file));
}

FeatureStructure text(std::string_view avm) { return read_avm(lat(), avm); }

std::vector<std::string> senses(const std::vector<ResolutionResult> &rs) {
  std::vector<std::string> out;
  for (const auto &r : rs) out.push_back(r.sense);
  return out;
}

std::string value_at(const FeatureStructure &fs, const FeaturePath &path) {
  auto n = fs.get(path);
  if (!n) return "<absent>";
  const auto &node = fs.node(*n);
  return node.literal ? *node.literal : std::string(lat().name(node.type));
}

const char *kMemurPara =
    "[VERB: [STEM: \"ye\" VOICE: active]"
    " ARGUMENTS: [SUBJ: [HEAD: [STEM: \"memur\" CASE: nom]]"
    "             DIR-OBJ: [HEAD: [STEM: \"para\" CASE: nom POSS: none]]]]";

}  // namespace

TEST_CASE("Demet pasta yedi: one reading, eat") {
  auto rs = resolve(ref(), frame("ye-eat-demet-pasta"));
  REQUIRE(rs.size() == 1);
  CHECK(rs[0].sense == "SENSE-EAT1");
  CHECK(rs[0].rank == 1);
  CHECK(rs[0].flags.empty());
  CHECK(rs[0].frame == frame("ye-eat-demet-pasta", "expected-1-SENSE-EAT1.avm"));
  CHECK(value_at(rs[0].frame, {"SEMANTICS", "PRED"}) == "to eat");
  CHECK(rs[0].frame.get({"SEMANTICS", "ROLES", "AGENT"}) == rs[0].frame.get({"ARGUMENTS", "SUBJ"}));
}

TEST_CASE("adam kafayı yedi: only the idiom") {
  auto rs = resolve(ref(), frame("kafa-adam"));
  CHECK(senses(rs) == std::vector<std::string>{"SENSE-GET-MENTALLY-DERANGED"});
}

TEST_CASE("ranking puts the more specific or preferred sense first") {
  auto gec = resolve(ref(), frame("gec-see-off"));
  REQUIRE(gec.size() == 2);
  CHECK(gec[0].sense == "SENSE-SEE-OFF");
  CHECK(gec[1].rank == 2);
  for (std::size_t i = 1; i < gec.size(); ++i) {
    CHECK(rank_before(gec[i - 1], write_avm(lat(), gec[i - 1].frame), gec[i],
                      write_avm(lat(), gec[i].frame)));
  }
  auto out_of = resolve(ref(), frame("ye-eat-out-of"));
  CHECK(senses(out_of) == std::vector<std::string>{"SENSE-EAT-OUT-OF", "SENSE-EAT1"});
  CHECK(out_of[0].priority > out_of[1].priority);
}

TEST_CASE("şaş: three readings keyed by the oblique case") {
  CHECK(senses(resolve(ref(), frame("sas-deviate-from"))) ==
        std::vector<std::string>{"SENSE-DEVIATE-FROM"});
  CHECK(senses(resolve(ref(), frame("sas-be-surprised-at"))) ==
        std::vector<std::string>{"SENSE-BE-SURPRISED-AT"});
  CHECK(senses(resolve(ref(), frame("sas-be-confused-about"))) ==
        std::vector<std::string>{"SENSE-BE-CONFUSED-ABOUT"});
  CHECK(resolve(ref(), frame("sas-two-objects")).empty());
}

TEST_CASE("an embedded clause is resolved first") {
  auto rs = resolve(ref(), frame("tut-feel-like-doing"));
  REQUIRE(rs.size() == 1);
  CHECK(rs[0].sense == "SENSE-FEEL-LIKE-DOING");
  CHECK(value_at(rs[0].frame, {"ARGUMENTS", "SUBJ", "SEMANTICS", "PRED"}) == "to eat");
  CHECK(value_at(rs[0].frame, {"SEMANTICS", "PRED"}) == "to feel like doing");
}

TEST_CASE("the depth limit") {
  CHECK_NOTHROW(resolve(ref(), frame("tut-feel-like-doing"), {2, false}));
  try {
    resolve(ref(), frame("tut-feel-like-doing"), {1, false});
    FAIL("expected a depth error");
  } catch (const DepthLimitError &e) {
    CHECK(e.path() == FeaturePath{"ARGUMENTS", "SUBJ"});
  }
  CHECK_THROWS_AS(resolve(ref(), frame("tut-feel-like-doing"), {0, false}), std::invalid_argument);
  CHECK_THROWS_AS(resolve_oracle(ref(), frame("tut-feel-like-doing"), 1), DepthLimitError);
}

TEST_CASE("trace lists every constraint and the semantics") {
  auto rs = resolve(ref(), frame("ye-eat-demet-pasta"), {4, true});
  REQUIRE(rs.size() == 1);
  const SenseDef *eat1 = ref().sense("SENSE-EAT1");
  REQUIRE(rs[0].trace.size() == eat1->constraints.size() + 1);
  CHECK(rs[0].trace.front().name == "VERB-IS-YE");
  CHECK(rs[0].trace.back().name == "SEM-EAT1");
  CHECK_FALSE(rs[0].trace.back().tier);
  CHECK(resolve(ref(), frame("ye-eat-demet-pasta")).front().trace.empty());
}

TEST_CASE("explain") {
  Explanation eat1 = explain(ref(), frame("ye-eat-demet-pasta"), "SENSE-EAT1");
  CHECK(eat1.accepted());

  Explanation gmd = explain(ref(), frame("ye-eat-demet-pasta"), "SENSE-GET-MENTALLY-DERANGED");
  CHECK_FALSE(gmd.accepted());
  std::set<std::string> failed;
  for (const auto &r : gmd.records) {
    if (r.accepted) continue;
    failed.insert(r.name);
    REQUIRE(r.failure);
  }
  CHECK(failed.count("DIR-OBJ-LEX-KAFA") == 1);
  CHECK(failed.count("DIR-OBJ-IS-ACC") == 1);
  for (const auto &r : gmd.records) {
    if (r.name == "DIR-OBJ-LEX-KAFA") {
      CHECK(r.failure->describe() == "clash at ARGUMENTS.DIR-OBJ.HEAD.LEX: \"pasta\" vs \"kafa\"");
    }
  }

  Explanation other_verb = explain(ref(), frame("sas-deviate-from"), "SENSE-EAT1");
  REQUIRE_FALSE(other_verb.records.empty());
  CHECK(other_verb.records.front().name == "VERB-IS-YE");
  CHECK_FALSE(other_verb.records.front().accepted);

  CHECK_THROWS_AS(explain(ref(), frame("ye-eat-demet-pasta"), "SENSE-NONE"), LookupError);
}

TEST_CASE("explain agrees with resolve") {
  for (const char *c : {"ye-eat-demet-pasta", "kafa-adam", "ye-eat-out-of", "gec-see-off", "dus-fall"}) {
    CAPTURE(c);
    auto found = senses(resolve(ref(), frame(c)));
    for (const auto &s : ref().senses()) {
      bool resolved = std::find(found.begin(), found.end(), s.name) != found.end();
      CHECK(explain(ref(), frame(c), s.name).accepted() == resolved);
    }
  }
}

TEST_CASE("generate") {
  auto gmd = generate(ref(), text("[semantics PRED: \"get mentally deranged\"]"));
  REQUIRE(gmd.size() == 1);
  CHECK(gmd[0].sense == "SENSE-GET-MENTALLY-DERANGED");
  CHECK(value_at(gmd[0].frame, {"VERB", "STEM"}) == "ye");
  CHECK(value_at(gmd[0].frame, {"ARGUMENTS", "DIR-OBJ", "HEAD", "LEX"}) == "kafa");
  CHECK(value_at(gmd[0].frame, {"ARGUMENTS", "DIR-OBJ", "HEAD", "CASE"}) == "acc");

  auto eat = generate(ref(), text("[semantics PRED: \"to eat\"]"));
  REQUIRE(eat.size() == 1);
  CHECK(value_at(eat[0].frame, {"ARGUMENTS", "DIR-OBJ"}) == "optional-edible");

  CHECK(generate(ref(), text("[semantics PRED: \"to fly\"]")).empty());
  // A whole-frame query works too.
  auto by_verb = generate(ref(), text("[VERB: [STEM: \"şaş\"]]"));
  CHECK(by_verb.size() == 3);
}

TEST_CASE("readings are sound") {
  for (const char *c : {"ye-eat-demet-pasta", "ye-eat-out-of", "gotur-take", "tut-feel-like-doing"}) {
    FeatureStructure in = frame(c);
    for (const auto &r : resolve(ref(), in)) {
      CAPTURE(r.sense);
      CHECK(subsumes(lat(), in, r.frame));
      CHECK(subsumes(lat(), ref().sense(r.sense)->conjunction, r.frame));
    }
  }
}

TEST_CASE("adding information never adds readings") {
  for (const char *c : {"ye-eat-demet-pasta", "ye-eat-out-of", "gec-see-off", "ye-be-unfair"}) {
    CAPTURE(c);
    FeatureStructure in = frame(c);
    auto broad = senses(resolve(ref(), in));
    for (const char *extra : {"[VERB: [VOICE: passive]]", "[VERB: [AGR: 3sg]]",
                              "[ARGUMENTS: [OBL-LOC: nil]]", "[ARGUMENTS: [DIR-OBJ: nil]]"}) {
      UnifyResult narrow = unify(lat(), in, text(extra));
      if (!narrow) continue;
      for (const auto &s : senses(resolve(ref(), narrow.value()))) {
        CHECK(std::find(broad.begin(), broad.end(), s) != broad.end());
      }
    }
  }
}

TEST_CASE("unmarked stems are flagged") {
  auto rs = resolve(ref(), text(kMemurPara));
  CHECK(senses(rs) == std::vector<std::string>{"SENSE-ACCEPT-BRIBE", "SENSE-COST-A-LOT"});
  for (const auto &r : rs) CHECK(r.flags == std::vector<std::string>{std::string(kUnmarkedStemFlag)});
  // A marked subject decides the reading and carries no flag.
  auto adam = resolve(ref(), frame("ye-accept-bribe"));
  CHECK(senses(adam) == std::vector<std::string>{"SENSE-ACCEPT-BRIBE"});
  CHECK(adam[0].flags.empty());
}

TEST_CASE("agrees with the naive resolver") {
  std::mt19937 rng(7);
  for (int i = 0; i < 60; ++i) {
    FeatureStructure in = testkit::random_frame(rng);
    auto fast = resolve(ref(), in);
    auto slow = resolve_oracle(ref(), in);
    REQUIRE(fast.size() == slow.size());
    for (std::size_t k = 0; k < fast.size(); ++k) {
      CHECK(fast[k].sense == slow[k].sense);
      CHECK(fast[k].frame == slow[k].frame);
      CHECK(fast[k].flags == slow[k].flags);
    }
  }
}

TEST_CASE("a lexicon without senses resolves nothing") {
  auto dir = testkit::source_dir() / "lexicons";
  LoadOutput bare = load_files({(dir / "schema.cfl").string(), (dir / "ontology.cfl").string()});
  REQUIRE(bare.diagnostics.empty());
  CHECK(bare.lexicon->senses().empty());
  FeatureStructure in = read_avm(bare.lexicon->lattice(), testkit::read_text(dir / ".." / "frames" / "kafa-adam" / "input.avm"));
  CHECK(resolve(*bare.lexicon, in).empty());
  CHECK(generate(*bare.lexicon, read_avm(bare.lexicon->lattice(), "[semantics]")).empty());
}

TEST_CASE("inputs that are not case frames are rejected") {
  CHECK_THROWS_AS(resolve(ref(), text("[noun-phrase]")), std::invalid_argument);
  CHECK_THROWS_AS(explain(ref(), text("[noun-phrase]"), "SENSE-EAT1"), std::invalid_argument);
}
