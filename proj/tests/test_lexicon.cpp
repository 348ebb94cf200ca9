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

#include "caseframe/lexicon.hpp"
#include "doctest.h"
#include "support/testkit.hpp"

using namespace caseframe;

namespace {

const Lexicon &ref() { return testkit::reference(); }

// Loads the reference lexicon plus `extra` through a scratch file.
LoadOutput with_reference(const std::string &extra) {
  auto path = std::filesystem::temp_directory_path() / "caseframe-test-extra.cfl";
  {
    std::ofstream out(path);
    out << "include \"" << testkit::reference_lexicon_path().string() << "\".\n" << extra << "\n";
  }
  LoadOutput result = load_files({path.string()});
  std::filesystem::remove(path);
  return result;
}

bool mentions(const std::vector<Diagnostic> &ds, std::string_view text) {
  for (const auto &d : ds) {
    if (d.message.find(text) != std::string::npos) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("parse: declarations and a union") {
  ParseOutput p = parse("type optional = nil | optional-np.\nsense S := A & B & SEM-S priority 2.\n", "x.cfl");
  REQUIRE(p.ok());
  REQUIRE(p.declarations.size() == 2);
  const auto &t = std::get<dsl::TypeStmt>(p.declarations[0]);
  CHECK(t.name.text == "optional");
  CHECK(t.subtypes.size() == 2);
  CHECK_FALSE(t.defines());
  const auto &s = std::get<dsl::SenseStmt>(p.declarations[1]);
  CHECK(s.refs.size() == 3);
  CHECK(s.priority == 2);
  CHECK(s.pos.line == 2);
}

TEST_CASE("parse: the EAT1 sense has five references") {
  ParseOutput p = parse_files({(testkit::source_dir() / "lexicons" / "ye.cfl").string()});
  REQUIRE(p.ok());
  bool seen = false;
  for (const auto &d : p.declarations) {
    if (const auto *s = std::get_if<dsl::SenseStmt>(&d); s && s->name.text == "SENSE-EAT1") {
      seen = true;
      CHECK(s->refs.size() == 6);
      CHECK(s->refs[2].str() == "DIR-OBJ-IS(optional-edible)");
    }
  }
  CHECK(seen);
  CHECK(ref().sense("SENSE-EAT1")->constraints.size() == 5);
}

TEST_CASE("parse: an unterminated matrix is reported once, at its bracket") {
  ParseOutput p = parse("constraint C lexical := [VERB: [STEM: \"ye\"].\n", "u.cfl");
  REQUIRE(p.diagnostics.size() == 1);
  CHECK(p.diagnostics[0].pos.file == "u.cfl");
  CHECK(p.diagnostics[0].pos.line == 1);
  CHECK(p.diagnostics[0].pos.col == 25);
}

TEST_CASE("the reference lexicon") {
  LoadOutput out = load_files({testkit::reference_lexicon_path().string()});
  REQUIRE(out.diagnostics.empty());
  CHECK(out.lexicon->senses().size() == 17);
  CHECK(out.lexicon->ontology().check().empty());
  CHECK(out.lexicon->lattice().validate().empty());
  const SenseDef *eat1 = out.lexicon->sense("SENSE-EAT1");
  REQUIRE(eat1);
  CHECK(eat1->specificity == 5);
  const SenseDef *out_of = out.lexicon->sense("SENSE-EAT-OUT-OF");
  CHECK(out_of->priority == 1);
  CHECK(out.lexicon->sense("SENSE-NONE") == nullptr);
}

TEST_CASE("constraint definitions are shared between senses") {
  auto yes = ref().constraint("VERB-IS-YE");
  int users = 0;
  for (const auto &s : ref().senses()) {
    for (const auto &c : s.constraints) {
      if (c->name == "VERB-IS-YE") {
        CHECK(c.get() == yes.get());
        ++users;
      }
    }
  }
  CHECK(users >= 8);
  auto a = ref().parameterized_constraint("DIR-OBJ-IS", "optional-edible");
  auto b = ref().parameterized_constraint("DIR-OBJ-IS", "optional-edible");
  CHECK(a.get() == b.get());
  CHECK(a->name == "DIR-OBJ-IS(optional-edible)");
}

TEST_CASE("template instances") {
  auto acc = ref().parameterized_constraint("DIR-OBJ-IS", "optional-money");
  const auto &lat = ref().lattice();
  auto slot = acc->body.get({"ARGUMENTS", "DIR-OBJ"});
  REQUIRE(slot);
  CHECK(lat.name(acc->body.node(*slot).type) == "optional-money");
  CHECK(acc->informative);
  // A slot constrained to top says nothing beyond appropriateness.
  auto any = ref().parameterized_constraint("DIR-OBJ-IS", "top");
  CHECK_FALSE(any->informative);
  CHECK_THROWS_AS(ref().parameterized_constraint("NO-SUCH-IS", "top"), LookupError);
  CHECK_THROWS_AS(ref().parameterized_constraint("DIR-OBJ-IS", "unicorn"), LookupError);
}

TEST_CASE("tiers restrict the paths a body may mention") {
  auto term = parse_avm_term("[ARGUMENTS: [DIR-OBJ: [HEAD: [SEM: money]]]]");
  CHECK(tier_violations(Tier::semantic, term).empty());
  CHECK(tier_violations(Tier::verb_feature, term).size() == 1);
  CHECK(tier_violations(Tier::morphological, parse_avm_term("[VERB: [STEM: \"ye\"]]")).size() == 1);
  CHECK(tier_violations(Tier::morphological, parse_avm_term("[VERB: [VOICE: passive]]")).empty());
  CHECK(tier_violations(Tier::verb_feature, parse_avm_term("[VERB: [VOICE: passive]]")).empty());
  for (Tier t : {Tier::verb_feature, Tier::morphological, Tier::co_occurrence, Tier::lexical,
                 Tier::semantic}) {
    CHECK(parse_tier(to_string(t)) == t);
  }
  CHECK_FALSE(parse_tier("pragmatic"));
}

TEST_CASE("corrupt lexicons fail with positioned diagnostics") {
  auto dir = testkit::source_dir() / "tests" / "data" / "corrupt";
  int seen = 0;
  for (const auto &entry : std::filesystem::directory_iterator(dir)) {
    CAPTURE(entry.path().filename().string());
    LoadOutput out = load_files({entry.path().string()});
    CHECK(out.lexicon == nullptr);
    REQUIRE_FALSE(out.diagnostics.empty());
    CHECK(out.diagnostics[0].pos.line > 0);
    CHECK(out.diagnostics[0].str().find(":" + std::to_string(out.diagnostics[0].pos.line) + ":") !=
          std::string::npos);
    ++seen;
  }
  CHECK(seen == 10);
}

TEST_CASE("load errors name what is wrong") {
  CHECK(mentions(with_reference("sense S := NO-SUCH & SEM-EAT1.").diagnostics, "NO-SUCH"));
  CHECK(mentions(with_reference("constraint VERB-IS-YE verb-feature := [VERB: [STEM: \"x\"]].").diagnostics,
                 "VERB-IS-YE"));
  CHECK(mentions(with_reference("marker \"x\" unicorn.").diagnostics, "unicorn"));
  CHECK_FALSE(with_reference("sense S := VERB-IS-YE & VERB-IS-SAS & SEM-EAT1.").diagnostics.empty());
  CHECK_FALSE(with_reference("include \"no/such/file.cfl\".").diagnostics.empty());
  CHECK(mentions(load_source("include \"a.cfl\".").diagnostics, "include"));
}

TEST_CASE("a failed load leaves nothing behind") {
  LoadOutput bad = with_reference("sense S := NO-SUCH & SEM-EAT1.");
  CHECK(bad.lexicon == nullptr);
  LoadOutput good = with_reference("sense S := VERB-IS-YE & SEM-EAT1.");
  REQUIRE(good.diagnostics.empty());
  CHECK(good.lexicon->senses().size() == 18);
  CHECK(ref().senses().size() == 17);
}

TEST_CASE("printed lexicons reload to the same text") {
  std::string once = ref().print();
  LoadOutput again = load_source(once, "printed.cfl");
  REQUIRE(again.diagnostics.empty());
  CHECK(again.lexicon->print() == once);
  REQUIRE(again.lexicon->senses().size() == ref().senses().size());
  for (std::size_t i = 0; i < ref().senses().size(); ++i) {
    const auto &a = ref().senses()[i];
    const SenseDef *b = again.lexicon->sense(a.name);
    REQUIRE(b);
    CHECK(b->priority == a.priority);
    CHECK(b->specificity == a.specificity);
  }
}
