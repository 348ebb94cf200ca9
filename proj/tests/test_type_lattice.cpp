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


#include <random>

#include "caseframe/type_lattice.hpp"
#include "doctest.h"
#include "support/testkit.hpp"

using namespace caseframe;

namespace {

bool has_kind(const std::vector<LatticeViolation> &vs, LatticeViolation::Kind k) {
  return std::any_of(vs.begin(), vs.end(), [&](const auto &v) { return v.kind == k; });
}

}  // namespace

TEST_CASE("is_subtype on the reference schema") {
  const TypeLattice &lat = testkit::reference().lattice();
  CHECK(lat.is_subtype("edible-obj", "optional-edible"));
  CHECK_FALSE(lat.is_subtype("nil", "edible-obj"));
  CHECK(lat.is_subtype("female", "human"));
  for (std::uint32_t t = 0; t < lat.size(); ++t) {
    CHECK(lat.is_subtype(TypeId{t}, TypeId{t}));
    CHECK(lat.is_subtype(TypeId{t}, kTopType));
  }
}

TEST_CASE("glb on the reference schema") {
  const TypeLattice &lat = testkit::reference().lattice();
  CHECK(lat.name(*lat.glb("argument", "noun-phrase")) == "noun-phrase");
  CHECK(lat.name(*lat.glb("optional-edible", "noun-phrase")) == "edible-obj");
  CHECK_FALSE(lat.glb("nil", "noun-phrase").has_value());
  CHECK_FALSE(lat.glb("acc", "nom").has_value());
  CHECK(lat.name(*lat.glb("nom-or-acc", "case")) == "nom-or-acc");
}

TEST_CASE("glb laws hold on every pair of the reference lattice") {
  const TypeLattice &lat = testkit::reference().lattice();
  REQUIRE(lat.validate().empty());
  for (std::uint32_t a = 0; a < lat.size(); ++a) {
    TypeId ta{a};
    CHECK(lat.glb(ta, kTopType) == ta);
    CHECK(lat.glb(ta, ta) == ta);
    for (std::uint32_t b = 0; b < lat.size(); ++b) {
      TypeId tb{b};
      auto c = lat.glb(ta, tb);
      CHECK(c == lat.glb(tb, ta));
      if (c) {
        CHECK(lat.is_subtype(*c, ta));
        CHECK(lat.is_subtype(*c, tb));
      }
    }
  }
}

TEST_CASE("appropriate features") {
  const TypeLattice &lat = testkit::reference().lattice();
  auto names = [&](std::string_view t) {
    std::vector<std::string> out;
    for (const auto &d : lat.appropriate_features(lat.id(t))) out.push_back(d.feature);
    return out;
  };
  CHECK(names("noun-phrase") == std::vector<std::string>{"CAT", "HEAD", "MOD"});
  CHECK(names("top").empty());
  CHECK(lat.appropriate_features(lat.id("edible-obj")) ==
        lat.appropriate_features(lat.id("noun-phrase")));
  CHECK(lat.name(*lat.value_type(lat.id("noun-phrase"), "HEAD")) == "head");
  CHECK_FALSE(lat.value_type(lat.id("noun-phrase"), "STEM").has_value());
  CHECK(lat.introducers("HEAD").size() == 1);
}

TEST_CASE("validate flags a glb ambiguity naming the pair") {
  TypeLattice::Builder b;
  b.add_type("x");
  b.add_type("y");
  for (const char *t : {"p", "q"}) {
    b.add_subtype(t, "x");
    b.add_subtype(t, "y");
  }
  TypeLattice lat = b.build();
  auto vs = lat.validate();
  REQUIRE(vs.size() == 1);
  CHECK(vs[0].kind == LatticeViolation::Kind::glb_ambiguity);
  CHECK(vs[0].types == std::vector<std::string>{"x", "y"});
  CHECK_THROWS_AS(lat.glb("x", "y"), AmbiguousGlb);
}

TEST_CASE("validate flags a cycle through top") {
  TypeLattice::Builder b;
  b.add_type("a");
  b.add_subtype("top", "a");
  auto vs = b.build().validate();
  CHECK(has_kind(vs, LatticeViolation::Kind::cycle));
}

TEST_CASE("feature redeclaration may only narrow") {
  TypeLattice::Builder b;
  b.add_type("v");
  b.add_subtype("w", "v");
  b.add_type("u");
  b.add_type("s");
  b.add_subtype("t", "s");
  b.declare_feature("s", "F", "v");
  b.declare_feature("t", "F", "w");
  CHECK(b.build().validate().empty());
  b.declare_feature("t", "F", "u");
  CHECK_FALSE(b.build().validate().empty());
}

TEST_CASE("reserved names") {
  TypeLattice::Builder b;
  CHECK_THROWS(b.add_type("bottom"));
  CHECK(b.contains("top"));
  CHECK(b.contains("string"));
}

TEST_CASE("glb agrees with a brute-force scan on random lattices") {
  std::mt19937 rng(7);
  for (int i = 0; i < 40; ++i) {
    testkit::Poset p = testkit::random_valid_poset(rng, 30);
    TypeLattice lat = p.build();
    REQUIRE(lat.validate().empty());
    auto down = p.down_sets();
    for (std::size_t a = 0; a < p.names.size(); ++a) {
      for (std::size_t b = 0; b < p.names.size(); ++b) {
        auto want = testkit::brute_glb(down, static_cast<int>(a), static_cast<int>(b));
        REQUIRE(want.answer != testkit::GlbAnswer::ambiguous);
        auto got = lat.glb(lat.id(p.names[a]), lat.id(p.names[b]));
        if (want.answer == testkit::GlbAnswer::none) {
          CHECK_FALSE(got.has_value());
        } else {
          REQUIRE(got.has_value());
          CHECK(lat.name(*got) == p.names[static_cast<std::size_t>(want.type)]);
        }
      }
    }
  }
}

TEST_CASE("invalid random lattices are flagged") {
  std::mt19937 rng(11);
  for (int i = 0; i < 20; ++i) {
    testkit::Poset p = testkit::invalid_poset(rng, i);
    auto vs = p.build().validate();
    CHECK(has_kind(vs, i % 2 == 0 ? LatticeViolation::Kind::cycle
                                  : LatticeViolation::Kind::glb_ambiguity));
  }
}
