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


#include "caseframe/ontology.hpp"
#include "doctest.h"
#include "support/testkit.hpp"

using namespace caseframe;

namespace {

const Ontology &ont() { return testkit::reference().ontology(); }
const TypeLattice &ref() { return testkit::reference().lattice(); }

std::vector<std::string> names(const std::vector<TypeId> &ts) {
  std::vector<std::string> out;
  for (TypeId t : ts) out.push_back(ref().name(t));
  return out;
}

}  // namespace

TEST_CASE("markers") {
  CHECK(names(ont().sem_of("demet")) == std::vector<std::string>{"female"});
  CHECK(names(ont().sem_of("pasta")) == std::vector<std::string>{"edible"});
  CHECK(ont().sem_of("zzz-unknown").empty());
  CHECK(names(ont().sem_of("baş")) == std::vector<std::string>{"body-part", "human"});
}

TEST_CASE("satisfies is subtyping inside the concept region") {
  CHECK(ont().satisfies("female", "human"));
  CHECK_FALSE(ont().satisfies("edible", "container"));
  CHECK(ont().satisfies("vehicle", "instrument"));
  for (std::uint32_t t = 0; t < ref().size(); ++t) {
    TypeId id{t};
    if (!ont().in_region(id)) continue;
    CHECK(ont().satisfies(id, ont().root()));
    for (std::uint32_t u = 0; u < ref().size(); ++u) {
      if (ont().in_region(TypeId{u})) CHECK(ont().satisfies(id, TypeId{u}) == ref().is_subtype(id, TypeId{u}));
    }
  }
  CHECK_THROWS_AS(ont().satisfies("nil", "human"), LookupError);
}

TEST_CASE("the ten majors") {
  std::vector<std::string> want(Ontology::kMajorConcepts.begin(), Ontology::kMajorConcepts.end());
  auto got = names(ont().majors());
  std::sort(want.begin(), want.end());
  std::sort(got.begin(), got.end());
  CHECK(got == want);
  CHECK(ont().check().empty());
  CHECK(ref().name(ont().root()) == "sem");
}

TEST_CASE("check reports a major set that is not the ten") {
  auto lat = testkit::reference().lattice_ptr();
  std::vector<TypeId> majors = ont().majors();
  majors.pop_back();
  Ontology partial(lat, ont().root(), majors, ont().markers());
  CHECK_FALSE(partial.check().empty());
  Ontology::MarkerMap bad = ont().markers();
  bad["uçak"] = {lat->id("nil")};
  Ontology outside(lat, ont().root(), ont().majors(), bad);
  CHECK_FALSE(outside.check().empty());
}
