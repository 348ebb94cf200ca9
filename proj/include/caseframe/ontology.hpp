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

#ifndef CASEFRAME_ONTOLOGY_HPP_
#define CASEFRAME_ONTOLOGY_HPP_

#include <array>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "caseframe/type_lattice.hpp"

namespace caseframe {

// Semantic-marker network: the region of the lattice below `sem`, and a
// marker lexicon from word stems to concepts in that region.
class Ontology {
 public:
  static constexpr std::array<std::string_view, 10> kMajorConcepts = {
      "Thing-Object", "Commodity-Ware", "Idea-Abstraction", "Part",
      "Attribute",    "Phenomenon",     "Doing-Action",     "Sentiment-MentalActivity",
      "Measure",      "Time-Space"};

  using MarkerMap = std::map<std::string, std::vector<TypeId>, std::less<>>;

  Ontology() = default;
  Ontology(std::shared_ptr<const TypeLattice> lattice, TypeId root, std::vector<TypeId> majors,
           MarkerMap markers);

  bool empty() const { return lattice_ == nullptr; }
  TypeId root() const { return root_; }
  const std::vector<TypeId> &majors() const { return majors_; }
  const MarkerMap &markers() const { return markers_; }

  bool in_region(TypeId t) const;

  // Declared concepts for a stem; empty for unknown stems.
  std::vector<TypeId> sem_of(std::string_view stem) const;

  // is_subtype(marker, required) over the concept region. Throws
  // LookupError when either type is not a concept.
  bool satisfies(TypeId marker, TypeId required) const;
  bool satisfies(std::string_view marker, std::string_view required) const;

  // Invariant violations: majors not exactly the ten, marker targets
  // outside the region.
  std::vector<std::string> check() const;

 private:
  std::shared_ptr<const TypeLattice> lattice_;
  TypeId root_;
  std::vector<TypeId> majors_;
  MarkerMap markers_;
};

}  // namespace caseframe

#endif  // CASEFRAME_ONTOLOGY_HPP_
