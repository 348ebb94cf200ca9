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

#include <algorithm>
#include <set>

namespace caseframe {

Ontology::Ontology(std::shared_ptr<const TypeLattice> lattice, TypeId root,
                   std::vector<TypeId> majors, MarkerMap markers)
    : lattice_(std::move(lattice)), root_(root), majors_(std::move(majors)),
      markers_(std::move(markers)) {}

bool Ontology::in_region(TypeId t) const {
  return lattice_ && lattice_->is_subtype(t, root_);
}

std::vector<TypeId> Ontology::sem_of(std::string_view stem) const {
  auto it = markers_.find(stem);
  if (it == markers_.end()) return {};
  return it->second;
}

bool Ontology::satisfies(TypeId marker, TypeId required) const {
  if (!in_region(marker) || !in_region(required)) {
    throw LookupError("not a concept: `" +
                      (lattice_ ? lattice_->name(in_region(marker) ? required : marker)
                                : std::string("?")) +
                      "`");
  }
  return lattice_->is_subtype(marker, required);
}

bool Ontology::satisfies(std::string_view marker, std::string_view required) const {
  if (!lattice_) throw LookupError("empty ontology");
  return satisfies(lattice_->id(marker), lattice_->id(required));
}

std::vector<std::string> Ontology::check() const {
  std::vector<std::string> out;
  if (!lattice_) return out;
  std::set<std::string> declared;
  for (TypeId m : majors_) {
    declared.insert(lattice_->name(m));
    const auto &ps = lattice_->parents(m);
    if (std::find(ps.begin(), ps.end(), root_) == ps.end()) {
      out.push_back("major concept `" + lattice_->name(m) + "` is not directly below `" +
                    lattice_->name(root_) + "`");
    }
  }
  if (!majors_.empty()) {
    for (auto name : kMajorConcepts) {
      if (!declared.count(std::string(name))) {
        out.push_back("major concept `" + std::string(name) + "` is missing");
      }
    }
    for (const auto &name : declared) {
      if (std::find(kMajorConcepts.begin(), kMajorConcepts.end(), name) == kMajorConcepts.end()) {
        out.push_back("`" + name + "` is not one of the ten major concepts");
      }
    }
  }
  for (const auto &[stem, concepts] : markers_) {
    for (TypeId c : concepts) {
      if (!in_region(c)) {
        out.push_back("marker \"" + stem + "\" names `" + lattice_->name(c) +
                      "`, which is not a concept");
      }
    }
  }
  return out;
}

}  // namespace caseframe
