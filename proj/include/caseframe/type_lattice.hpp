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

#ifndef CASEFRAME_TYPE_LATTICE_HPP_
#define CASEFRAME_TYPE_LATTICE_HPP_

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "caseframe/feature_structure.hpp"

namespace caseframe {

class LookupError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised by glb() on a pair with several maximal common subtypes. Never
// raised by a lattice whose validate() is empty.
class AmbiguousGlb : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct FeatureDecl {
  std::string feature;
  TypeId value_type;
  bool operator==(const FeatureDecl &) const = default;
};

struct LatticeViolation {
  enum class Kind {
    cycle,
    unreachable,
    glb_ambiguity,
    feature_redeclaration,
    feature_conflict,
    constraint_conflict,
    constraint_recursion,
  };
  Kind kind;
  std::vector<std::string> types;
  std::string message;
};

std::string_view to_string(LatticeViolation::Kind kind);

// Partial order of types with multiple inheritance. `top` (id 0) and
// `string` (id 1) always exist; `bottom` is reserved and represented by a
// failed glb().
class TypeLattice {
 public:
  class Builder;

  std::size_t size() const { return names_.size(); }
  const std::string &name(TypeId t) const { return names_.at(t.value); }
  std::optional<TypeId> find(std::string_view name) const;
  // Throws LookupError naming the symbol.
  TypeId id(std::string_view name) const;

  const std::vector<TypeId> &parents(TypeId t) const {
    return parents_.at(t.value);
  }
  const std::vector<TypeId> &children(TypeId t) const {
    return children_.at(t.value);
  }

  bool is_subtype(TypeId a, TypeId b) const;
  bool is_subtype(std::string_view a, std::string_view b) const {
    return is_subtype(id(a), id(b));
  }

  std::optional<TypeId> glb(TypeId a, TypeId b) const;
  std::optional<TypeId> glb(std::string_view a, std::string_view b) const {
    return glb(id(a), id(b));
  }

  std::vector<LatticeViolation> validate() const;

  // Own and inherited declarations, sorted by feature name.
  const std::vector<FeatureDecl> &appropriate_features(TypeId t) const {
    return approp_.at(t.value);
  }
  // Declarations made on t itself.
  const std::vector<FeatureDecl> &own_features(TypeId t) const {
    return own_features_.at(t.value);
  }
  std::optional<TypeId> value_type(TypeId t, std::string_view feature) const;
  // Most general types declaring `feature`.
  const std::vector<TypeId> &introducers(std::string_view feature) const;

  // Constraint attached to exactly this type, if any.
  const FeatureStructure *constraint(TypeId t) const;
  // Ancestors-or-self of t that carry a constraint, most general first.
  const std::vector<TypeId> &constrained_ancestors(TypeId t) const {
    return constrained_ancestors_.at(t.value);
  }
  bool has_constraints() const { return !constraints_.empty(); }

  // Copy of this lattice with type constraints attached. Bodies must be
  // built against this lattice's type ids.
  TypeLattice with_constraints(
      std::vector<std::pair<TypeId, FeatureStructure>> constraints) const;

  // All types below or equal to t, ascending by id.
  std::vector<TypeId> descendants(TypeId t) const;
  std::vector<TypeId> ancestors(TypeId t) const;

 private:
  TypeLattice() = default;
  void compute_closure();
  void compute_glb_table();
  void compute_appropriateness();
  void compute_constraint_index();

  std::vector<std::string> names_;
  std::unordered_map<std::string, TypeId> by_name_;
  std::vector<std::vector<TypeId>> parents_;
  std::vector<std::vector<TypeId>> children_;
  std::vector<std::vector<FeatureDecl>> own_features_;

  // Reflexive-transitive closures as bit rows.
  std::vector<std::vector<std::uint64_t>> up_;
  std::vector<std::vector<std::uint64_t>> down_;
  // glb_[a * n + b]: type id, or kNoGlb / kAmbiguousGlb.
  std::vector<std::int32_t> glb_;

  std::vector<std::vector<FeatureDecl>> approp_;
  std::vector<LatticeViolation> feature_violations_;
  std::map<std::string, std::vector<TypeId>, std::less<>> introducers_;

  std::map<std::uint32_t, FeatureStructure> constraints_;
  std::vector<std::vector<TypeId>> constrained_ancestors_;
};

class TypeLattice::Builder {
 public:
  Builder();

  // Adds a type (or returns the existing one). Parentless types end up
  // directly below top when the lattice is built.
  TypeId add_type(std::string_view name);
  // Declares child < parent, creating either type if needed.
  void add_subtype(std::string_view child, std::string_view parent);
  // Declares FEATURE: value_type on type. Both types must already exist.
  void declare_feature(std::string_view type, std::string_view feature,
                       std::string_view value_type);

  bool contains(std::string_view name) const;
  std::optional<TypeId> find(std::string_view name) const;

  TypeLattice build() const;

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, TypeId> by_name_;
  std::vector<std::vector<TypeId>> parents_;
  std::vector<std::vector<FeatureDecl>> features_;
};

}  // namespace caseframe

#endif  // CASEFRAME_TYPE_LATTICE_HPP_
