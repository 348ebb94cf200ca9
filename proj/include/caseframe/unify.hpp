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

#ifndef CASEFRAME_UNIFY_HPP_
#define CASEFRAME_UNIFY_HPP_

#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "caseframe/feature_structure.hpp"
#include "caseframe/type_lattice.hpp"

namespace caseframe {

enum class FailureReason {
  clash,
  cycle,
  // A feature not appropriate for any type compatible with its node. Only
  // arises while building a structure, never when unifying well-formed ones.
  inappropriate,
};

std::string_view to_string(FailureReason reason);

struct UnifyFailure {
  FeaturePath path;
  std::string left;
  std::string right;
  FailureReason reason = FailureReason::clash;

  // "clash at ARGUMENTS.DIR-OBJ.HEAD.LEX: \"pasta\" vs \"kafa\""
  std::string describe() const;
};

class UnifyResult {
 public:
  UnifyResult(FeatureStructure fs) : value_(std::move(fs)) {}  // NOLINT
  UnifyResult(UnifyFailure failure) : value_(std::move(failure)) {}  // NOLINT

  bool ok() const { return std::holds_alternative<FeatureStructure>(value_); }
  explicit operator bool() const { return ok(); }

  const FeatureStructure &value() const;
  FeatureStructure &value();
  const UnifyFailure &failure() const;

 private:
  std::variant<FeatureStructure, UnifyFailure> value_;
};

class ConstructionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Most general structure subsumed by both inputs, or the first clash found.
// Inputs are never modified.
UnifyResult unify(const TypeLattice &lattice, const FeatureStructure &a,
                  const FeatureStructure &b);

// True iff b carries all of a's information.
bool subsumes(const TypeLattice &lattice, const FeatureStructure &a,
              const FeatureStructure &b);

// Closes a raw structure under appropriateness (type inference and value
// types) and the lattice's type constraints.
UnifyResult normalize(const TypeLattice &lattice, const FeatureStructure &raw);

struct Value {
  enum class Kind { type, string, tag };
  Kind kind = Kind::type;
  std::string text;
  int tag = 0;

  static Value of_type(std::string name) { return {Kind::type, std::move(name), 0}; }
  static Value of_string(std::string text) { return {Kind::string, std::move(text), 0}; }
  static Value of_tag(int tag) { return {Kind::tag, {}, tag}; }
};

struct Assignment {
  FeaturePath path;
  Value value;
};

// Minimal structure of type `root_type` with the given path values. Every
// mention of the same tag denotes the same node. Throws ConstructionError on
// appropriateness violations or conflicting assignments.
FeatureStructure make(const TypeLattice &lattice, TypeId root_type,
                      const std::vector<Assignment> &assignments);

// `value` placed at `path` below a fresh root.
UnifyResult embed(const TypeLattice &lattice, const FeaturePath &path,
                  const FeatureStructure &value);

// Copy of `fs` whose arc at `path` points to `value` instead (the old value is
// discarded, not unified). Missing intermediate nodes are created.
UnifyResult with_value(const TypeLattice &lattice, const FeatureStructure &fs,
                       const FeaturePath &path, const FeatureStructure &value);

}  // namespace caseframe

#endif  // CASEFRAME_UNIFY_HPP_
