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

#ifndef CASEFRAME_LEXICON_HPP_
#define CASEFRAME_LEXICON_HPP_

// Lexicon definition language (.cfl). Statements end with a period:
//
//   include "schema.cfl".
//   type wf-case-frame < case-frame.
//   type argument = noun-phrase | case-frame | optional.
//   type edible-obj & noun-phrase & optional-np & IS-A-EDIBLE.
//   type noun-phrase < argument [CAT: cat HEAD: head MOD: top].
//   concept major Thing-Object.
//   concept female < human.
//   marker "baş" body-part, human.
//   constraint DIR-OBJ-IS-ACC morphological := [ARGUMENTS: [DIR-OBJ: [HEAD: [CASE: acc]]]].
//   constraint DIR-OBJ-IS(T) co-occurrence := [ARGUMENTS: [DIR-OBJ: T]].
//   semantics SEM-EAT1 := [ARGUMENTS: [SUBJ: #1] SEMANTICS: [PRED: "to eat" ROLES: [AGENT: #1]]].
//   sense SENSE-EAT1 := VERB-IS-YE & DIR-OBJ-IS(optional-edible) & SEM-EAT1 priority 0.

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "caseframe/avm.hpp"
#include "caseframe/diagnostics.hpp"
#include "caseframe/feature_structure.hpp"
#include "caseframe/ontology.hpp"
#include "caseframe/type_lattice.hpp"

namespace caseframe {

enum class Tier { verb_feature, morphological, co_occurrence, lexical, semantic };

std::string_view to_string(Tier tier);
std::optional<Tier> parse_tier(std::string_view text);

struct ConstraintDef {
  std::string name;  // instances of templates are named `DIR-OBJ-IS(optional-edible)`
  Tier tier = Tier::co_occurrence;
  FeatureStructure body;
  // The body as written, which is what print() emits.
  AvmTerm source;
  SourcePos pos;
  // False when the body adds nothing beyond appropriateness.
  bool informative = true;
};

struct SemanticsDef {
  std::string name;
  FeatureStructure body;
  AvmTerm source;
  SourcePos pos;
};

struct SenseDef {
  std::string name;
  std::vector<std::shared_ptr<const ConstraintDef>> constraints;
  std::shared_ptr<const SemanticsDef> semantics;
  int priority = 0;
  // Number of informative constraints.
  int specificity = 0;
  // wf-case-frame & constraints & semantics, computed at load.
  FeatureStructure conjunction;
  SourcePos pos;
};

namespace dsl {

struct Name {
  std::string text;
  SourcePos pos;
};

// `NAME` or `NAME(type)`.
struct Ref {
  std::string name;
  std::optional<std::string> argument;
  SourcePos pos;
  std::string str() const;
};

struct TypeStmt {
  SourcePos pos;
  bool is_concept = false;
  bool major = false;
  Name name;
  // `<` parents or `&` conjuncts: types or constraint refs.
  std::vector<Ref> parents;
  // `= a | b` form.
  std::vector<Name> subtypes;
  // Appropriateness block; feature values are type names.
  std::vector<std::pair<Name, Name>> features;
  bool defines() const { return subtypes.empty(); }
};

struct MarkerStmt {
  SourcePos pos;
  std::string stem;
  std::vector<Name> concepts;
};

struct ConstraintStmt {
  SourcePos pos;
  Name name;
  std::optional<std::string> parameter;
  Tier tier = Tier::co_occurrence;
  AvmTerm body;
};

struct SemanticsStmt {
  SourcePos pos;
  Name name;
  AvmTerm body;
};

struct SenseStmt {
  SourcePos pos;
  Name name;
  std::vector<Ref> refs;
  int priority = 0;
};

struct IncludeStmt {
  SourcePos pos;
  std::string path;
};

using Declaration =
    std::variant<TypeStmt, MarkerStmt, ConstraintStmt, SemanticsStmt, SenseStmt, IncludeStmt>;

}  // namespace dsl

struct ParseOutput {
  std::vector<dsl::Declaration> declarations;
  std::vector<Diagnostic> diagnostics;
  bool ok() const { return diagnostics.empty(); }
};

// Parses one source text. Include statements are kept, not followed.
ParseOutput parse(std::string_view source, const std::string &file = "<input>");

// Parses files, splicing in included files (paths relative to the includer).
ParseOutput parse_files(const std::vector<std::string> &paths);

class Lexicon;

struct LoadOutput {
  std::shared_ptr<const Lexicon> lexicon;  // null whenever diagnostics is non-empty
  std::vector<Diagnostic> diagnostics;
};

// Links and validates a declaration list. Either everything loads or
// nothing does. Include statements must already be spliced.
LoadOutput load(const std::vector<dsl::Declaration> &declarations);
LoadOutput load_files(const std::vector<std::string> &paths);
LoadOutput load_source(std::string_view source, const std::string &file = "<input>");

class Lexicon {
 public:
  const TypeLattice &lattice() const { return *lattice_; }
  std::shared_ptr<const TypeLattice> lattice_ptr() const { return lattice_; }
  const Ontology &ontology() const { return ontology_; }

  const std::vector<SenseDef> &senses() const { return senses_; }
  const SenseDef *sense(std::string_view name) const;

  // Named (non-template) constraints.
  const std::map<std::string, std::shared_ptr<const ConstraintDef>, std::less<>> &constraints()
      const {
    return constraints_;
  }
  std::shared_ptr<const ConstraintDef> constraint(std::string_view name) const;
  const std::map<std::string, std::shared_ptr<const SemanticsDef>, std::less<>> &semantics() const {
    return semantics_;
  }

  // Instantiates a template such as DIR-OBJ-IS with a type argument. Returns
  // the shared instance when a loaded sense already uses it. Throws
  // LookupError on an unknown template or type.
  std::shared_ptr<const ConstraintDef> parameterized_constraint(std::string_view name,
                                                                std::string_view type) const;

  // Root type of input frames (`case-frame`) and of sense conjunctions.
  TypeId frame_type() const { return frame_type_; }
  TypeId wf_frame_type() const { return wf_frame_type_; }

  // DSL text that reloads to an isomorphic lexicon.
  std::string print() const;

 private:
  friend class LexiconLoader;
  Lexicon() = default;

  std::shared_ptr<const TypeLattice> lattice_;
  Ontology ontology_;
  std::map<std::string, std::shared_ptr<const ConstraintDef>, std::less<>> constraints_;
  std::map<std::string, std::shared_ptr<const ConstraintDef>, std::less<>> instances_;
  std::map<std::string, dsl::ConstraintStmt, std::less<>> templates_;
  std::map<std::string, std::shared_ptr<const SemanticsDef>, std::less<>> semantics_;
  std::vector<SenseDef> senses_;
  std::map<TypeId, std::vector<std::string>> type_constraint_refs_;
  std::vector<TypeId> concept_types_;
  TypeId frame_type_ = kTopType;
  TypeId wf_frame_type_ = kTopType;
};

// Leaf paths of a constraint body violating its tier's whitelist.
std::vector<FeaturePath> tier_violations(Tier tier, const AvmTerm &body);

}  // namespace caseframe

#endif  // CASEFRAME_LEXICON_HPP_
