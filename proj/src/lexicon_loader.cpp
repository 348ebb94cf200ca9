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
#include <deque>
#include <functional>
#include <set>

#include "caseframe/lexicon.hpp"
#include "caseframe/unify.hpp"

namespace caseframe {

namespace {

const std::set<std::string, std::less<>> kMorphFeatures = {"CASE", "POSS",  "AGR",
                                                            "VOICE", "VFORM", "PFORM"};

void leaf_paths(const AvmTerm &term, FeaturePath &path, std::vector<FeaturePath> &out) {
  if (term.kind != AvmTerm::Kind::bracket || term.features.empty()) {
    out.push_back(path);
    return;
  }
  for (const auto &f : term.features) {
    path.push_back(f.name);
    leaf_paths(f.value.front(), path, out);
    path.pop_back();
  }
}

bool tier_allows(Tier tier, const FeaturePath &path) {
  if (path.empty()) return false;
  switch (tier) {
    case Tier::verb_feature:
      return path.front() == "VERB";
    case Tier::morphological:
      return kMorphFeatures.count(path.back()) > 0;
    case Tier::co_occurrence:
      return path.size() == 2 && path.front() == "ARGUMENTS";
    case Tier::lexical:
      return path.back() == "LEX" || path.back() == "STEM";
    case Tier::semantic:
      return path.back() == "SEM";
  }
  return false;
}

void count_tags(const AvmTerm &term, std::map<std::string, int> &counts) {
  if (term.tag) ++counts[*term.tag];
  if (term.kind == AvmTerm::Kind::tag_ref) ++counts[term.text];
  for (const auto &f : term.features) count_tags(f.value.front(), counts);
}

// A body is informative when it states something appropriateness alone
// would not: a literal, a reentrancy, or a leaf narrower than its slot.
bool informative(const TypeLattice &lattice, const AvmTerm &ast, const FeatureStructure &body) {
  std::map<std::string, int> tags;
  count_tags(ast, tags);
  for (const auto &[tag, n] : tags) {
    if (n > 1) return true;
  }
  std::vector<FeaturePath> leaves;
  FeaturePath path;
  leaf_paths(ast, path, leaves);
  for (const auto &leaf : leaves) {
    auto node = body.get(leaf);
    if (!node) continue;
    const Node &n = body.node(*node);
    if (n.literal) return true;
    if (leaf.empty()) {
      if (n.type != kTopType) return true;
      continue;
    }
    FeaturePath parent_path(leaf.begin(), leaf.end() - 1);
    auto parent = body.get(parent_path);
    auto declared = lattice.value_type(body.node(*parent).type, leaf.back());
    if (!declared || n.type != *declared) return true;
  }
  return false;
}

std::string describe_pos(const SourcePos &pos) {
  return pos.file + ":" + std::to_string(pos.line) + ":" + std::to_string(pos.col);
}

}  // namespace

std::vector<FeaturePath> tier_violations(Tier tier, const AvmTerm &body) {
  std::vector<FeaturePath> leaves, out;
  FeaturePath path;
  leaf_paths(body, path, leaves);
  for (auto &leaf : leaves) {
    if (!tier_allows(tier, leaf)) out.push_back(std::move(leaf));
  }
  return out;
}

class LexiconLoader {
 public:
  LoadOutput run(const std::vector<dsl::Declaration> &declarations) {
    lex_.reset(new Lexicon());
    collect(declarations);
    if (diags_.empty()) build_lattice();
    if (diags_.empty()) attach_type_constraints();
    if (diags_.empty()) compile_constraints();
    if (diags_.empty()) build_ontology();
    if (diags_.empty()) compile_semantics();
    if (diags_.empty()) check_sem_closure();
    if (diags_.empty()) link_senses();
    if (!diags_.empty()) return {nullptr, std::move(diags_)};
    return {std::move(lex_), {}};
  }

 private:
  void error(const SourcePos &pos, std::string message) {
    diags_.push_back({pos, Diagnostic::Severity::error, std::move(message)});
  }

  bool claim_name(const dsl::Name &n, std::string_view kind) {
    auto [it, inserted] = names_.emplace(n.text, n.pos);
    if (!inserted) {
      error(n.pos, "duplicate definition of " + std::string(kind) + " `" + n.text +
                       "` (first defined at " + describe_pos(it->second) + ")");
    }
    return inserted;
  }

  bool is_type(std::string_view name) const {
    return name == "top" || name == "string" || type_stmts_.count(std::string(name)) > 0;
  }

  void collect(const std::vector<dsl::Declaration> &declarations) {
    for (const auto &decl : declarations) {
      if (const auto *t = std::get_if<dsl::TypeStmt>(&decl)) {
        const std::string &n = t->name.text;
        if (n == "top" || n == "string" || n == "bottom") {
          error(t->name.pos, "`" + n + "` is a reserved type name");
          continue;
        }
        auto [it, inserted] = type_stmts_.emplace(n, t);
        if (!inserted) {
          error(t->name.pos, "duplicate definition of type `" + n + "` (first defined at " +
                                 describe_pos(it->second->name.pos) + ")");
          continue;
        }
        type_order_.push_back(t);
      } else if (const auto *c = std::get_if<dsl::ConstraintStmt>(&decl)) {
        if (claim_name(c->name, "constraint")) constraint_stmts_.emplace(c->name.text, c);
      } else if (const auto *s = std::get_if<dsl::SemanticsStmt>(&decl)) {
        if (claim_name(s->name, "semantics")) semantics_stmts_.emplace(s->name.text, s);
      } else if (const auto *s = std::get_if<dsl::SenseStmt>(&decl)) {
        if (claim_name(s->name, "sense")) sense_stmts_.push_back(s);
      } else if (const auto *m = std::get_if<dsl::MarkerStmt>(&decl)) {
        marker_stmts_.push_back(m);
      } else if (const auto *inc = std::get_if<dsl::IncludeStmt>(&decl)) {
        error(inc->pos, "`include` is only followed when loading from files");
      }
    }
    // Members of `a = b | c` that are not declared anywhere else become leaf
    // types, placed right after the declaration that names them.
    std::vector<const dsl::TypeStmt *> order;
    for (const auto *t : type_order_) {
      order.push_back(t);
      for (const auto &sub : t->subtypes) {
        if (is_type(sub.text) || sub.text == "bottom") continue;
        auto &implicit = implicit_.emplace_back();
        implicit.pos = sub.pos;
        implicit.name = sub;
        type_stmts_.emplace(sub.text, &implicit);
        order.push_back(&implicit);
      }
    }
    type_order_ = std::move(order);
  }

  void build_lattice() {
    TypeLattice::Builder b;
    for (const auto *t : type_order_) b.add_type(t->name.text);
    bool any_concept = false;
    for (const auto *t : type_order_) any_concept |= t->is_concept;
    if (any_concept && !type_stmts_.count("sem")) {
      for (const auto *t : type_order_) {
        if (t->is_concept) {
          error(t->pos, "concepts need a declared `sem` type as the ontology root");
          break;
        }
      }
      return;
    }
    for (const auto *t : type_order_) {
      const std::string &name = t->name.text;
      bool has_type_parent = false;
      for (const auto &ref : t->parents) {
        if (ref.argument) {
          error(ref.pos, "a parameterized constraint cannot constrain a type");
          continue;
        }
        if (is_type(ref.name)) {
          if (t->is_concept && ref.name != "sem" && !concept_named(ref.name)) {
            error(ref.pos, "concept `" + name + "` has non-concept parent `" + ref.name + "`");
            continue;
          }
          b.add_subtype(name, ref.name);
          has_type_parent = true;
        } else if (auto it = constraint_stmts_.find(ref.name); it != constraint_stmts_.end()) {
          if (it->second->parameter) {
            error(ref.pos, "template `" + ref.name + "` needs a type argument");
            continue;
          }
          type_constraint_refs_[name].push_back(ref);
        } else {
          error(ref.pos, "unknown type or constraint `" + ref.name + "`");
        }
      }
      if (t->is_concept && (t->major || !has_type_parent)) b.add_subtype(name, "sem");
      for (const auto &sub : t->subtypes) {
        if (!is_type(sub.text) || sub.text == "top") {
          error(sub.pos, "unknown type `" + sub.text + "`");
          continue;
        }
        b.add_subtype(sub.text, name);
      }
      std::set<std::string> seen;
      for (const auto &[feature, value] : t->features) {
        if (!seen.insert(feature.text).second) {
          error(feature.pos, "feature " + feature.text + " declared twice on `" + name + "`");
          continue;
        }
        if (!is_type(value.text)) {
          error(value.pos, "unknown type `" + value.text + "`");
          continue;
        }
        b.declare_feature(name, feature.text, value.text);
      }
    }
    if (!diags_.empty()) return;
    l1_ = std::make_shared<TypeLattice>(b.build());
    report_violations(*l1_);
  }

  bool concept_named(std::string_view name) const {
    auto it = type_stmts_.find(std::string(name));
    return it != type_stmts_.end() && it->second->is_concept;
  }

  void report_violations(const TypeLattice &lattice) {
    for (const auto &v : lattice.validate()) {
      SourcePos pos = type_order_.empty() ? SourcePos{} : type_order_.front()->name.pos;
      for (const auto &name : v.types) {
        if (auto it = type_stmts_.find(name); it != type_stmts_.end()) {
          pos = it->second->name.pos;
          break;
        }
      }
      error(pos, std::string(to_string(v.kind)) + ": " + v.message);
    }
  }

  void attach_type_constraints() {
    std::vector<std::pair<TypeId, FeatureStructure>> bodies;
    for (const auto &[type, refs] : type_constraint_refs_) {
      std::optional<FeatureStructure> acc;
      for (const auto &ref : refs) {
        const auto *stmt = constraint_stmts_.at(ref.name);
        try {
          FeatureStructure body = compile_avm(*l1_, stmt->body);
          if (!acc) {
            acc = std::move(body);
            continue;
          }
          UnifyResult r = unify(*l1_, *acc, body);
          if (!r) {
            error(ref.pos, "type constraints on `" + type + "` conflict: " + r.failure().describe());
            break;
          }
          acc = std::move(r.value());
        } catch (const ParseError &e) {
          diags_.push_back(e.diagnostic());
        }
      }
      if (acc) bodies.emplace_back(l1_->id(type), std::move(*acc));
    }
    if (!diags_.empty()) return;
    lattice_ = std::make_shared<const TypeLattice>(l1_->with_constraints(std::move(bodies)));
    report_violations(*lattice_);
  }

  void check_tier(const dsl::ConstraintStmt &stmt) {
    for (const auto &path : tier_violations(stmt.tier, stmt.body)) {
      error(stmt.name.pos, "constraint `" + stmt.name.text + "` (" +
                               std::string(to_string(stmt.tier)) + ") constrains " +
                               (path.empty() ? std::string("the whole frame") : to_string(path)) +
                               ", which its tier does not allow");
    }
  }

  void compile_constraints() {
    for (const auto &[name, stmt] : constraint_stmts_) {
      check_tier(*stmt);
      try {
        if (stmt->parameter) {
          compile_avm(*lattice_, stmt->body, {{*stmt->parameter, "top"}});
          lex_->templates_.emplace(name, *stmt);
          continue;
        }
        auto def = std::make_shared<ConstraintDef>();
        def->name = name;
        def->tier = stmt->tier;
        def->body = compile_avm(*lattice_, stmt->body);
        def->source = stmt->body;
        def->pos = stmt->name.pos;
        def->informative = informative(*lattice_, stmt->body, def->body);
        lex_->constraints_.emplace(name, std::move(def));
      } catch (const ParseError &e) {
        diags_.push_back(e.diagnostic());
      }
    }
  }

  void build_ontology() {
    lex_->lattice_ = lattice_;
    for (const auto &[name, refs] : type_constraint_refs_) {
      auto &out = lex_->type_constraint_refs_[lattice_->id(name)];
      for (const auto &ref : refs) out.push_back(ref.name);
    }
    std::vector<TypeId> majors;
    for (const auto *t : type_order_) {
      if (!t->is_concept) continue;
      TypeId id = lattice_->id(t->name.text);
      lex_->concept_types_.push_back(id);
      if (t->major) majors.push_back(id);
    }
    Ontology::MarkerMap markers;
    std::map<std::string, SourcePos> marker_pos;
    for (const auto *m : marker_stmts_) {
      if (auto [it, inserted] = marker_pos.emplace(m->stem, m->pos); !inserted) {
        error(m->pos, "duplicate marker for \"" + m->stem + "\" (first declared at " +
                          describe_pos(it->second) + ")");
        continue;
      }
      auto &targets = markers[m->stem];
      for (const auto &c : m->concepts) {
        if (!is_type(c.text)) {
          error(c.pos, "marker \"" + m->stem + "\" names undeclared concept `" + c.text + "`");
        } else if (!concept_named(c.text)) {
          error(c.pos, "marker \"" + m->stem + "\" names `" + c.text + "`, which is not a concept");
        } else {
          targets.push_back(lattice_->id(c.text));
        }
      }
    }
    if (!diags_.empty()) return;
    if (lex_->concept_types_.empty()) {
      if (!marker_stmts_.empty()) error(marker_stmts_.front()->pos, "markers need concepts");
      return;
    }
    lex_->ontology_ = Ontology(lattice_, lattice_->id("sem"), majors, std::move(markers));
    for (const auto &problem : lex_->ontology_.check()) {
      const auto *first = *std::find_if(type_order_.begin(), type_order_.end(),
                                        [](const dsl::TypeStmt *t) { return t->is_concept; });
      error(first->pos, problem);
    }
  }

  void compile_semantics() {
    for (const auto &[name, stmt] : semantics_stmts_) {
      try {
        auto def = std::make_shared<SemanticsDef>();
        def->name = name;
        def->body = compile_avm(*lattice_, stmt->body);
        def->source = stmt->body;
        def->pos = stmt->name.pos;
        check_roles(*def);
        lex_->semantics_.emplace(name, std::move(def));
      } catch (const ParseError &e) {
        diags_.push_back(e.diagnostic());
      }
    }
  }

  // Every role must be the very node of some argument slot.
  void check_roles(const SemanticsDef &def) {
    const FeatureStructure &fs = def.body;
    auto roles = fs.get({"SEMANTICS", "ROLES"});
    if (!roles) return;
    std::set<NodeIndex> argument_nodes;
    if (auto args = fs.get({"ARGUMENTS"})) {
      std::function<void(NodeIndex)> walk = [&](NodeIndex n) {
        if (!argument_nodes.insert(n).second) return;
        for (const auto &arc : fs.node(n).arcs) walk(arc.target);
      };
      for (const auto &arc : fs.node(*args).arcs) walk(arc.target);
    }
    for (const auto &arc : fs.node(*roles).arcs) {
      if (!argument_nodes.count(arc.target)) {
        error(def.pos, "semantics `" + def.name + "`: role " + arc.feature +
                           " is not shared with an argument slot");
      }
    }
  }

  void check_sem_closure() {
    if (lex_->ontology_.empty()) return;
    auto check = [&](const std::string &what, const FeatureStructure &fs, const SourcePos &pos) {
      for (const auto &node : fs.nodes()) {
        for (const auto &arc : node.arcs) {
          if (arc.feature != "SEM") continue;
          TypeId t = fs.node(arc.target).type;
          if (!lex_->ontology_.in_region(t)) {
            error(pos, what + " uses SEM value `" + lattice_->name(t) +
                           "`, which is not a declared concept");
          }
        }
      }
    };
    for (const auto &[name, def] : lex_->constraints_) {
      check("constraint `" + name + "`", def->body, def->pos);
    }
    for (const auto &[name, def] : lex_->semantics_) {
      check("semantics `" + name + "`", def->body, def->pos);
    }
  }

  std::shared_ptr<const ConstraintDef> instance(const dsl::Ref &ref) {
    std::string key = ref.str();
    if (auto it = lex_->instances_.find(key); it != lex_->instances_.end()) return it->second;
    const auto &stmt = lex_->templates_.at(ref.name);
    if (!lattice_->find(*ref.argument)) {
      error(ref.pos, "unknown type `" + *ref.argument + "`");
      return nullptr;
    }
    auto def = std::make_shared<ConstraintDef>();
    def->name = key;
    def->tier = stmt.tier;
    def->pos = stmt.name.pos;
    try {
      def->body = compile_avm(*lattice_, stmt.body, {{*stmt.parameter, *ref.argument}});
    } catch (const ParseError &e) {
      error(ref.pos, "cannot instantiate `" + key + "`: " + e.diagnostic().message);
      return nullptr;
    }
    def->informative = informative(*lattice_, stmt.body, def->body);
    lex_->instances_.emplace(key, def);
    return def;
  }

  void link_senses() {
    if (sense_stmts_.empty()) return;
    auto frame = lattice_->find("case-frame");
    auto wf = lattice_->find("wf-case-frame");
    if (!frame || !wf || !lattice_->is_subtype(*wf, *frame)) {
      error(sense_stmts_.front()->pos,
            "senses need the types `case-frame` and `wf-case-frame < case-frame`");
      return;
    }
    lex_->frame_type_ = *frame;
    lex_->wf_frame_type_ = *wf;
    FeatureStructure base = make(*lattice_, *wf, {});
    for (const auto *stmt : sense_stmts_) {
      SenseDef sense;
      sense.name = stmt->name.text;
      sense.priority = stmt->priority;
      sense.pos = stmt->name.pos;
      bool ok = true;
      for (const auto &ref : stmt->refs) {
        if (ref.argument) {
          if (!lex_->templates_.count(ref.name)) {
            error(ref.pos, lex_->constraints_.count(ref.name)
                               ? "constraint `" + ref.name + "` takes no type argument"
                               : "unknown constraint template `" + ref.name + "`");
            ok = false;
            continue;
          }
          auto def = instance(ref);
          if (!def) {
            ok = false;
            continue;
          }
          sense.constraints.push_back(def);
        } else if (auto c = lex_->constraints_.find(ref.name); c != lex_->constraints_.end()) {
          sense.constraints.push_back(c->second);
        } else if (auto s = lex_->semantics_.find(ref.name); s != lex_->semantics_.end()) {
          if (sense.semantics) {
            error(ref.pos, "sense `" + sense.name + "` names a second semantics `" + ref.name + "`");
            ok = false;
          }
          sense.semantics = s->second;
        } else if (lex_->templates_.count(ref.name)) {
          error(ref.pos, "template `" + ref.name + "` needs a type argument");
          ok = false;
        } else {
          error(ref.pos, "unknown constraint `" + ref.name + "`");
          ok = false;
        }
      }
      if (ok && !sense.semantics) {
        error(stmt->name.pos, "sense `" + sense.name + "` has no semantics");
        ok = false;
      }
      if (!ok) continue;
      FeatureStructure acc = base;
      for (const auto &c : sense.constraints) {
        UnifyResult r = unify(*lattice_, acc, c->body);
        if (!r) {
          error(stmt->name.pos, "sense `" + sense.name + "` is self-contradictory: adding `" +
                                    c->name + "` fails with " + r.failure().describe());
          ok = false;
          break;
        }
        acc = std::move(r.value());
        if (c->informative) ++sense.specificity;
      }
      if (!ok) continue;
      UnifyResult r = unify(*lattice_, acc, sense.semantics->body);
      if (!r) {
        error(stmt->name.pos, "sense `" + sense.name + "` is self-contradictory: adding `" +
                                  sense.semantics->name + "` fails with " +
                                  r.failure().describe());
        continue;
      }
      sense.conjunction = std::move(r.value());
      lex_->senses_.push_back(std::move(sense));
    }
  }

  std::shared_ptr<Lexicon> lex_;
  std::vector<Diagnostic> diags_;
  std::map<std::string, SourcePos> names_;
  std::map<std::string, const dsl::TypeStmt *> type_stmts_;
  std::vector<const dsl::TypeStmt *> type_order_;
  std::deque<dsl::TypeStmt> implicit_;
  std::map<std::string, const dsl::ConstraintStmt *> constraint_stmts_;
  std::map<std::string, const dsl::SemanticsStmt *> semantics_stmts_;
  std::vector<const dsl::SenseStmt *> sense_stmts_;
  std::vector<const dsl::MarkerStmt *> marker_stmts_;
  std::map<std::string, std::vector<dsl::Ref>> type_constraint_refs_;
  std::shared_ptr<TypeLattice> l1_;
  std::shared_ptr<const TypeLattice> lattice_;
};

LoadOutput load(const std::vector<dsl::Declaration> &declarations) {
  return LexiconLoader().run(declarations);
}

LoadOutput load_files(const std::vector<std::string> &paths) {
  ParseOutput parsed = parse_files(paths);
  if (!parsed.ok()) return {nullptr, std::move(parsed.diagnostics)};
  return load(parsed.declarations);
}

LoadOutput load_source(std::string_view source, const std::string &file) {
  ParseOutput parsed = parse(source, file);
  if (!parsed.ok()) return {nullptr, std::move(parsed.diagnostics)};
  return load(parsed.declarations);
}

const SenseDef *Lexicon::sense(std::string_view name) const {
  for (const auto &s : senses_) {
    if (s.name == name) return &s;
  }
  return nullptr;
}

std::shared_ptr<const ConstraintDef> Lexicon::constraint(std::string_view name) const {
  if (auto it = constraints_.find(name); it != constraints_.end()) return it->second;
  if (auto it = instances_.find(name); it != instances_.end()) return it->second;
  return nullptr;
}

std::shared_ptr<const ConstraintDef> Lexicon::parameterized_constraint(std::string_view name,
                                                                       std::string_view type) const {
  std::string key = std::string(name) + "(" + std::string(type) + ")";
  if (auto it = instances_.find(key); it != instances_.end()) return it->second;
  auto it = templates_.find(name);
  if (it == templates_.end()) throw LookupError("unknown constraint template `" + std::string(name) + "`");
  lattice_->id(type);
  const auto &stmt = it->second;
  auto def = std::make_shared<ConstraintDef>();
  def->name = key;
  def->tier = stmt.tier;
  def->pos = stmt.name.pos;
  try {
    def->body = compile_avm(*lattice_, stmt.body, {{*stmt.parameter, std::string(type)}});
  } catch (const ParseError &e) {
    throw LookupError("cannot instantiate `" + key + "`: " + e.diagnostic().message);
  }
  def->informative = informative(*lattice_, stmt.body, def->body);
  return def;
}

std::string Lexicon::print() const {
  std::string out;
  const TypeLattice &lat = *lattice_;
  auto is_concept = [&](TypeId t) {
    return std::find(concept_types_.begin(), concept_types_.end(), t) != concept_types_.end();
  };
  const auto &majors = ontology_.majors();
  for (std::uint32_t i = 2; i < lat.size(); ++i) {
    TypeId t{i};
    bool concept_type = is_concept(t);
    bool major = std::find(majors.begin(), majors.end(), t) != majors.end();
    out += concept_type ? (major ? "concept major " : "concept ") : "type ";
    out += lat.name(t);
    std::vector<std::string> parents;
    for (TypeId p : lat.parents(t)) {
      if (p == kTopType) continue;
      if (concept_type && p == ontology_.root() && (major || lat.parents(t).size() == 1)) continue;
      parents.push_back(lat.name(p));
    }
    if (auto it = type_constraint_refs_.find(t); it != type_constraint_refs_.end()) {
      parents.insert(parents.end(), it->second.begin(), it->second.end());
    }
    for (std::size_t k = 0; k < parents.size(); ++k) out += (k ? " & " : " < ") + parents[k];
    const auto &own = lat.own_features(t);
    if (!own.empty()) {
      out += " [";
      for (std::size_t k = 0; k < own.size(); ++k) {
        out += (k ? " " : "") + own[k].feature + ": " + lat.name(own[k].value_type);
      }
      out += "]";
    }
    out += ".\n";
  }
  for (const auto &[stem, concepts] : ontology_.markers()) {
    out += "marker " + quote(stem);
    for (std::size_t k = 0; k < concepts.size(); ++k) {
      out += (k ? ", " : " ") + lat.name(concepts[k]);
    }
    out += ".\n";
  }
  for (const auto &[name, def] : constraints_) {
    out += "constraint " + name + " " + std::string(to_string(def->tier)) + " := " +
           write_term(def->source) + ".\n";
  }
  for (const auto &[name, stmt] : templates_) {
    out += "constraint " + name + "(" + *stmt.parameter + ") " +
           std::string(to_string(stmt.tier)) + " := " + write_term(stmt.body) + ".\n";
  }
  for (const auto &[name, def] : semantics_) {
    out += "semantics " + name + " := " + write_term(def->source) + ".\n";
  }
  for (const auto &sense : senses_) {
    out += "sense " + sense.name + " :=";
    for (std::size_t k = 0; k < sense.constraints.size(); ++k) {
      out += (k ? " & " : " ") + sense.constraints[k]->name;
    }
    out += (sense.constraints.empty() ? " " : " & ") + sense.semantics->name;
    if (sense.priority != 0) out += " priority " + std::to_string(sense.priority);
    out += ".\n";
  }
  return out;
}

}  // namespace caseframe
