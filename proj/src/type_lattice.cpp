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

#include "caseframe/type_lattice.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <functional>
#include <set>

namespace caseframe {

namespace {

constexpr std::int32_t kNoGlb = -1;
constexpr std::int32_t kAmbiguousGlb = -2;

using Row = std::vector<std::uint64_t>;

bool test(const Row &row, std::uint32_t i) {
  return (row[i / 64] >> (i % 64)) & 1U;
}
void set(Row &row, std::uint32_t i) { row[i / 64] |= std::uint64_t{1} << (i % 64); }

}  // namespace

std::string_view to_string(LatticeViolation::Kind kind) {
  switch (kind) {
    case LatticeViolation::Kind::cycle: return "cycle";
    case LatticeViolation::Kind::unreachable: return "unreachable";
    case LatticeViolation::Kind::glb_ambiguity: return "glb-ambiguity";
    case LatticeViolation::Kind::feature_redeclaration: return "feature-redeclaration";
    case LatticeViolation::Kind::feature_conflict: return "feature-conflict";
    case LatticeViolation::Kind::constraint_conflict: return "constraint-conflict";
    case LatticeViolation::Kind::constraint_recursion: return "constraint-recursion";
  }
  return "unknown";
}

// ---------------------------------------------------------------- Builder

TypeLattice::Builder::Builder() {
  add_type("top");
  add_type("string");
  add_subtype("string", "top");
}

TypeId TypeLattice::Builder::add_type(std::string_view name) {
  if (name.empty()) throw std::invalid_argument("empty type name");
  if (name == "bottom") throw std::invalid_argument("`bottom` is reserved");
  if (auto it = by_name_.find(std::string(name)); it != by_name_.end()) {
    return it->second;
  }
  TypeId id{static_cast<std::uint32_t>(names_.size())};
  names_.emplace_back(name);
  by_name_.emplace(std::string(name), id);
  parents_.emplace_back();
  features_.emplace_back();
  return id;
}

void TypeLattice::Builder::add_subtype(std::string_view child,
                                       std::string_view parent) {
  TypeId c = add_type(child);
  TypeId p = add_type(parent);
  auto &ps = parents_[c.value];
  if (std::find(ps.begin(), ps.end(), p) == ps.end()) ps.push_back(p);
}

void TypeLattice::Builder::declare_feature(std::string_view type,
                                           std::string_view feature,
                                           std::string_view value_type) {
  auto t = find(type);
  if (!t) throw LookupError("unknown type `" + std::string(type) + "`");
  auto v = find(value_type);
  if (!v) throw LookupError("unknown type `" + std::string(value_type) + "`");
  auto &decls = features_[t->value];
  auto it = std::find_if(decls.begin(), decls.end(),
                         [&](const FeatureDecl &d) { return d.feature == feature; });
  if (it != decls.end()) {
    it->value_type = *v;
  } else {
    decls.push_back({std::string(feature), *v});
  }
}

bool TypeLattice::Builder::contains(std::string_view name) const {
  return by_name_.count(std::string(name)) != 0;
}

std::optional<TypeId> TypeLattice::Builder::find(std::string_view name) const {
  auto it = by_name_.find(std::string(name));
  if (it == by_name_.end()) return std::nullopt;
  return it->second;
}

TypeLattice TypeLattice::Builder::build() const {
  TypeLattice lat;
  lat.names_ = names_;
  lat.by_name_ = by_name_;
  lat.parents_ = parents_;
  lat.own_features_ = features_;
  const std::size_t n = names_.size();
  for (std::size_t t = 1; t < n; ++t) {
    if (lat.parents_[t].empty()) lat.parents_[t].push_back(kTopType);
  }
  lat.children_.assign(n, {});
  for (std::size_t t = 0; t < n; ++t) {
    for (TypeId p : lat.parents_[t]) {
      lat.children_[p.value].push_back(TypeId{static_cast<std::uint32_t>(t)});
    }
  }
  for (auto &decls : lat.own_features_) {
    std::sort(decls.begin(), decls.end(),
              [](const FeatureDecl &a, const FeatureDecl &b) { return a.feature < b.feature; });
  }
  lat.compute_closure();
  lat.compute_glb_table();
  lat.compute_appropriateness();
  lat.compute_constraint_index();
  return lat;
}

// ---------------------------------------------------------------- closure

void TypeLattice::compute_closure() {
  const std::size_t n = names_.size();
  const std::size_t words = (n + 63) / 64;
  up_.assign(n, Row(words, 0));
  down_.assign(n, Row(words, 0));
  for (std::uint32_t t = 0; t < n; ++t) {
    std::deque<std::uint32_t> queue{t};
    set(up_[t], t);
    while (!queue.empty()) {
      std::uint32_t cur = queue.front();
      queue.pop_front();
      for (TypeId p : parents_[cur]) {
        if (!test(up_[t], p.value)) {
          set(up_[t], p.value);
          queue.push_back(p.value);
        }
      }
    }
  }
  for (std::uint32_t t = 0; t < n; ++t) {
    for (std::uint32_t a = 0; a < n; ++a) {
      if (test(up_[t], a)) set(down_[a], t);
    }
  }
}

void TypeLattice::compute_glb_table() {
  const std::size_t n = names_.size();
  const std::size_t words = (n + 63) / 64;
  glb_.assign(n * n, kNoGlb);
  Row common(words);
  std::vector<std::uint32_t> maximal;
  for (std::uint32_t a = 0; a < n; ++a) {
    for (std::uint32_t b = a; b < n; ++b) {
      bool any = false;
      for (std::size_t w = 0; w < words; ++w) {
        common[w] = down_[a][w] & down_[b][w];
        any |= common[w] != 0;
      }
      std::int32_t result = kNoGlb;
      if (any) {
        maximal.clear();
        for (std::size_t w = 0; w < words; ++w) {
          std::uint64_t bits = common[w];
          while (bits != 0) {
            auto c = static_cast<std::uint32_t>(w * 64 + std::countr_zero(bits));
            bits &= bits - 1;
            std::size_t above = 0;
            for (std::size_t k = 0; k < words; ++k) {
              above += std::popcount(up_[c][k] & common[k]);
            }
            if (above == 1) maximal.push_back(c);
          }
        }
        if (maximal.size() == 1) {
          result = static_cast<std::int32_t>(maximal.front());
        } else if (maximal.size() > 1) {
          result = kAmbiguousGlb;
        }
      }
      glb_[a * n + b] = result;
      glb_[b * n + a] = result;
    }
  }
}

void TypeLattice::compute_appropriateness() {
  const std::size_t n = names_.size();
  approp_.assign(n, {});
  feature_violations_.clear();
  introducers_.clear();

  // Parents before children; members of cycles are handled last.
  std::vector<std::size_t> pending(n);
  for (std::size_t t = 0; t < n; ++t) pending[t] = parents_[t].size();
  std::deque<std::uint32_t> ready;
  for (std::uint32_t t = 0; t < n; ++t) {
    if (pending[t] == 0) ready.push_back(t);
  }
  std::vector<std::uint32_t> order;
  std::vector<bool> done(n, false);
  while (!ready.empty()) {
    std::uint32_t t = ready.front();
    ready.pop_front();
    order.push_back(t);
    done[t] = true;
    for (TypeId c : children_[t]) {
      if (--pending[c.value] == 0) ready.push_back(c.value);
    }
  }
  for (std::uint32_t t = 0; t < n; ++t) {
    if (!done[t]) order.push_back(t);
  }

  for (std::uint32_t t : order) {
    std::map<std::string, TypeId> merged;
    for (TypeId p : parents_[t]) {
      for (const auto &decl : approp_[p.value]) {
        auto [it, inserted] = merged.emplace(decl.feature, decl.value_type);
        if (inserted || it->second == decl.value_type) continue;
        std::int32_t g = glb_[it->second.value * n + decl.value_type.value];
        if (g >= 0) {
          it->second = TypeId{static_cast<std::uint32_t>(g)};
        } else {
          feature_violations_.push_back(
              {LatticeViolation::Kind::feature_conflict,
               {names_[t], names_[it->second.value], names_[decl.value_type.value]},
               "type `" + names_[t] + "` inherits " + decl.feature +
                   " with incompatible value types `" + names_[it->second.value] +
                   "` and `" + names_[decl.value_type.value] + "`"});
        }
      }
    }
    for (const auto &decl : own_features_[t]) {
      auto it = merged.find(decl.feature);
      if (it != merged.end() && !is_subtype(decl.value_type, it->second)) {
        feature_violations_.push_back(
            {LatticeViolation::Kind::feature_redeclaration,
             {names_[t], names_[decl.value_type.value], names_[it->second.value]},
             "type `" + names_[t] + "` redeclares " + decl.feature + " as `" +
                 names_[decl.value_type.value] + "`, which does not narrow the inherited `" +
                 names_[it->second.value] + "`"});
      }
      merged[decl.feature] = decl.value_type;
    }
    auto &out = approp_[t];
    for (auto &[feature, vt] : merged) out.push_back({feature, vt});
  }

  for (std::uint32_t t = 0; t < n; ++t) {
    for (const auto &decl : own_features_[t]) {
      bool inherited = false;
      for (TypeId p : parents_[t]) {
        if (value_type(p, decl.feature)) inherited = true;
      }
      if (!inherited) {
        introducers_[decl.feature].push_back(TypeId{t});
      }
    }
  }
}

void TypeLattice::compute_constraint_index() {
  const std::size_t n = names_.size();
  constrained_ancestors_.assign(n, {});
  if (constraints_.empty()) return;
  for (std::uint32_t t = 0; t < n; ++t) {
    auto &list = constrained_ancestors_[t];
    for (const auto &[c, fs] : constraints_) {
      if (test(up_[t], c)) list.push_back(TypeId{c});
    }
    std::sort(list.begin(), list.end(), [&](TypeId a, TypeId b) {
      auto depth = [&](TypeId x) {
        std::size_t d = 0;
        for (auto w : up_[x.value]) d += std::popcount(w);
        return d;
      };
      auto da = depth(a), db = depth(b);
      return da != db ? da < db : a < b;
    });
  }
}

// ---------------------------------------------------------------- queries

std::optional<TypeId> TypeLattice::find(std::string_view name) const {
  auto it = by_name_.find(std::string(name));
  if (it == by_name_.end()) return std::nullopt;
  return it->second;
}

TypeId TypeLattice::id(std::string_view name) const {
  if (auto t = find(name)) return *t;
  throw LookupError("unknown type `" + std::string(name) + "`");
}

bool TypeLattice::is_subtype(TypeId a, TypeId b) const {
  return test(up_.at(a.value), b.value);
}

std::optional<TypeId> TypeLattice::glb(TypeId a, TypeId b) const {
  const std::size_t n = names_.size();
  if (a.value >= n || b.value >= n) throw LookupError("type id out of range");
  if (a == b) return a;
  std::int32_t g = glb_[a.value * n + b.value];
  if (g == kAmbiguousGlb) {
    throw AmbiguousGlb("types `" + names_[a.value] + "` and `" + names_[b.value] +
                       "` have no unique greatest lower bound");
  }
  if (g == kNoGlb) return std::nullopt;
  return TypeId{static_cast<std::uint32_t>(g)};
}

std::optional<TypeId> TypeLattice::value_type(TypeId t, std::string_view feature) const {
  const auto &decls = approp_.at(t.value);
  auto it = std::lower_bound(decls.begin(), decls.end(), feature,
                             [](const FeatureDecl &d, std::string_view f) { return d.feature < f; });
  if (it == decls.end() || it->feature != feature) return std::nullopt;
  return it->value_type;
}

const std::vector<TypeId> &TypeLattice::introducers(std::string_view feature) const {
  static const std::vector<TypeId> none;
  auto it = introducers_.find(feature);
  return it == introducers_.end() ? none : it->second;
}

const FeatureStructure *TypeLattice::constraint(TypeId t) const {
  auto it = constraints_.find(t.value);
  return it == constraints_.end() ? nullptr : &it->second;
}

TypeLattice TypeLattice::with_constraints(
    std::vector<std::pair<TypeId, FeatureStructure>> constraints) const {
  TypeLattice out = *this;
  for (auto &[t, fs] : constraints) {
    if (t.value >= names_.size()) throw LookupError("type id out of range");
    // Bodies are re-closed under the new constraints wherever they are used.
    out.constraints_.insert_or_assign(t.value,
                                      FeatureStructure::from_graph(fs.nodes(), fs.root()));
  }
  out.compute_constraint_index();
  return out;
}

std::vector<TypeId> TypeLattice::descendants(TypeId t) const {
  std::vector<TypeId> out;
  for (std::uint32_t i = 0; i < names_.size(); ++i) {
    if (test(down_.at(t.value), i)) out.push_back(TypeId{i});
  }
  return out;
}

std::vector<TypeId> TypeLattice::ancestors(TypeId t) const {
  std::vector<TypeId> out;
  for (std::uint32_t i = 0; i < names_.size(); ++i) {
    if (test(up_.at(t.value), i)) out.push_back(TypeId{i});
  }
  return out;
}

// ---------------------------------------------------------------- validate

std::vector<LatticeViolation> TypeLattice::validate() const {
  std::vector<LatticeViolation> out;
  const std::size_t n = names_.size();

  // Cycles: strongly connected components of the parent graph.
  std::vector<bool> in_cycle(n, false);
  std::vector<bool> reported(n, false);
  for (std::uint32_t t = 0; t < n; ++t) {
    if (reported[t]) continue;
    std::vector<std::string> members;
    for (std::uint32_t u = 0; u < n; ++u) {
      if (u != t && test(up_[t], u) && test(up_[u], t)) members.push_back(names_[u]);
    }
    bool self_loop = std::find(parents_[t].begin(), parents_[t].end(), TypeId{t}) !=
                     parents_[t].end();
    if (members.empty() && !self_loop) continue;
    members.insert(members.begin(), names_[t]);
    for (std::uint32_t u = 0; u < n; ++u) {
      if (u == t || (test(up_[t], u) && test(up_[u], t))) {
        reported[u] = true;
        in_cycle[u] = true;
      }
    }
    std::string msg = "subtype cycle among";
    for (const auto &m : members) msg += " `" + m + "`";
    out.push_back({LatticeViolation::Kind::cycle, members, msg});
  }

  for (std::uint32_t t = 1; t < n; ++t) {
    if (!test(up_[t], kTopType.value)) {
      out.push_back({LatticeViolation::Kind::unreachable, {names_[t]},
                     "type `" + names_[t] + "` is not reachable from top"});
    }
  }

  for (std::uint32_t a = 0; a < n; ++a) {
    for (std::uint32_t b = a + 1; b < n; ++b) {
      if (glb_[a * n + b] == kAmbiguousGlb && !in_cycle[a] && !in_cycle[b]) {
        out.push_back({LatticeViolation::Kind::glb_ambiguity, {names_[a], names_[b]},
                       "types `" + names_[a] + "` and `" + names_[b] +
                           "` have several maximal common subtypes"});
      }
    }
  }

  for (const auto &v : feature_violations_) out.push_back(v);

  // Type constraints: compatible roots and finite expansion.
  std::map<std::uint32_t, std::set<std::uint32_t>> deps;
  for (const auto &[t, fs] : constraints_) {
    TypeId root_type = fs.node(fs.root()).type;
    std::int32_t g = glb_[t * n + root_type.value];
    if (g < 0 && root_type.value != t) {
      out.push_back({LatticeViolation::Kind::constraint_conflict,
                     {names_[t], names_[root_type.value]},
                     "constraint on `" + names_[t] + "` is rooted at incompatible type `" +
                         names_[root_type.value] + "`"});
    }
    for (NodeIndex i = 1; i < fs.size(); ++i) {
      for (TypeId c : constrained_ancestors_[fs.node(i).type.value]) deps[t].insert(c.value);
    }
  }
  std::vector<int> state(n, 0);
  std::function<bool(std::uint32_t)> cyclic = [&](std::uint32_t t) {
    if (state[t] == 1) return true;
    if (state[t] == 2) return false;
    state[t] = 1;
    for (std::uint32_t d : deps[t]) {
      if (cyclic(d)) return true;
    }
    state[t] = 2;
    return false;
  };
  for (const auto &[t, fs] : constraints_) {
    std::fill(state.begin(), state.end(), 0);
    if (cyclic(t)) {
      out.push_back({LatticeViolation::Kind::constraint_recursion, {names_[t]},
                     "constraint on `" + names_[t] + "` expands without bound"});
    }
  }
  return out;
}

}  // namespace caseframe
