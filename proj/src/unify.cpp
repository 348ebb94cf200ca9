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

#include "caseframe/unify.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <unordered_map>

#include "workspace.hpp"

namespace caseframe {

std::string_view to_string(FailureReason reason) {
  switch (reason) {
    case FailureReason::clash: return "clash";
    case FailureReason::cycle: return "cycle";
    case FailureReason::inappropriate: return "inappropriate";
  }
  return "unknown";
}

std::string UnifyFailure::describe() const {
  std::string where = path.empty() ? std::string("<root>") : to_string(path);
  if (reason == FailureReason::inappropriate) {
    return "feature " + right + " is not appropriate for type `" + left + "` at " + where;
  }
  return std::string(to_string(reason)) + " at " + where + ": " + left + " vs " + right;
}

const FeatureStructure &UnifyResult::value() const {
  if (!ok()) throw std::logic_error("unification failed: " + failure().describe());
  return std::get<FeatureStructure>(value_);
}

FeatureStructure &UnifyResult::value() {
  if (!ok()) throw std::logic_error("unification failed: " + failure().describe());
  return std::get<FeatureStructure>(value_);
}

const UnifyFailure &UnifyResult::failure() const {
  if (ok()) throw std::logic_error("unification succeeded");
  return std::get<UnifyFailure>(value_);
}

namespace detail {

namespace {
constexpr std::size_t kExpansionLimit = 200000;
constexpr int kMaxPasses = 10000;
}  // namespace

NodeIndex Workspace::add(TypeId type, std::optional<std::string> literal) {
  auto id = static_cast<NodeIndex>(nodes_.size());
  nodes_.push_back(WNode{type, std::move(literal), {}, id, {}});
  return id;
}

NodeIndex Workspace::import(const FeatureStructure &fs) {
  auto base = static_cast<NodeIndex>(nodes_.size());
  for (const auto &node : fs.nodes()) {
    NodeIndex id = add(node.type, node.literal);
    auto &w = nodes_[id];
    for (const auto &arc : node.arcs) w.arcs.emplace_back(arc.feature, base + arc.target);
    if (fs.normalized()) w.applied = lattice_.constrained_ancestors(node.type);
  }
  return base;
}

NodeIndex Workspace::find(NodeIndex n) {
  NodeIndex root = n;
  while (nodes_[root].forward != root) root = nodes_[root].forward;
  while (nodes_[n].forward != root) {
    NodeIndex next = nodes_[n].forward;
    nodes_[n].forward = root;
    n = next;
  }
  return root;
}

void Workspace::fail(FeaturePath path, std::string left, std::string right,
                     FailureReason reason) {
  if (!failure_) failure_ = UnifyFailure{std::move(path), std::move(left), std::move(right), reason};
}

std::string Workspace::label(NodeIndex n) {
  const auto &node = nodes_[find(n)];
  if (node.literal) return "\"" + *node.literal + "\"";
  return lattice_.name(node.type);
}

NodeIndex *Workspace::arc_slot(NodeIndex n, const std::string &feature) {
  for (auto &[f, target] : nodes_[n].arcs) {
    if (f == feature) return &target;
  }
  return nullptr;
}

bool Workspace::unify(NodeIndex a, NodeIndex b, const FeaturePath &path) {
  struct Item {
    NodeIndex a, b;
    FeaturePath path;
  };
  std::vector<Item> stack{{a, b, path}};
  while (!stack.empty()) {
    Item item = std::move(stack.back());
    stack.pop_back();
    NodeIndex ra = find(item.a);
    NodeIndex rb = find(item.b);
    if (ra == rb) continue;
    auto &na = nodes_[ra];
    auto &nb = nodes_[rb];
    auto t = lattice_.glb(na.type, nb.type);
    if (!t) {
      fail(item.path, label(ra), label(rb), FailureReason::clash);
      return false;
    }
    if (na.literal && nb.literal && *na.literal != *nb.literal) {
      fail(item.path, label(ra), label(rb), FailureReason::clash);
      return false;
    }
    na.type = *t;
    if (!na.literal && nb.literal) na.literal = nb.literal;
    for (TypeId applied : nb.applied) {
      if (std::find(na.applied.begin(), na.applied.end(), applied) == na.applied.end()) {
        na.applied.push_back(applied);
      }
    }
    nb.forward = ra;
    auto moved = std::move(nb.arcs);
    nb.arcs.clear();
    std::sort(moved.begin(), moved.end());
    // Pushed in reverse so the first feature is processed first.
    for (auto it = moved.rbegin(); it != moved.rend(); ++it) {
      if (NodeIndex *slot = arc_slot(ra, it->first)) {
        FeaturePath child_path = item.path;
        child_path.push_back(it->first);
        stack.push_back({*slot, it->second, std::move(child_path)});
      } else {
        nodes_[ra].arcs.emplace_back(it->first, it->second);
      }
    }
  }
  return true;
}

NodeIndex Workspace::ensure_arc(NodeIndex n, const std::string &feature) {
  n = find(n);
  if (NodeIndex *slot = arc_slot(n, feature)) return find(*slot);
  NodeIndex child = add(kTopType);
  nodes_[n].arcs.emplace_back(feature, child);
  return child;
}

bool Workspace::attach(NodeIndex n, const std::string &feature, NodeIndex child,
                       const FeaturePath &path) {
  n = find(n);
  if (NodeIndex *slot = arc_slot(n, feature)) {
    FeaturePath child_path = path;
    child_path.push_back(feature);
    return unify(*slot, child, child_path);
  }
  nodes_[n].arcs.emplace_back(feature, child);
  return true;
}

void Workspace::redirect(NodeIndex n, const std::string &feature, NodeIndex child) {
  n = find(n);
  if (NodeIndex *slot = arc_slot(n, feature)) {
    *slot = child;
  } else {
    nodes_[n].arcs.emplace_back(feature, child);
  }
}

FeaturePath Workspace::path_to(NodeIndex root, NodeIndex target) {
  root = find(root);
  target = find(target);
  std::unordered_map<NodeIndex, std::pair<NodeIndex, std::string>> parent;
  std::deque<NodeIndex> queue{root};
  parent[root] = {root, {}};
  while (!queue.empty()) {
    NodeIndex cur = queue.front();
    queue.pop_front();
    if (cur == target) break;
    auto arcs = nodes_[cur].arcs;
    std::sort(arcs.begin(), arcs.end());
    for (const auto &[f, child] : arcs) {
      NodeIndex c = find(child);
      if (parent.count(c)) continue;
      parent[c] = {cur, f};
      queue.push_back(c);
    }
  }
  FeaturePath path;
  if (!parent.count(target)) return path;
  for (NodeIndex cur = target; cur != root; cur = parent[cur].first) {
    path.push_back(parent[cur].second);
  }
  std::reverse(path.begin(), path.end());
  return path;
}

bool Workspace::topo_order(NodeIndex root, std::vector<NodeIndex> &order) {
  order.clear();
  std::unordered_map<NodeIndex, char> state;
  struct Frame {
    NodeIndex node;
    std::size_t next;
  };
  std::vector<Frame> stack{{find(root), 0}};
  state[find(root)] = 1;
  std::vector<NodeIndex> post;
  while (!stack.empty()) {
    auto &frame = stack.back();
    auto &arcs = nodes_[frame.node].arcs;
    if (frame.next == arcs.size()) {
      state[frame.node] = 2;
      post.push_back(frame.node);
      stack.pop_back();
      continue;
    }
    NodeIndex child = find(arcs[frame.next].second);
    std::string feature = arcs[frame.next].first;
    ++frame.next;
    char &s = state[child];
    if (s == 1) {
      FeaturePath p = path_to(root, frame.node);
      p.push_back(feature);
      fail(std::move(p), label(child), label(frame.node), FailureReason::cycle);
      return false;
    }
    if (s == 0) {
      s = 1;
      stack.push_back({child, 0});
    }
  }
  order.assign(post.rbegin(), post.rend());
  return true;
}

UnifyResult Workspace::finish(NodeIndex root) {
  if (failure_) return *failure_;
  std::vector<NodeIndex> order;
  for (int pass = 0;; ++pass) {
    if (pass > kMaxPasses || nodes_.size() > kExpansionLimit) {
      fail({}, "expansion", "limit", FailureReason::cycle);
      return *failure_;
    }
    if (!topo_order(root, order)) return *failure_;
    bool changed = false;
    std::optional<std::pair<NodeIndex, std::string>> ambiguous;

    for (NodeIndex n : order) {
      n = find(n);
      auto arcs = nodes_[n].arcs;
      for (const auto &[feature, target] : arcs) {
        auto vt = lattice_.value_type(nodes_[n].type, feature);
        if (!vt) {
          std::vector<TypeId> candidates;
          for (TypeId intro : lattice_.introducers(feature)) {
            if (auto g = lattice_.glb(nodes_[n].type, intro)) candidates.push_back(*g);
          }
          std::vector<TypeId> maximal;
          for (TypeId c : candidates) {
            bool dominated = false;
            for (TypeId d : candidates) {
              if (d != c && lattice_.is_subtype(c, d)) dominated = true;
            }
            if (!dominated && std::find(maximal.begin(), maximal.end(), c) == maximal.end()) {
              maximal.push_back(c);
            }
          }
          if (maximal.empty()) {
            fail(path_to(root, n), lattice_.name(nodes_[n].type), feature,
                 FailureReason::inappropriate);
            return *failure_;
          }
          if (maximal.size() > 1) {
            if (!ambiguous) ambiguous = {n, feature};
            continue;
          }
          nodes_[n].type = maximal.front();
          changed = true;
          vt = lattice_.value_type(nodes_[n].type, feature);
        }
        NodeIndex c = find(target);
        auto g = lattice_.glb(nodes_[c].type, *vt);
        if (!g) {
          FeaturePath p = path_to(root, n);
          p.push_back(feature);
          fail(std::move(p), label(c), lattice_.name(*vt), FailureReason::clash);
          return *failure_;
        }
        if (*g != nodes_[c].type) {
          nodes_[c].type = *g;
          changed = true;
        }
      }
    }
    if (changed) continue;

    for (NodeIndex n : order) {
      n = find(n);
      auto pending = lattice_.constrained_ancestors(nodes_[n].type);
      for (TypeId t : pending) {
        n = find(n);
        auto &applied = nodes_[n].applied;
        if (std::find(applied.begin(), applied.end(), t) != applied.end()) continue;
        applied.push_back(t);
        NodeIndex body = import(*lattice_.constraint(t));
        if (!unify(n, body, path_to(root, n))) return *failure_;
        changed = true;
      }
    }
    if (changed) continue;

    if (ambiguous) {
      fail(path_to(root, ambiguous->first), lattice_.name(nodes_[find(ambiguous->first)].type),
           ambiguous->second, FailureReason::inappropriate);
      return *failure_;
    }
    break;
  }

  std::unordered_map<NodeIndex, NodeIndex> index;
  for (NodeIndex n : order) {
    auto id = static_cast<NodeIndex>(index.size());
    index.emplace(n, id);
  }
  std::vector<Node> out(order.size());
  for (NodeIndex n : order) {
    const auto &w = nodes_[n];
    Node &node = out[index.at(n)];
    node.type = w.type;
    node.literal = w.literal;
    for (const auto &[feature, target] : w.arcs) {
      node.arcs.push_back({feature, index.at(find(target))});
    }
  }
  return FeatureStructure::from_graph(std::move(out), index.at(find(root)), true);
}

}  // namespace detail

UnifyResult unify(const TypeLattice &lattice, const FeatureStructure &a,
                  const FeatureStructure &b) {
  detail::Workspace ws(lattice);
  NodeIndex ra = ws.import(a);
  NodeIndex rb = ws.import(b);
  if (!ws.unify(ra, rb, {})) return *ws.failure();
  return ws.finish(ra);
}

UnifyResult normalize(const TypeLattice &lattice, const FeatureStructure &raw) {
  detail::Workspace ws(lattice);
  FeatureStructure unclosed = FeatureStructure::from_graph(raw.nodes(), raw.root(), false);
  return ws.finish(ws.import(unclosed));
}

bool subsumes(const TypeLattice &lattice, const FeatureStructure &a,
              const FeatureStructure &b) {
  std::vector<std::optional<NodeIndex>> map(a.size());
  std::vector<std::pair<NodeIndex, NodeIndex>> stack{{a.root(), b.root()}};
  while (!stack.empty()) {
    auto [x, y] = stack.back();
    stack.pop_back();
    if (map[x]) {
      if (*map[x] != y) return false;
      continue;
    }
    map[x] = y;
    const Node &nx = a.node(x);
    const Node &ny = b.node(y);
    if (!lattice.is_subtype(ny.type, nx.type)) return false;
    if (nx.literal && nx.literal != ny.literal) return false;
    for (const auto &arc : nx.arcs) {
      auto target = b.child(y, arc.feature);
      if (!target) return false;
      stack.emplace_back(arc.target, *target);
    }
  }
  return true;
}

FeatureStructure make(const TypeLattice &lattice, TypeId root_type,
                      const std::vector<Assignment> &assignments) {
  detail::Workspace ws(lattice);
  NodeIndex root = ws.add(root_type);
  std::map<int, NodeIndex> tags;
  for (const auto &assignment : assignments) {
    if (assignment.path.empty()) throw ConstructionError("empty path in assignment");
    NodeIndex n = root;
    FeaturePath prefix;
    for (std::size_t i = 0; i + 1 < assignment.path.size(); ++i) {
      n = ws.ensure_arc(n, assignment.path[i]);
      prefix.push_back(assignment.path[i]);
    }
    NodeIndex value = 0;
    switch (assignment.value.kind) {
      case Value::Kind::type: {
        auto t = lattice.find(assignment.value.text);
        if (!t) throw ConstructionError("unknown type `" + assignment.value.text + "`");
        value = ws.add(*t);
        break;
      }
      case Value::Kind::string:
        value = ws.add(kStringType, assignment.value.text);
        break;
      case Value::Kind::tag: {
        auto [it, inserted] = tags.emplace(assignment.value.tag, 0);
        if (inserted) it->second = ws.add(kTopType);
        value = it->second;
        break;
      }
    }
    if (!ws.attach(n, assignment.path.back(), value, prefix)) break;
  }
  UnifyResult result = ws.finish(root);
  if (!result) throw ConstructionError(result.failure().describe());
  return std::move(result.value());
}

UnifyResult embed(const TypeLattice &lattice, const FeaturePath &path,
                  const FeatureStructure &value) {
  detail::Workspace ws(lattice);
  if (path.empty()) return ws.finish(ws.import(value));
  NodeIndex root = ws.add(kTopType);
  NodeIndex n = root;
  for (std::size_t i = 0; i + 1 < path.size(); ++i) n = ws.ensure_arc(n, path[i]);
  ws.attach(n, path.back(), ws.import(value), {});
  return ws.finish(root);
}

UnifyResult with_value(const TypeLattice &lattice, const FeatureStructure &fs,
                       const FeaturePath &path, const FeatureStructure &value) {
  detail::Workspace ws(lattice);
  if (path.empty()) return ws.finish(ws.import(value));
  FeatureStructure unclosed = FeatureStructure::from_graph(fs.nodes(), fs.root(), false);
  NodeIndex root = ws.import(unclosed);
  NodeIndex n = root;
  for (std::size_t i = 0; i + 1 < path.size(); ++i) n = ws.ensure_arc(n, path[i]);
  ws.redirect(n, path.back(), ws.import(value));
  return ws.finish(root);
}

}  // namespace caseframe
