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

#ifndef CASEFRAME_SRC_WORKSPACE_HPP_
#define CASEFRAME_SRC_WORKSPACE_HPP_

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "caseframe/unify.hpp"

namespace caseframe::detail {

// Mutable union-find arena in which structures are merged and closed before
// being frozen into a canonical FeatureStructure.
class Workspace {
 public:
  explicit Workspace(const TypeLattice &lattice) : lattice_(lattice) {}

  NodeIndex add(TypeId type, std::optional<std::string> literal = std::nullopt);
  // Copies fs into the arena and returns its root.
  NodeIndex import(const FeatureStructure &fs);
  NodeIndex find(NodeIndex n);

  // Merges two nodes; false (with failure() set) on a clash.
  bool unify(NodeIndex a, NodeIndex b, const FeaturePath &path);
  // Child of n under feature, created with type top when missing.
  NodeIndex ensure_arc(NodeIndex n, const std::string &feature);
  // Points n's feature at child, merging with an existing value.
  bool attach(NodeIndex n, const std::string &feature, NodeIndex child,
              const FeaturePath &path);
  // Replaces the target of n's feature without merging.
  void redirect(NodeIndex n, const std::string &feature, NodeIndex child);

  const std::optional<UnifyFailure> &failure() const { return failure_; }

  // Closes the graph reachable from root and freezes it.
  UnifyResult finish(NodeIndex root);

 private:
  struct WNode {
    TypeId type;
    std::optional<std::string> literal;
    std::vector<std::pair<std::string, NodeIndex>> arcs;
    NodeIndex forward;
    std::vector<TypeId> applied;
  };

  NodeIndex *arc_slot(NodeIndex n, const std::string &feature);
  std::string label(NodeIndex n);
  FeaturePath path_to(NodeIndex root, NodeIndex target);
  bool topo_order(NodeIndex root, std::vector<NodeIndex> &order);
  void fail(FeaturePath path, std::string left, std::string right, FailureReason reason);

  const TypeLattice &lattice_;
  std::vector<WNode> nodes_;
  std::optional<UnifyFailure> failure_;
};

}  // namespace caseframe::detail

#endif  // CASEFRAME_SRC_WORKSPACE_HPP_
