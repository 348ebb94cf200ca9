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

#ifndef CASEFRAME_FEATURE_STRUCTURE_HPP_
#define CASEFRAME_FEATURE_STRUCTURE_HPP_

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace caseframe {

/// Index of a type inside one TypeLattice.
struct TypeId {
  std::uint32_t value = 0;
  auto operator<=>(const TypeId &) const = default;
};

inline constexpr TypeId kTopType{0};
inline constexpr TypeId kStringType{1};

using NodeIndex = std::uint32_t;

/// Sequence of feature names, printed as `ARGUMENTS.DIR-OBJ.CASE`.
using FeaturePath = std::vector<std::string>;

std::string to_string(const FeaturePath &path);
FeaturePath parse_path(std::string_view dotted);

struct Arc {
  std::string feature;
  NodeIndex target = 0;
  bool operator==(const Arc &) const = default;
};

struct Node {
  TypeId type = kTopType;
  // Set only on nodes of type `string`.
  std::optional<std::string> literal;
  // Sorted by feature name.
  std::vector<Arc> arcs;
  bool operator==(const Node &) const = default;
};

// A rooted acyclic typed DAG held in canonical form: nodes are numbered in
// depth-first order from the root (index 0) following arcs in feature
// order, and unreachable nodes are dropped. Two structures are isomorphic
// exactly when they compare equal.
class FeatureStructure {
 public:
  FeatureStructure();
  explicit FeatureStructure(TypeId root_type);

  // Canonicalizes an arbitrary node graph. Throws std::invalid_argument if
  // the graph reachable from `root` has a cycle or a dangling arc.
  static FeatureStructure from_graph(std::vector<Node> nodes, NodeIndex root,
                                     bool normalized = false);

  NodeIndex root() const { return 0; }
  std::size_t size() const { return nodes_.size(); }
  const Node &node(NodeIndex n) const { return nodes_.at(n); }
  const std::vector<Node> &nodes() const { return nodes_; }

  std::optional<NodeIndex> child(NodeIndex n, std::string_view feature) const;
  std::optional<NodeIndex> get(const FeaturePath &path) const;

  // The sub-DAG rooted at `n`, as its own structure.
  FeatureStructure subgraph(NodeIndex n) const;

  // Number of arcs pointing at each node; > 1 means reentrancy.
  std::vector<unsigned> in_degrees() const;

  // True when produced by normalization against a lattice (closed under
  // appropriateness and type constraints).
  bool normalized() const { return normalized_; }

  bool operator==(const FeatureStructure &other) const {
    return nodes_ == other.nodes_;
  }

 private:
  std::vector<Node> nodes_;
  bool normalized_ = false;
};

inline FeatureStructure copy(const FeatureStructure &fs) { return fs; }

inline bool isomorphic(const FeatureStructure &a, const FeatureStructure &b) {
  return a == b;
}

}  // namespace caseframe

#endif  // CASEFRAME_FEATURE_STRUCTURE_HPP_
