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

#include "caseframe/feature_structure.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace caseframe {

std::string to_string(const FeaturePath &path) {
  std::string out;
  for (const auto &f : path) {
    if (!out.empty()) out += '.';
    out += f;
  }
  return out;
}

FeaturePath parse_path(std::string_view dotted) {
  FeaturePath out;
  if (dotted.empty()) return out;
  std::size_t start = 0;
  while (true) {
    std::size_t dot = dotted.find('.', start);
    std::string_view seg = dotted.substr(start, dot == std::string_view::npos ? dotted.npos : dot - start);
    if (seg.empty()) throw std::invalid_argument("empty segment in path `" + std::string(dotted) + "`");
    out.emplace_back(seg);
    if (dot == std::string_view::npos) break;
    start = dot + 1;
  }
  return out;
}

FeatureStructure::FeatureStructure() : FeatureStructure(kTopType) {}

FeatureStructure::FeatureStructure(TypeId root_type) {
  nodes_.push_back(Node{root_type, std::nullopt, {}});
}

namespace {

constexpr NodeIndex kUnvisited = std::numeric_limits<NodeIndex>::max();

struct Canonicalizer {
  std::vector<Node> &in;
  std::vector<Node> out;
  std::vector<NodeIndex> renumber;
  std::vector<char> state;  // 0 new, 1 on stack, 2 done

  NodeIndex visit(NodeIndex n) {
    if (n >= in.size()) throw std::invalid_argument("dangling arc in feature structure");
    if (state[n] == 1) throw std::invalid_argument("cyclic feature structure");
    if (state[n] == 2) return renumber[n];
    state[n] = 1;
    NodeIndex mine = static_cast<NodeIndex>(out.size());
    renumber[n] = mine;
    out.push_back(Node{in[n].type, in[n].literal, {}});
    auto &arcs = in[n].arcs;
    std::sort(arcs.begin(), arcs.end(),
              [](const Arc &a, const Arc &b) { return a.feature < b.feature; });
    for (std::size_t i = 1; i < arcs.size(); ++i) {
      if (arcs[i].feature == arcs[i - 1].feature) {
        throw std::invalid_argument("duplicate feature " + arcs[i].feature);
      }
    }
    std::vector<Arc> mapped;
    mapped.reserve(arcs.size());
    for (const auto &arc : arcs) mapped.push_back({arc.feature, visit(arc.target)});
    out[mine].arcs = std::move(mapped);
    state[n] = 2;
    return mine;
  }
};

}  // namespace

FeatureStructure FeatureStructure::from_graph(std::vector<Node> nodes, NodeIndex root,
                                              bool normalized) {
  Canonicalizer c{nodes, {}, std::vector<NodeIndex>(nodes.size(), kUnvisited),
                  std::vector<char>(nodes.size(), 0)};
  c.visit(root);
  FeatureStructure fs;
  fs.nodes_ = std::move(c.out);
  fs.normalized_ = normalized;
  return fs;
}

std::optional<NodeIndex> FeatureStructure::child(NodeIndex n, std::string_view feature) const {
  const auto &arcs = nodes_.at(n).arcs;
  auto it = std::lower_bound(arcs.begin(), arcs.end(), feature,
                             [](const Arc &a, std::string_view f) { return a.feature < f; });
  if (it == arcs.end() || it->feature != feature) return std::nullopt;
  return it->target;
}

std::optional<NodeIndex> FeatureStructure::get(const FeaturePath &path) const {
  NodeIndex cur = root();
  for (const auto &f : path) {
    auto next = child(cur, f);
    if (!next) return std::nullopt;
    cur = *next;
  }
  return cur;
}

FeatureStructure FeatureStructure::subgraph(NodeIndex n) const {
  std::vector<Node> copy = nodes_;
  return from_graph(std::move(copy), n, normalized_);
}

std::vector<unsigned> FeatureStructure::in_degrees() const {
  std::vector<unsigned> deg(nodes_.size(), 0);
  for (const auto &node : nodes_) {
    for (const auto &arc : node.arcs) ++deg[arc.target];
  }
  return deg;
}

}  // namespace caseframe
