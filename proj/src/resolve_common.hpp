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

#ifndef CASEFRAME_SRC_RESOLVE_COMMON_HPP_
#define CASEFRAME_SRC_RESOLVE_COMMON_HPP_

#include <string>
#include <vector>

#include "caseframe/resolver.hpp"

namespace caseframe::detail {

// A head under ARGUMENTS.X whose STEM is a literal.
struct MarkedHead {
  FeaturePath path;
  std::string stem;
  std::vector<TypeId> markers;
};

// One way of binding marker concepts to the frame's heads.
struct Alternative {
  FeatureStructure frame;
  // Heads whose stem has no marker.
  std::vector<FeaturePath> unmarked;
};

FeatureStructure as_frame(const Lexicon &lex, const FeatureStructure &input);
std::vector<FeaturePath> embedded_clauses(const Lexicon &lex, const FeatureStructure &frame);
std::vector<MarkedHead> marked_heads(const Lexicon &lex, const FeatureStructure &frame);
std::vector<Alternative> marker_alternatives(const Lexicon &lex, const FeatureStructure &frame);
std::vector<std::string> flags_for(const Lexicon &lex, const Alternative &alt,
                                   const FeatureStructure &result);
// Sorts, drops duplicate (sense, frame) pairs and assigns ranks.
std::vector<ResolutionResult> finalize(const Lexicon &lex, std::vector<ResolutionResult> results);

}  // namespace caseframe::detail

#endif  // CASEFRAME_SRC_RESOLVE_COMMON_HPP_
