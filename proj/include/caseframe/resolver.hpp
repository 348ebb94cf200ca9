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

#ifndef CASEFRAME_RESOLVER_HPP_
#define CASEFRAME_RESOLVER_HPP_

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "caseframe/feature_structure.hpp"
#include "caseframe/lexicon.hpp"
#include "caseframe/unify.hpp"

namespace caseframe {

inline constexpr std::string_view kUnmarkedStemFlag = "relied-on-unmarked-stem";

struct TraceRecord {
  std::string name;
  std::optional<Tier> tier;  // empty for the semantics record
  bool accepted = true;
  std::optional<UnifyFailure> failure;
};

struct ResolutionResult {
  std::string sense;
  int rank = 0;
  int priority = 0;
  int specificity = 0;
  FeatureStructure frame;
  std::vector<TraceRecord> trace;
  std::vector<std::string> flags;
};

class DepthLimitError : public std::runtime_error {
 public:
  explicit DepthLimitError(FeaturePath path);
  const FeaturePath &path() const { return path_; }

 private:
  FeaturePath path_;
};

struct ResolveOptions {
  int depth_limit = 4;
  bool trace = false;
};

// All readings of a partially specified frame, ranked. Embedded clauses
// are resolved first; each of their readings is tried in the outer frame.
// Throws DepthLimitError when clauses nest deeper than depth_limit, and
// std::invalid_argument when the input is not a case frame.
std::vector<ResolutionResult> resolve(const Lexicon &lex, const FeatureStructure &input,
                                      const ResolveOptions &options = {});

// Brute-force reference for resolve: no stem index, every sense conjunction
// rebuilt from its parts for every candidate.
std::vector<ResolutionResult> resolve_oracle(const Lexicon &lex, const FeatureStructure &input,
                                             int depth_limit = 4);

// Most general frames of the senses whose semantics agree with the query.
// The query is either a semantics fragment or a whole frame.
std::vector<ResolutionResult> generate(const Lexicon &lex, const FeatureStructure &query);

struct Explanation {
  std::string sense;
  std::vector<TraceRecord> records;
  bool accepted() const;
};

// Per-constraint trace of one sense against the input. Throws LookupError
// for an unknown sense.
Explanation explain(const Lexicon &lex, const FeatureStructure &input, std::string_view sense);

// The sort key shared by resolve and generate.
bool rank_before(const ResolutionResult &a, const std::string &a_text, const ResolutionResult &b,
                 const std::string &b_text);

}  // namespace caseframe

#endif  // CASEFRAME_RESOLVER_HPP_
