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

#ifndef CASEFRAME_CLI_HPP_
#define CASEFRAME_CLI_HPP_

#include <ostream>
#include <string>
#include <vector>

#include "caseframe/resolver.hpp"

namespace caseframe::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kNoResults = 1;
inline constexpr int kError = 2;

// Runs `cfl` with args (without the program name). Results go to out,
// diagnostics to err.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

// One ranked result as printed by `resolve` and stored in golden files:
//   ; rank 1: SENSE-EAT1 priority=0 specificity=5
//   [wf-case-frame ...]
std::string format_result(const TypeLattice &lattice, const ResolutionResult &result,
                          bool trace = false);

// Results joined by blank lines.
std::string format_results(const TypeLattice &lattice,
                           const std::vector<ResolutionResult> &results, bool trace = false);

}  // namespace caseframe::cli

#endif  // CASEFRAME_CLI_HPP_
