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

#ifndef CASEFRAME_DIAGNOSTICS_HPP_
#define CASEFRAME_DIAGNOSTICS_HPP_

#include <stdexcept>
#include <string>
#include <vector>

namespace caseframe {

struct SourcePos {
  std::string file;
  int line = 0;
  int col = 0;
};

struct Diagnostic {
  enum class Severity { error, warning };
  SourcePos pos;
  Severity severity = Severity::error;
  std::string message;

  // file:line:col: severity: message
  std::string str() const;
};

// A single positioned error raised while reading text.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(Diagnostic diag);
  const Diagnostic &diagnostic() const { return diag_; }

 private:
  Diagnostic diag_;
};

}  // namespace caseframe

#endif  // CASEFRAME_DIAGNOSTICS_HPP_
