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

// Generators and brute-force oracles shared by the test suites and the
// acceptance runner.

#ifndef CASEFRAME_TESTS_TESTKIT_HPP_
#define CASEFRAME_TESTS_TESTKIT_HPP_

#include <filesystem>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "caseframe/feature_structure.hpp"
#include "caseframe/lexicon.hpp"
#include "caseframe/type_lattice.hpp"

namespace testkit {

using caseframe::FeatureStructure;
using caseframe::TypeLattice;

std::filesystem::path source_dir();
std::filesystem::path reference_lexicon_path();
std::filesystem::path manifest_path();
std::string read_text(const std::filesystem::path &path);

// The reference lexicon, loaded once. Aborts the process when it fails to
// load, since nothing else can be checked then.
const caseframe::Lexicon &reference();

// A subtype graph kept outside TypeLattice, so the oracle never reads the
// structures it checks. parents[i] lists indices of the parents of type i;
// index 0 is top.
struct Poset {
  std::vector<std::string> names;
  std::vector<std::vector<int>> parents;

  int add(std::string name, std::vector<int> parents);
  // Reflexive-transitive down set of each type, by index.
  std::vector<std::vector<bool>> down_sets() const;
  bool has_cycle() const;
  TypeLattice build() const;
};

enum class GlbAnswer { none, unique, ambiguous };
struct GlbOracle {
  GlbAnswer answer = GlbAnswer::none;
  int type = -1;
};

// Maximal common lower bounds, found by scanning every type.
GlbOracle brute_glb(const std::vector<std::vector<bool>> &down, int a, int b);

// Same oracle read off a built lattice's parent lists.
Poset poset_of(const TypeLattice &lattice);

// Random bounded-complete poset with at most max_types types besides top.
Poset random_valid_poset(std::mt19937 &rng, int max_types);

// Invalid posets: even i gets a subtype cycle, odd i two types with two
// incomparable maximal common subtypes.
Poset invalid_poset(std::mt19937 &rng, int i);

// Small signature for the algebra properties: multiple inheritance, atoms,
// features with value types, and one type constraint.
const TypeLattice &algebra_lattice();

// Random well-formed structure of at most max_nodes nodes.
FeatureStructure random_structure(std::mt19937 &rng, const TypeLattice &lattice, int max_nodes);

// True when the node graph has no directed cycle (checked without relying
// on canonical numbering).
bool acyclic(const FeatureStructure &fs);

// Random partially specified frame over the reference lexicon, as AVM text.
std::string random_frame_text(std::mt19937 &rng, int depth = 1);

// Random frame that compiles against the reference lexicon.
FeatureStructure random_frame(std::mt19937 &rng);

}  // namespace testkit

#endif  // CASEFRAME_TESTS_TESTKIT_HPP_
