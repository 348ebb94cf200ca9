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

// Deliberately naive: shares nothing with resolver.cpp beyond unification
// and the lexicon's raw definitions.

#include <algorithm>
#include <tuple>

#include "caseframe/avm.hpp"
#include "caseframe/resolver.hpp"

namespace caseframe {

namespace {

struct Candidate {
  ResolutionResult result;
  std::string text;
};

class Oracle {
 public:
  Oracle(const Lexicon &lex, int depth_limit) : lex_(lex), lat_(lex.lattice()), limit_(depth_limit) {}

  std::vector<ResolutionResult> run(const FeatureStructure &input) {
    UnifyResult typed = unify(lat_, make(lat_, lex_.frame_type(), {}), input);
    if (!typed) throw std::invalid_argument("input is not a case frame");
    std::vector<Candidate> all;
    for (auto &r : readings(typed.value(), 1, {})) {
      std::string text = write_avm(lat_, r.frame);
      all.push_back({std::move(r), std::move(text)});
    }
    std::stable_sort(all.begin(), all.end(), [](const Candidate &a, const Candidate &b) {
      return std::make_tuple(-a.result.priority, -a.result.specificity, a.result.sense, a.text) <
             std::make_tuple(-b.result.priority, -b.result.specificity, b.result.sense, b.text);
    });
    std::vector<ResolutionResult> out;
    std::vector<const Candidate *> kept;
    for (const auto &c : all) {
      auto same = std::find_if(kept.begin(), kept.end(), [&](const Candidate *k) {
        return k->result.sense == c.result.sense && k->result.frame == c.result.frame;
      });
      if (same != kept.end()) {
        auto &flags = out[static_cast<std::size_t>(same - kept.begin())].flags;
        if (c.result.flags.empty()) flags.clear();
        continue;
      }
      kept.push_back(&c);
      out.push_back(c.result);
      out.back().rank = static_cast<int>(out.size());
    }
    return out;
  }

 private:
  FeatureStructure conjunction(const SenseDef &sense) const {
    FeatureStructure acc = make(lat_, lex_.wf_frame_type(), {});
    for (const auto &c : sense.constraints) acc = unify(lat_, acc, c->body).value();
    return unify(lat_, acc, sense.semantics->body).value();
  }

  std::vector<ResolutionResult> readings(const FeatureStructure &frame, int depth,
                                         const FeaturePath &at) {
    if (depth > limit_) throw DepthLimitError(at);

    // Every combination of embedded readings, built as a cartesian product.
    std::vector<std::pair<FeaturePath, std::vector<ResolutionResult>>> clauses;
    auto args = frame.get({"ARGUMENTS"});
    if (args) {
      for (const auto &arc : frame.node(*args).arcs) {
        if (!lat_.is_subtype(frame.node(arc.target).type, lex_.frame_type())) continue;
        FeaturePath sub = at;
        sub.push_back("ARGUMENTS");
        sub.push_back(arc.feature);
        clauses.push_back({{"ARGUMENTS", arc.feature},
                           readings(frame.subgraph(arc.target), depth + 1, sub)});
      }
    }
    std::vector<FeatureStructure> grounded;
    std::vector<std::size_t> pick(clauses.size(), 0);
    bool any_empty = std::any_of(clauses.begin(), clauses.end(),
                                 [](const auto &c) { return c.second.empty(); });
    while (!any_empty) {
      std::optional<FeatureStructure> cur = frame;
      for (std::size_t k = 0; k < clauses.size() && cur; ++k) {
        const FeaturePath &path = clauses[k].first;
        UnifyResult placed = embed(lat_, path, clauses[k].second[pick[k]].frame);
        UnifyResult r = placed ? unify(lat_, *cur, placed.value()) : placed;
        if (r) {
          cur = std::move(r.value());
        } else {
          cur.reset();
        }
      }
      if (cur) grounded.push_back(std::move(*cur));
      std::size_t k = 0;
      while (k < pick.size() && ++pick[k] == clauses[k].second.size()) pick[k++] = 0;
      if (k == pick.size()) break;
    }

    std::vector<ResolutionResult> out;
    for (const auto &g : grounded) {
      // Heads with a literal stem, and their marker choices.
      std::vector<std::pair<FeaturePath, std::vector<TypeId>>> heads;
      if (auto a = g.get({"ARGUMENTS"})) {
        for (const auto &arc : g.node(*a).arcs) {
          auto stem = g.get({"ARGUMENTS", arc.feature, "HEAD", "STEM"});
          if (!stem || !g.node(*stem).literal) continue;
          heads.push_back({{"ARGUMENTS", arc.feature, "HEAD", "SEM"},
                           lex_.ontology().sem_of(*g.node(*stem).literal)});
        }
      }
      std::vector<std::size_t> choice(heads.size(), 0);
      while (true) {
        std::vector<Assignment> sems;
        std::vector<FeaturePath> unmarked;
        for (std::size_t k = 0; k < heads.size(); ++k) {
          if (heads[k].second.empty()) {
            unmarked.push_back(heads[k].first);
          } else {
            sems.push_back({heads[k].first, Value::of_type(lat_.name(heads[k].second[choice[k]]))});
          }
        }
        std::optional<FeatureStructure> alt;
        if (sems.empty()) {
          alt = g;
        } else if (UnifyResult r = unify(lat_, g, make(lat_, kTopType, sems))) {
          alt = std::move(r.value());
        }
        if (alt) {
          for (const auto &sense : lex_.senses()) {
            UnifyResult r = unify(lat_, *alt, conjunction(sense));
            if (!r) continue;
            ResolutionResult res;
            res.sense = sense.name;
            res.priority = sense.priority;
            res.specificity = sense.specificity;
            for (const auto &p : unmarked) {
              auto before = alt->get(p);
              auto after = r.value().get(p);
              TypeId was = before ? alt->node(*before).type : kTopType;
              TypeId now = after ? r.value().node(*after).type : was;
              bool narrowed = now != was && lat_.name(now) != "sem";
              if (narrowed && res.flags.empty()) res.flags.emplace_back(kUnmarkedStemFlag);
            }
            res.frame = std::move(r.value());
            out.push_back(std::move(res));
          }
        }
        std::size_t k = 0;
        while (k < choice.size() && ++choice[k] >= std::max<std::size_t>(heads[k].second.size(), 1)) {
          choice[k++] = 0;
        }
        if (k == choice.size()) break;
      }
    }
    return out;
  }

  const Lexicon &lex_;
  const TypeLattice &lat_;
  int limit_;
};

}  // namespace

std::vector<ResolutionResult> resolve_oracle(const Lexicon &lex, const FeatureStructure &input,
                                             int depth_limit) {
  if (depth_limit < 1) throw std::invalid_argument("depth limit must be at least 1");
  return Oracle(lex, depth_limit).run(input);
}

}  // namespace caseframe
