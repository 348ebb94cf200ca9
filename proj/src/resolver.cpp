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

#include "caseframe/resolver.hpp"

#include <algorithm>
#include <map>

#include "caseframe/avm.hpp"
#include "resolve_common.hpp"

namespace caseframe {

DepthLimitError::DepthLimitError(FeaturePath path)
    : std::runtime_error("embedded clauses nest too deeply at " +
                         (path.empty() ? std::string("the top frame") : to_string(path))),
      path_(std::move(path)) {}

bool Explanation::accepted() const {
  return std::all_of(records.begin(), records.end(),
                     [](const TraceRecord &r) { return r.accepted; });
}

bool rank_before(const ResolutionResult &a, const std::string &a_text, const ResolutionResult &b,
                 const std::string &b_text) {
  if (a.priority != b.priority) return a.priority > b.priority;
  if (a.specificity != b.specificity) return a.specificity > b.specificity;
  if (a.sense != b.sense) return a.sense < b.sense;
  return a_text < b_text;
}

namespace detail {

FeatureStructure as_frame(const Lexicon &lex, const FeatureStructure &input) {
  const TypeLattice &lat = lex.lattice();
  UnifyResult r = unify(lat, input, make(lat, lex.frame_type(), {}));
  if (!r) throw std::invalid_argument("input is not a case frame: " + r.failure().describe());
  return std::move(r.value());
}

std::vector<FeaturePath> embedded_clauses(const Lexicon &lex, const FeatureStructure &frame) {
  std::vector<FeaturePath> out;
  auto args = frame.child(frame.root(), "ARGUMENTS");
  if (!args) return out;
  for (const auto &arc : frame.node(*args).arcs) {
    if (lex.lattice().is_subtype(frame.node(arc.target).type, lex.frame_type())) {
      out.push_back({"ARGUMENTS", arc.feature});
    }
  }
  return out;
}

std::vector<MarkedHead> marked_heads(const Lexicon &lex, const FeatureStructure &frame) {
  std::vector<MarkedHead> out;
  auto args = frame.child(frame.root(), "ARGUMENTS");
  if (!args) return out;
  for (const auto &arc : frame.node(*args).arcs) {
    auto head = frame.child(arc.target, "HEAD");
    if (!head) continue;
    auto stem = frame.child(*head, "STEM");
    if (!stem || !frame.node(*stem).literal) continue;
    MarkedHead h;
    h.path = {"ARGUMENTS", arc.feature, "HEAD"};
    h.stem = *frame.node(*stem).literal;
    h.markers = lex.ontology().sem_of(h.stem);
    out.push_back(std::move(h));
  }
  return out;
}

std::vector<Alternative> marker_alternatives(const Lexicon &lex, const FeatureStructure &frame) {
  const TypeLattice &lat = lex.lattice();
  std::vector<Alternative> alts{{frame, {}}};
  for (const auto &head : marked_heads(lex, frame)) {
    if (head.markers.empty()) {
      for (auto &alt : alts) alt.unmarked.push_back(head.path);
      continue;
    }
    FeaturePath sem_path = head.path;
    sem_path.push_back("SEM");
    std::vector<Alternative> next;
    for (const auto &alt : alts) {
      for (TypeId marker : head.markers) {
        FeatureStructure enrichment =
            make(lat, kTopType, {{sem_path, Value::of_type(lat.name(marker))}});
        UnifyResult r = unify(lat, alt.frame, enrichment);
        if (r) next.push_back({std::move(r.value()), alt.unmarked});
      }
    }
    alts = std::move(next);
  }
  return alts;
}

std::vector<std::string> flags_for(const Lexicon &lex, const Alternative &alt,
                                   const FeatureStructure &result) {
  const TypeLattice &lat = lex.lattice();
  for (const auto &path : alt.unmarked) {
    FeaturePath sem_path = path;
    sem_path.push_back("SEM");
    auto before = alt.frame.get(sem_path);
    auto after = result.get(sem_path);
    if (!after) continue;
    TypeId was = before ? alt.frame.node(*before).type : kTopType;
    TypeId now = result.node(*after).type;
    if (was != now && lat.is_subtype(now, was)) {
      if (auto sem = lat.find("sem"); !sem || now != *sem) {
        return {std::string(kUnmarkedStemFlag)};
      }
    }
  }
  return {};
}

std::vector<ResolutionResult> finalize(const Lexicon &lex, std::vector<ResolutionResult> results) {
  std::vector<std::pair<std::string, ResolutionResult>> keyed;
  keyed.reserve(results.size());
  for (auto &r : results) {
    std::string text = write_avm(lex.lattice(), r.frame);
    keyed.emplace_back(std::move(text), std::move(r));
  }
  std::sort(keyed.begin(), keyed.end(), [](const auto &a, const auto &b) {
    return rank_before(a.second, a.first, b.second, b.first);
  });
  std::vector<ResolutionResult> out;
  for (std::size_t i = 0; i < keyed.size(); ++i) {
    if (i > 0 && keyed[i].first == keyed[i - 1].first &&
        keyed[i].second.sense == keyed[i - 1].second.sense) {
      // Same reading reached through different marker or clause choices.
      auto &flags = out.back().flags;
      if (flags.empty()) continue;
      if (keyed[i].second.flags.empty()) flags.clear();
      continue;
    }
    out.push_back(std::move(keyed[i].second));
    out.back().rank = static_cast<int>(out.size());
  }
  return out;
}

}  // namespace detail

namespace {

using detail::Alternative;

class Resolver {
 public:
  Resolver(const Lexicon &lex, const ResolveOptions &options) : lex_(lex), options_(options) {
    const auto &senses = lex.senses();
    for (std::size_t i = 0; i < senses.size(); ++i) {
      const FeatureStructure &c = senses[i].conjunction;
      auto stem = c.get({"VERB", "STEM"});
      if (stem && c.node(*stem).literal) {
        by_stem_[*c.node(*stem).literal].push_back(i);
      } else {
        any_stem_.push_back(i);
      }
    }
  }

  std::vector<ResolutionResult> run(const FeatureStructure &input) {
    return detail::finalize(lex_, resolve_frame(detail::as_frame(lex_, input), 1, {}));
  }

 private:
  std::vector<std::size_t> candidates(const FeatureStructure &frame) const {
    auto stem = frame.get({"VERB", "STEM"});
    if (!stem || !frame.node(*stem).literal) {
      std::vector<std::size_t> all(lex_.senses().size());
      for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
      return all;
    }
    std::vector<std::size_t> out = any_stem_;
    if (auto it = by_stem_.find(*frame.node(*stem).literal); it != by_stem_.end()) {
      out.insert(out.end(), it->second.begin(), it->second.end());
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  std::vector<ResolutionResult> resolve_frame(const FeatureStructure &frame, int depth,
                                              const FeaturePath &at) {
    if (depth > options_.depth_limit) throw DepthLimitError(at);
    const TypeLattice &lat = lex_.lattice();
    std::vector<FeatureStructure> bases{frame};
    for (const auto &path : detail::embedded_clauses(lex_, frame)) {
      FeaturePath full = at;
      full.insert(full.end(), path.begin(), path.end());
      auto inner = resolve_frame(frame.subgraph(*frame.get(path)), depth + 1, full);
      std::vector<FeatureStructure> next;
      for (const auto &base : bases) {
        for (const auto &reading : inner) {
          UnifyResult placed = embed(lat, path, reading.frame);
          if (!placed) continue;
          UnifyResult r = unify(lat, base, placed.value());
          if (r) next.push_back(std::move(r.value()));
        }
      }
      bases = std::move(next);
    }
    std::vector<ResolutionResult> out;
    for (const auto &base : bases) {
      for (const auto &alt : detail::marker_alternatives(lex_, base)) {
        for (std::size_t i : candidates(alt.frame)) {
          const SenseDef &sense = lex_.senses()[i];
          UnifyResult r = unify(lat, alt.frame, sense.conjunction);
          if (!r) continue;
          ResolutionResult res;
          res.sense = sense.name;
          res.priority = sense.priority;
          res.specificity = sense.specificity;
          res.flags = detail::flags_for(lex_, alt, r.value());
          res.frame = std::move(r.value());
          if (options_.trace) {
            for (const auto &c : sense.constraints) {
              res.trace.push_back({c->name, c->tier, true, std::nullopt});
            }
            res.trace.push_back({sense.semantics->name, std::nullopt, true, std::nullopt});
          }
          out.push_back(std::move(res));
        }
      }
    }
    return out;
  }

  const Lexicon &lex_;
  ResolveOptions options_;
  std::map<std::string, std::vector<std::size_t>> by_stem_;
  std::vector<std::size_t> any_stem_;
};

}  // namespace

std::vector<ResolutionResult> resolve(const Lexicon &lex, const FeatureStructure &input,
                                      const ResolveOptions &options) {
  if (options.depth_limit < 1) throw std::invalid_argument("depth limit must be at least 1");
  return Resolver(lex, options).run(input);
}

std::vector<ResolutionResult> generate(const Lexicon &lex, const FeatureStructure &query) {
  const TypeLattice &lat = lex.lattice();
  FeatureStructure frame = query;
  auto semantics = lat.find("semantics");
  if (semantics && lat.is_subtype(query.node(query.root()).type, *semantics)) {
    UnifyResult placed = embed(lat, {"SEMANTICS"}, query);
    if (!placed) return {};
    frame = std::move(placed.value());
  }
  std::vector<ResolutionResult> out;
  for (const auto &sense : lex.senses()) {
    UnifyResult r = unify(lat, sense.conjunction, frame);
    if (!r) continue;
    ResolutionResult res;
    res.sense = sense.name;
    res.priority = sense.priority;
    res.specificity = sense.specificity;
    res.frame = std::move(r.value());
    out.push_back(std::move(res));
  }
  return detail::finalize(lex, std::move(out));
}

Explanation explain(const Lexicon &lex, const FeatureStructure &input, std::string_view name) {
  const SenseDef *sense = lex.sense(name);
  if (!sense) throw LookupError("unknown sense `" + std::string(name) + "`");
  const TypeLattice &lat = lex.lattice();
  FeatureStructure frame = detail::as_frame(lex, input);
  auto alts = detail::marker_alternatives(lex, frame);
  if (alts.empty()) alts.push_back({frame, {}});
  FeatureStructure base = make(lat, lex.wf_frame_type(), {});

  std::optional<Explanation> best;
  std::size_t best_accepts = 0;
  for (const auto &alt : alts) {
    Explanation ex;
    ex.sense = sense->name;
    std::size_t accepts = 0;
    UnifyResult start = unify(lat, alt.frame, base);
    FeatureStructure acc = start ? start.value() : alt.frame;
    auto step = [&](const std::string &what, std::optional<Tier> tier,
                    const FeatureStructure &body) {
      UnifyResult r = unify(lat, acc, body);
      if (r) {
        acc = std::move(r.value());
        ++accepts;
        ex.records.push_back({what, tier, true, std::nullopt});
      } else {
        ex.records.push_back({what, tier, false, r.failure()});
      }
    };
    for (const auto &c : sense->constraints) step(c->name, c->tier, c->body);
    step(sense->semantics->name, std::nullopt, sense->semantics->body);
    if (!best || accepts > best_accepts) {
      best = std::move(ex);
      best_accepts = accepts;
    }
  }
  return std::move(*best);
}

}  // namespace caseframe
