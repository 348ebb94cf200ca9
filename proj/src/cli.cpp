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

#include "caseframe/cli.hpp"

#include <algorithm>
#include <fstream>
#include <future>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "caseframe/avm.hpp"
#include "json.hpp"

namespace caseframe::cli {

namespace {

struct Options {
  std::vector<std::string> lexicons;
  std::string format = "avm";
  int depth = 4;
  bool rank1 = false;
  bool trace = false;
  bool dsl = false;
  std::string sense;
  std::string inline_text;
  std::vector<std::string> inputs;
};

struct Input {
  std::string name;
  std::string text;
};

// Output of one input file.
struct Outcome {
  int status = kOk;
  std::string out;
  std::string err;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error(path + ": error: cannot read file");
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

std::vector<Input> gather_inputs(const Options &opt) {
  std::vector<Input> out;
  for (const auto &path : opt.inputs) out.push_back({path, read_file(path)});
  if (!opt.inline_text.empty()) out.push_back({"<inline>", opt.inline_text});
  if (out.empty()) throw UsageError("no input: pass frame files or --inline");
  return out;
}

std::shared_ptr<const Lexicon> load_lexicon(const Options &opt, std::ostream &err) {
  if (opt.lexicons.empty()) throw UsageError("at least one --lexicon is required");
  LoadOutput loaded = load_files(opt.lexicons);
  for (const auto &d : loaded.diagnostics) err << d.str() << "\n";
  return loaded.lexicon;
}

nlohmann::json result_tree(const TypeLattice &lattice, const ResolutionResult &r, bool trace) {
  nlohmann::json j;
  j["rank"] = r.rank;
  j["sense"] = r.sense;
  j["priority"] = r.priority;
  j["specificity"] = r.specificity;
  j["flags"] = r.flags;
  j["frame"] = write_tree(lattice, r.frame);
  if (trace) {
    nlohmann::json records = nlohmann::json::array();
    for (const auto &t : r.trace) {
      records.push_back({{"name", t.name},
                         {"tier", t.tier ? std::string(to_string(*t.tier)) : "semantics"},
                         {"accepted", t.accepted}});
    }
    j["trace"] = records;
  }
  return j;
}

std::string render(const Options &opt, const TypeLattice &lattice,
                   std::vector<ResolutionResult> results) {
  if (opt.rank1 && results.size() > 1) results.resize(1);
  if (opt.format == "tree") {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto &r : results) arr.push_back(result_tree(lattice, r, opt.trace));
    return arr.dump(2) + "\n";
  }
  return format_results(lattice, results, opt.trace);
}

// Runs fn over every input, concurrently when there are several, and
// prints the outcomes in input order.
template <typename Fn>
int batch(const Options &opt, const std::vector<Input> &inputs, Fn fn, std::ostream &out,
          std::ostream &err) {
  std::vector<Outcome> outcomes(inputs.size());
  if (inputs.size() == 1) {
    outcomes[0] = fn(inputs[0]);
  } else {
    std::vector<std::future<Outcome>> pending;
    for (const auto &in : inputs) pending.push_back(std::async(std::launch::async, fn, in));
    for (std::size_t i = 0; i < pending.size(); ++i) outcomes[i] = pending[i].get();
  }
  int status = kOk;
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    const auto &o = outcomes[i];
    if (inputs.size() > 1 && opt.format == "avm") {
      if (i > 0) out << "\n";
      out << "; file: " << inputs[i].name << "\n";
    }
    out << o.out;
    err << o.err;
    if (o.status == kError || (o.status == kNoResults && status == kOk)) status = o.status;
  }
  return status;
}

int cmd_resolve(const Options &opt, std::ostream &out, std::ostream &err) {
  auto lex = load_lexicon(opt, err);
  if (!lex) return kError;
  auto inputs = gather_inputs(opt);
  auto fn = [&](const Input &in) {
    Outcome o;
    try {
      FeatureStructure frame = read_avm(lex->lattice(), in.text, in.name);
      auto results = resolve(*lex, frame, {opt.depth, opt.trace});
      if (results.empty()) {
        o.status = kNoResults;
        o.err = in.name + ": no sense matches\n";
      }
      o.out = render(opt, lex->lattice(), std::move(results));
    } catch (const ParseError &e) {
      o = {kError, "", e.diagnostic().str() + "\n"};
    } catch (const std::exception &e) {
      o = {kError, "", in.name + ": error: " + e.what() + "\n"};
    }
    return o;
  };
  return batch(opt, inputs, fn, out, err);
}

int cmd_generate(const Options &opt, std::ostream &out, std::ostream &err) {
  auto lex = load_lexicon(opt, err);
  if (!lex) return kError;
  auto inputs = gather_inputs(opt);
  auto fn = [&](const Input &in) {
    Outcome o;
    try {
      FeatureStructure query = read_avm(lex->lattice(), in.text, in.name);
      auto results = generate(*lex, query);
      if (results.empty()) {
        o.status = kNoResults;
        o.err = in.name + ": no sense matches the query\n";
      }
      o.out = render(opt, lex->lattice(), std::move(results));
    } catch (const ParseError &e) {
      o = {kError, "", e.diagnostic().str() + "\n"};
    } catch (const std::exception &e) {
      o = {kError, "", in.name + ": error: " + e.what() + "\n"};
    }
    return o;
  };
  return batch(opt, inputs, fn, out, err);
}

int cmd_validate(const Options &opt, std::ostream &out, std::ostream &err) {
  if (opt.lexicons.empty()) throw UsageError("at least one --lexicon is required");
  LoadOutput loaded = load_files(opt.lexicons);
  for (const auto &d : loaded.diagnostics) err << d.str() << "\n";
  out << loaded.diagnostics.size() << " diagnostics\n";
  return loaded.lexicon ? kOk : kError;
}

int cmd_explain(const Options &opt, std::ostream &out, std::ostream &err) {
  if (opt.sense.empty()) throw UsageError("explain needs --sense NAME");
  auto lex = load_lexicon(opt, err);
  if (!lex) return kError;
  auto inputs = gather_inputs(opt);
  if (inputs.size() != 1) throw UsageError("explain takes exactly one frame");
  Explanation ex;
  try {
    ex = explain(*lex, read_avm(lex->lattice(), inputs[0].text, inputs[0].name), opt.sense);
  } catch (const ParseError &e) {
    err << e.diagnostic().str() << "\n";
    return kError;
  } catch (const std::exception &e) {
    err << inputs[0].name << ": error: " << e.what() << "\n";
    return kError;
  }
  if (opt.format == "tree") {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto &r : ex.records) {
      nlohmann::json j = {{"name", r.name},
                          {"tier", r.tier ? std::string(to_string(*r.tier)) : "semantics"},
                          {"accepted", r.accepted}};
      if (r.failure) {
        j["path"] = to_string(r.failure->path);
        j["left"] = r.failure->left;
        j["right"] = r.failure->right;
        j["reason"] = std::string(to_string(r.failure->reason));
      }
      arr.push_back(j);
    }
    out << nlohmann::json{{"sense", ex.sense}, {"records", arr}}.dump(2) << "\n";
  } else {
    out << "; explain " << ex.sense << "\n";
    for (const auto &r : ex.records) {
      out << (r.accepted ? "accept " : "fail ") << r.name << " ("
          << (r.tier ? std::string(to_string(*r.tier)) : "semantics") << ")";
      if (r.failure) out << ": " << r.failure->describe();
      out << "\n";
    }
  }
  return ex.accepted() ? kOk : kNoResults;
}

void collect_symbols(const AvmTerm &term, std::set<std::string> &types,
                     std::set<std::string> &features) {
  if (term.kind == AvmTerm::Kind::symbol || (term.kind == AvmTerm::Kind::bracket && !term.text.empty())) {
    types.insert(term.text);
  }
  for (const auto &f : term.features) {
    features.insert(f.name);
    collect_symbols(f.value.front(), types, features);
  }
}

// A flat lattice admitting exactly the symbols of one frame, for printing
// without a lexicon.
TypeLattice permissive_lattice(const AvmTerm &term) {
  std::set<std::string> types, features;
  collect_symbols(term, types, features);
  TypeLattice::Builder b;
  for (const auto &t : types) {
    if (t != "top" && t != "string") b.add_type(t);
  }
  for (const auto &f : features) b.declare_feature("top", f, "top");
  return b.build();
}

int cmd_print(const Options &opt, std::ostream &out, std::ostream &err) {
  std::shared_ptr<const Lexicon> lex;
  if (!opt.lexicons.empty()) {
    lex = load_lexicon(opt, err);
    if (!lex) return kError;
    if (opt.dsl) {
      out << lex->print();
      return kOk;
    }
  } else if (opt.dsl) {
    throw UsageError("--dsl needs --lexicon");
  }
  auto inputs = gather_inputs(opt);
  auto fn = [&](const Input &in) {
    Outcome o;
    try {
      AvmTerm term = parse_avm_term(in.text, in.name);
      std::optional<TypeLattice> flat;
      if (!lex) flat = permissive_lattice(term);
      const TypeLattice &lat = lex ? lex->lattice() : *flat;
      FeatureStructure fs = compile_avm(lat, term);
      o.out = opt.format == "tree" ? write_tree(lat, fs).dump(2) + "\n" : write_avm(lat, fs);
    } catch (const ParseError &e) {
      o = {kError, "", e.diagnostic().str() + "\n"};
    }
    return o;
  };
  return batch(opt, inputs, fn, out, err);
}

}  // namespace

std::string format_result(const TypeLattice &lattice, const ResolutionResult &result,
                          bool trace) {
  std::string out = "; rank " + std::to_string(result.rank) + ": " + result.sense +
                    " priority=" + std::to_string(result.priority) +
                    " specificity=" + std::to_string(result.specificity);
  if (!result.flags.empty()) {
    out += " flags=";
    for (std::size_t i = 0; i < result.flags.size(); ++i) {
      out += (i ? "," : "") + result.flags[i];
    }
  }
  out += "\n";
  if (trace) {
    for (const auto &t : result.trace) {
      out += std::string(";   ") + (t.accepted ? "accept " : "fail ") + t.name + " (" +
             (t.tier ? std::string(to_string(*t.tier)) : "semantics") + ")\n";
    }
  }
  return out + write_avm(lattice, result.frame);
}

std::string format_results(const TypeLattice &lattice,
                           const std::vector<ResolutionResult> &results, bool trace) {
  std::string out;
  for (std::size_t i = 0; i < results.size(); ++i) {
    if (i) out += "\n";
    out += format_result(lattice, results[i], trace);
  }
  return out;
}

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
  Options opt;
  CLI::App app{"Resolve Turkish case frames against a constraint-based lexicon.", "cfl"};
  app.require_subcommand(1, 1);
  app.add_option("--lexicon", opt.lexicons, "lexicon file (repeatable)")->allow_extra_args(false);
  app.add_option("--format", opt.format, "output format")->check(CLI::IsMember({"avm", "tree"}));
  app.add_option("--depth", opt.depth, "embedded clause depth limit")->check(CLI::PositiveNumber);
  app.add_flag("--rank1", opt.rank1, "print only the best reading");
  app.add_flag("--trace", opt.trace, "list the constraints behind each reading");
  app.add_option("--sense", opt.sense, "sense to explain");
  app.add_option("--inline", opt.inline_text, "frame text instead of a file");
  app.add_flag("--dsl", opt.dsl, "print: dump the loaded lexicon as DSL text");

  const std::pair<const char *, const char *> commands[] = {
      {"resolve", "rank the senses matching each frame"},
      {"generate", "most general frames for a semantic query"},
      {"validate", "load the lexicon and report diagnostics"},
      {"explain", "per-constraint trace of one sense against a frame"},
      {"print", "re-serialize frames canonically"},
  };
  for (const auto &[name, help] : commands) {
    auto *sub = app.add_subcommand(name, help);
    sub->fallthrough();
    sub->add_option("inputs", opt.inputs, "frame or query files");
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp &) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError &e) {
    err << "cfl: " << e.what() << "\n";
    return kError;
  }

  std::string command = app.get_subcommands().front()->get_name();
  try {
    if (command == "resolve") return cmd_resolve(opt, out, err);
    if (command == "generate") return cmd_generate(opt, out, err);
    if (command == "validate") return cmd_validate(opt, out, err);
    if (command == "explain") return cmd_explain(opt, out, err);
    return cmd_print(opt, out, err);
  } catch (const UsageError &e) {
    err << "cfl: " << e.what() << "\n";
    return kError;
  } catch (const std::exception &e) {
    err << e.what() << "\n";
    return kError;
  }
}

}  // namespace caseframe::cli
