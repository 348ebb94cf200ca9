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


// Python bindings. Frames cross the boundary as AVM text; the tree view is
// handed over as a JSON string and decoded on the Python side.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "caseframe/avm.hpp"
#include "caseframe/cli.hpp"
#include "caseframe/lexicon.hpp"
#include "caseframe/resolver.hpp"

namespace py = pybind11;
using namespace caseframe;

namespace {

struct PyLexicon {
  std::shared_ptr<const Lexicon> lex;
};

PyLexicon checked(LoadOutput loaded) {
  if (!loaded.diagnostics.empty()) {
    std::string text;
    for (const auto &d : loaded.diagnostics) text += d.str() + "\n";
    throw py::value_error(text);
  }
  return {std::move(loaded.lexicon)};
}

FeatureStructure frame_of(const PyLexicon &l, const std::string &text) {
  try {
    return read_avm(l.lex->lattice(), text);
  } catch (const ParseError &e) {
    throw py::value_error(e.diagnostic().str());
  }
}

py::dict result_dict(const TypeLattice &lat, const ResolutionResult &r) {
  py::dict d;
  d["sense"] = r.sense;
  d["rank"] = r.rank;
  d["priority"] = r.priority;
  d["specificity"] = r.specificity;
  d["flags"] = r.flags;
  d["avm"] = write_avm(lat, r.frame);
  d["tree"] = write_tree(lat, r.frame).dump();
  return d;
}

py::list results_list(const TypeLattice &lat, const std::vector<ResolutionResult> &rs) {
  py::list out;
  for (const auto &r : rs) out.append(result_dict(lat, r));
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Case-frame lexicon: loading, resolution, generation.";

  py::class_<PyLexicon>(m, "Lexicon")
      .def_static(
          "load", [](const std::vector<std::string> &paths) { return checked(load_files(paths)); },
          py::arg("paths"))
      .def_static(
          "from_source",
          [](const std::string &text, const std::string &name) {
            return checked(load_source(text, name));
          },
          py::arg("text"), py::arg("name") = "<input>")
      .def_property_readonly("senses",
                             [](const PyLexicon &l) {
                               std::vector<std::string> out;
                               for (const auto &s : l.lex->senses()) out.push_back(s.name);
                               return out;
                             })
      .def("resolve",
           [](const PyLexicon &l, const std::string &text, int depth) {
             FeatureStructure in = frame_of(l, text);
             std::vector<ResolutionResult> rs;
             try {
               rs = resolve(*l.lex, in, {depth, false});
             } catch (const DepthLimitError &e) {
               throw py::value_error(e.what());
             }
             return results_list(l.lex->lattice(), rs);
           },
           py::arg("frame"), py::arg("depth") = 4)
      .def("generate",
           [](const PyLexicon &l, const std::string &text) {
             return results_list(l.lex->lattice(), generate(*l.lex, frame_of(l, text)));
           },
           py::arg("query"))
      .def("explain",
           [](const PyLexicon &l, const std::string &text, const std::string &sense) {
             Explanation ex = explain(*l.lex, frame_of(l, text), sense);
             py::list records;
             for (const auto &r : ex.records) {
               py::dict d;
               d["name"] = r.name;
               d["tier"] = r.tier ? py::cast(std::string(to_string(*r.tier))) : py::none();
               d["accepted"] = r.accepted;
               d["failure"] = r.failure ? py::cast(r.failure->describe()) : py::none();
               records.append(d);
             }
             return records;
           },
           py::arg("frame"), py::arg("sense"))
      .def("format", [](const PyLexicon &l, const std::string &text) {
        return write_avm(l.lex->lattice(), frame_of(l, text));
      })
      .def("dsl", [](const PyLexicon &l) { return l.lex->print(); });

  py::register_exception<LookupError>(m, "LookupError", PyExc_KeyError);

  m.def(
      "run_cli",
      [](const std::vector<std::string> &args) {
        std::ostringstream out, err;
        int code = cli::run(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Runs the cfl command line; returns (exit code, stdout, stderr).");
}
