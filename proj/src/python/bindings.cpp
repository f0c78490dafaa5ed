// Copyright 2026 The qsuper Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Python bindings. Structured values cross the boundary as JSON text; the
// qsuper package turns them into dicts.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "qsuper/errors.hpp"
#include "qsuper/io.hpp"
#include "qsuper/laurent.hpp"
#include "qsuper/render.hpp"
#include "qsuper/seed.hpp"
#include "qsuper/survey.hpp"

namespace py = pybind11;
using namespace qsuper;

namespace {

CompatMode mode_or(const std::string& mode, const std::optional<CompatMode>& fallback) {
  if (mode.empty()) return fallback.value_or(CompatMode::Strict);
  return compat_mode_from_string(mode);
}

QuantumSeed seed_from_text(const std::string& text, const std::string& mode) {
  const io::Json doc = io::parse_text(text);
  if (doc.is_object() && doc.contains("vars")) {
    QuantumSeed s = io::seed_from_json(doc);
    if (!mode.empty()) s.mode = compat_mode_from_string(mode);
    const CompatReport r = check_compatible(s.quiver, s.lambda_cur, s.mode);
    if (!r.ok) throw Incompatible(r);
    return s;
  }
  const io::SeedInput in = io::input_from_json(doc);
  return initial_seed(in.quiver, in.lambda, mode_or(mode, in.mode));
}

int zero_based(const QuantumSeed& s, int vertex) {
  if (vertex < 1 || vertex > s.quiver.n + s.quiver.m) throw MalformedInput("vertex " + std::to_string(vertex) + " out of range");
  return vertex - 1;
}

std::vector<std::string> rendered(const QuantumSeed& s, const std::string& format) {
  const RenderFormat fmt = render_format_from_string(format);
  std::vector<std::string> out;
  for (const auto& v : s.vars) out.push_back(render(s.lambda_init, v, fmt));
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact quantum super-seed mutation";

  auto base = py::register_exception<Error>(m, "Error");
  py::register_exception<MalformedInput>(m, "MalformedInput", base.ptr());
  py::register_exception<Incompatible>(m, "Incompatible", base.ptr());
  py::register_exception<NotAllowed>(m, "NotAllowed", base.ptr());
  py::register_exception<MutationOnFrozen>(m, "MutationOnFrozen", base.ptr());
  py::register_exception<NotDivisible>(m, "NotDivisible", base.ptr());

  py::class_<QuantumSeed>(m, "Seed")
      .def(py::init(&seed_from_text), py::arg("text"), py::arg("mode") = "",
           "Build from an input pair or a saved state, both as JSON text.")
      .def_property_readonly("n", [](const QuantumSeed& s) { return s.quiver.n; })
      .def_property_readonly("m", [](const QuantumSeed& s) { return s.quiver.m; })
      .def_property_readonly("mutable", [](const QuantumSeed& s) { return s.quiver.l; })
      .def_property_readonly("frozen", &QuantumSeed::frozen)
      .def("mutate", [](const QuantumSeed& s, int v) { return mutate_seed(s, zero_based(s, v)); }, py::arg("vertex"),
           "Mutation at a 1-based vertex; returns a new seed.")
      .def("is_allowed", [](const QuantumSeed& s, int v) { return is_allowed_def(s.quiver, zero_based(s, v)); })
      .def("is_allowed_lemma", [](const QuantumSeed& s, int v) { return is_allowed_lemma(s.quiver, zero_based(s, v)); })
      .def("variables", &rendered, py::arg("format") = "pretty")
      .def("to_json", [](const QuantumSeed& s) { return io::dump(io::to_json(s)); })
      .def("__eq__", [](const QuantumSeed& a, const QuantumSeed& b) { return a == b; });

  m.def(
      "validate",
      [](const std::string& text, const std::string& mode) {
        const io::SeedInput in = io::input_from_json(io::parse_text(text));
        return io::dump(io::to_json(check_compatible(in.quiver, in.lambda, mode_or(mode, in.mode)), in.quiver.n));
      },
      py::arg("text"), py::arg("mode") = "");

  m.def(
      "laurent_check",
      [](const QuantumSeed& s, const std::vector<int>& seq) {
        std::vector<int> zb;
        for (int v : seq) zb.push_back(v - 1);
        return io::dump(io::to_json(laurent_certify(s, zb)));
      },
      py::arg("seed"), py::arg("sequence"));

  m.def(
      "allowedness_survey",
      [](int max_n, int max_m, int max_mult) {
        py::gil_scoped_release nogil;
        const AllowednessSurvey s = survey_allowedness(max_n, max_m, max_mult);
        const io::Json doc = {{"quivers", s.quivers},
                              {"checks", s.checks},
                              {"allowed_by_definition", s.allowed_by_definition},
                              {"allowed_by_lemma", s.allowed_by_lemma},
                              {"disagreement_count", s.disagreements.size()}};
        return io::dump(doc);
      },
      py::arg("max_n") = 3, py::arg("max_m") = 2, py::arg("max_multiplicity") = 2);
}
