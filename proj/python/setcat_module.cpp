/* Copyright 2026 The setcat Authors

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "setcat/czf.hpp"
#include "setcat/parser.hpp"
#include "setcat/pullback.hpp"
#include "setcat/vset.hpp"

namespace py = pybind11;

namespace {

// A set universe with a fixed atom table; all text goes through the surface
// language and comes back in canonical form.
class Universe {
 public:
  explicit Universe(const std::string& atoms) : table_(setcat::AtomTable::parse(atoms)) {}

  setcat::VSet value(const std::string& text) const {
    setcat::Env env;
    return setcat::eval_term(*setcat::parse_term(text), env, table_);
  }

  std::string eval(const std::string& text) const {
    return setcat::canonical_text(value(text), table_);
  }

  bool check(const std::string& text) const {
    setcat::Env env;
    return setcat::eval_formula(*setcat::parse_formula(text), env, table_);
  }

  bool equal(const std::string& a, const std::string& b) const {
    return setcat::vset_equal(value(a), value(b), table_);
  }

  bool member(const std::string& a, const std::string& b) const {
    return setcat::vset_member(value(a), value(b), table_);
  }

  std::size_t rank(const std::string& text) const { return setcat::vset_rank(value(text)); }

  std::pair<bool, std::string> axiom_suite(std::size_t rank, std::size_t breadth,
                                           std::size_t omega_steps) const {
    setcat::AxiomSuiteConfig config;
    config.rank = rank;
    config.breadth = breadth;
    config.atoms = table_;
    config.omega_steps = omega_steps;
    setcat::CheckReport report = setcat::run_axiom_suite(config);
    return {report.all_passed(), report.to_text()};
  }

  std::pair<bool, std::string> category_report(
      const std::vector<std::string>& slice_texts) const {
    setcat::CheckReport report =
        setcat::check_category(setcat::internal_set_category(slice(slice_texts)).cat);
    return {report.all_passed(), report.to_text()};
  }

  std::pair<bool, std::string> iso_report(
      const std::vector<std::string>& slice_texts) const {
    setcat::CheckReport report = setcat::check_main_iso(slice(slice_texts));
    return {report.all_passed(), report.to_text()};
  }

 private:
  setcat::VSlice slice(const std::vector<std::string>& texts) const {
    setcat::VSlice s;
    s.table = table_;
    for (const std::string& t : texts) s.objects.push_back(value(t));
    return s;
  }

  setcat::AtomTable table_;
};

std::pair<bool, std::string> pullback_report(const std::string& preset,
                                             std::size_t depth) {
  setcat::StagedUniverse su(setcat::base_preset(preset), depth);
  setcat::FamilyCategory fc = setcat::family_category(su.omega());
  setcat::CheckReport report = setcat::pullback_suite(su, fc);
  return {report.all_passed(), report.to_text()};
}

}  // namespace

PYBIND11_MODULE(pysetcat, m) {
  m.doc() = "finite iterative sets, setoid families and their categories";

  py::register_exception<setcat::Error>(m, "SetcatError");

  py::class_<Universe>(m, "Universe")
      .def(py::init<const std::string&>(), py::arg("atoms") = "")
      .def("eval", &Universe::eval, py::arg("term"),
           "evaluate a term, return its canonical form")
      .def("check", &Universe::check, py::arg("formula"),
           "decide a closed bounded formula")
      .def("equal", &Universe::equal, py::arg("a"), py::arg("b"))
      .def("member", &Universe::member, py::arg("a"), py::arg("b"))
      .def("rank", &Universe::rank, py::arg("term"))
      .def("axiom_suite", &Universe::axiom_suite, py::arg("rank") = 2,
           py::arg("breadth") = 2, py::arg("omega_steps") = 3,
           "run the axiom checks; returns (passed, report)")
      .def("category_report", &Universe::category_report, py::arg("slice"),
           "check the category of sets over a slice; returns (passed, report)")
      .def("iso_report", &Universe::iso_report, py::arg("slice"),
           "check the isomorphism of the two categories; returns (passed, report)");

  m.def("pullback_report", &pullback_report, py::arg("preset") = "discrete2",
        py::arg("depth") = 1,
        "verify chosen pullbacks over a staged universe; returns (passed, report)");
  m.def("presets", [] { return setcat::preset_names(); });
}
