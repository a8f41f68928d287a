#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "aldlf/afw.hpp"
#include "aldlf/game.hpp"
#include "aldlf/json_io.hpp"
#include "aldlf/nfw.hpp"
#include "aldlf/oracle.hpp"
#include "aldlf/parser.hpp"
#include "aldlf/printer.hpp"
#include "aldlf/sat.hpp"

namespace py = pybind11;

namespace {

struct PyFormula {
  aldlf::FormulaPtr f;
};

struct PyTrace {
  aldlf::Trace t;
};

struct PyAfw {
  aldlf::Afw a;
};

aldlf::SearchLimits make_limits(long max_states, int max_len) {
  aldlf::SearchLimits limits;
  limits.max_states = max_states;
  limits.max_len = max_len;
  return limits;
}

}  // namespace

PYBIND11_MODULE(_aldlf, m) {
  m.doc() = "linear dynamic logic on finite traces with path automata";

  py::register_exception<aldlf::ParseError>(m, "FormulaParseError");
  py::register_exception<aldlf::SearchLimitExceeded>(m, "SearchLimitError");

  py::class_<PyFormula>(m, "Formula")
      .def("__str__",
           [](const PyFormula& self) {
             return aldlf::print_formula(self.f).text;
           })
      .def("__eq__",
           [](const PyFormula& self, const PyFormula& other) {
             return aldlf::equal(self.f, other.f);
           })
      .def("size",
           [](const PyFormula& self) { return aldlf::formula_size(self.f); })
      .def("is_nnf",
           [](const PyFormula& self) { return aldlf::is_nnf(self.f); })
      .def("to_nnf",
           [](const PyFormula& self) {
             return PyFormula{aldlf::to_nnf(self.f)};
           })
      .def("closure_size", [](const PyFormula& self) {
        return aldlf::fischer_ladner_closure(self.f).size();
      });

  py::class_<PyTrace>(m, "Trace")
      .def("__str__",
           [](const PyTrace& self) { return aldlf::format_trace(self.t); })
      .def("__len__", [](const PyTrace& self) { return self.t.length(); })
      .def("instants", [](const PyTrace& self) {
        std::vector<std::vector<std::string>> out;
        for (const auto& i : self.t.instants()) out.push_back(i.atoms());
        return out;
      });

  py::class_<PyAfw>(m, "Afw")
      .def_property_readonly(
          "num_states", [](const PyAfw& self) { return self.a.num_states(); })
      .def_property_readonly("state_names",
                             [](const PyAfw& self) { return self.a.state_names; })
      .def("accepts",
           [](const PyAfw& self, const PyTrace& w, int pos) {
             return aldlf::accepts_game(self.a, w.t, pos);
           },
           py::arg("trace"), py::arg("pos") = 0)
      .def("nfw_accepts",
           [](const PyAfw& self, const PyTrace& w) {
             return aldlf::nfw_accepts(self.a, w.t);
           },
           py::arg("trace"))
      .def("to_dot", [](const PyAfw& self) { return aldlf::afw_to_dot(self.a); })
      .def("to_json",
           [](const PyAfw& self) { return aldlf::afw_to_json(self.a); });

  m.def(
      "parse_formula",
      [](const std::string& text, const std::string& defs_text) {
        aldlf::AutomatonDefs defs;
        if (!defs_text.empty()) defs = aldlf::parse_defs(defs_text);
        return PyFormula{aldlf::parse_formula(text, defs)};
      },
      py::arg("text"), py::arg("defs") = std::string());
  m.def("parse_ltlf", [](const std::string& text) {
    return PyFormula{aldlf::ltlf_to_aldlf(aldlf::parse_ltlf(text))};
  });
  m.def("parse_trace", [](const std::string& text) {
    return PyTrace{aldlf::parse_trace(text)};
  });
  m.def(
      "evaluate",
      [](const PyFormula& f, const PyTrace& t, int pos) {
        return aldlf::eval(f.f, t.t, pos);
      },
      py::arg("formula"), py::arg("trace"), py::arg("pos") = 0);
  m.def("compile_formula", [](const PyFormula& f) {
    return PyAfw{aldlf::compile_formula(aldlf::to_nnf(f.f))};
  });
  m.def(
      "is_satisfiable",
      [](const PyFormula& f, long max_states,
         int max_len) -> std::optional<PyTrace> {
        aldlf::SatResult res =
            aldlf::is_satisfiable(f.f, make_limits(max_states, max_len));
        if (!res.satisfiable()) return std::nullopt;
        return PyTrace{*res.witness};
      },
      py::arg("formula"), py::arg("max_states") = 250000,
      py::arg("max_len") = 64);
  m.def(
      "equivalence",
      [](const PyFormula& f, const PyFormula& g, long max_states,
         int max_len) {
        aldlf::EquivResult res =
            aldlf::equivalence(f.f, g.f, make_limits(max_states, max_len));
        std::optional<PyTrace> cex;
        if (res.counterexample) cex = PyTrace{*res.counterexample};
        return std::make_pair(res.equivalent, cex);
      },
      py::arg("formula"), py::arg("other"), py::arg("max_states") = 250000,
      py::arg("max_len") = 64);
}
