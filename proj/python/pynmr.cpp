#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>
#include <string>
#include <tuple>

#include "nmr/cli.hpp"
#include "nmr/defaults.hpp"
#include "nmr/errors.hpp"
#include "nmr/semantics.hpp"
#include "nmr/syntax.hpp"

namespace py = pybind11;
using namespace nmr;

namespace {

using Outcome = std::tuple<int, std::string, std::string>;

TruthFunction truth_of(const std::string& name) {
  if (name == "kleene") return TruthFunction::kleene;
  if (name == "sv") return TruthFunction::supervaluation;
  throw py::value_error("truth must be 'kleene' or 'sv'");
}

std::optional<cli::Logic> logic_of(const std::optional<std::string>& name) {
  if (!name) return std::nullopt;
  if (*name == "ael") return cli::Logic::ael;
  if (*name == "dl") return cli::Logic::dl;
  throw py::value_error("logic must be 'ael' or 'dl'");
}

SemanticsKind kind_of(const std::string& name) {
  if (name == "kk") return SemanticsKind::kripke_kleene;
  if (name == "expansion") return SemanticsKind::expansion;
  if (name == "stable") return SemanticsKind::stable;
  if (name == "wf") return SemanticsKind::well_founded;
  throw py::value_error("semantics must be one of kk, expansion, stable, wf");
}

std::vector<std::string> worlds_of(const Vocabulary& v, const WorldSet& s) {
  std::vector<std::string> out;
  s.for_each([&](World w) { out.push_back(format_world(v, w)); });
  return out;
}

Outcome solve_file(const std::string& input, const std::string& semantics, const std::string& truth,
              const std::optional<std::string>& logic, bool json, bool trace, std::size_t max_atoms) {
  cli::SolveRequest req;
  req.input = input;
  req.semantics = semantics;
  req.truth = truth_of(truth);
  req.logic = logic_of(logic);
  req.json = json;
  req.trace = trace;
  req.max_atoms = max_atoms;
  std::ostringstream out, err;
  const int code = cli::run_solve(req, out, err);
  return {code, out.str(), err.str()};
}

Outcome translate(const std::string& input) {
  std::ostringstream out, err;
  const int code = cli::run_translate(input, out, err);
  return {code, out.str(), err.str()};
}

Outcome check(const std::string& input, const std::string& truth, const std::optional<std::string>& logic,
              std::size_t oracle_atoms) {
  cli::CheckRequest req;
  req.input = input;
  req.truth = truth_of(truth);
  req.logic = logic_of(logic);
  req.oracle_atoms = oracle_atoms;
  std::ostringstream out, err;
  const int code = cli::run_check(req, out, err);
  return {code, out.str(), err.str()};
}

py::list solve_text(const std::string& text, const std::string& semantics, const std::string& truth) {
  const Theory t = parse_theory(text);
  const SemanticsResult r = nmr::solve(OperatorContext(t, truth_of(truth)), kind_of(semantics));
  py::list out;
  for (const auto& s : r.results) {
    py::dict d;
    d["pp"] = worlds_of(t.vocabulary, s.pp());
    d["cp"] = worlds_of(t.vocabulary, s.cp());
    d["total"] = s.is_total();
    out.append(d);
  }
  return out;
}

py::list reiter_text(const std::string& text) {
  const DefaultTheory dt = parse_default_theory(text);
  py::list out;
  for (const auto& e : reiter_extensions(dt)) out.append(worlds_of(dt.vocabulary, e));
  return out;
}

}  // namespace

PYBIND11_MODULE(_pynmr, m) {
  m.doc() = "Nonmonotonic reasoning solver";
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<ResourceCapError>(m, "ResourceCapError", PyExc_RuntimeError);
  m.def("run_solve", &solve_file, py::arg("input"), py::arg("semantics") = "wf", py::arg("truth") = "kleene",
        py::arg("logic") = py::none(), py::arg("json") = true, py::arg("trace") = false,
        py::arg("max_atoms") = kDefaultMaxAtoms);
  m.def("run_translate", &translate, py::arg("input"));
  m.def("run_check", &check, py::arg("input"), py::arg("truth") = "kleene", py::arg("logic") = py::none(),
        py::arg("oracle_atoms") = 4);
  m.def("solve_text", &solve_text, py::arg("text"), py::arg("semantics") = "wf", py::arg("truth") = "kleene");
  m.def("reiter_text", &reiter_text, py::arg("text"));
}
