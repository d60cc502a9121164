#include "fdq/cli.hpp"
#include "fdq/errors.hpp"
#include "fdq/lattice_constants.hpp"
#include "fdq/parabolic_levi.hpp"
#include "fdq/verifier.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;

namespace {

py::tuple run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code;
  {
    py::gil_scoped_release release;
    code = fdq::run_cli(args, out, err);
  }
  return py::make_tuple(code, out.str(), err.str());
}

std::string semisimple_evaluation(const std::string& group, const std::string& remove, int j,
                                  const std::vector<int>& coroot) {
  const fdq::RootDatum d = fdq::builtin_datum(group);
  const fdq::LeviData levi = fdq::levi_data(d.system, fdq::parse_simple_root(d.system, remove));
  return fdq::to_string(fdq::semisimple_evaluation(d.system, levi, j, coroot));
}

py::tuple structure_constants(const std::string& group, const std::string& remove) {
  const fdq::RootDatum d = fdq::builtin_datum(group);
  const auto sc = fdq::structure_constants(d, fdq::parse_simple_root(d.system, remove));
  return py::make_tuple(sc.chi, fdq::to_long(sc.chi_pairing), fdq::to_long(sc.m_idx));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Formal degree quotient toolkit";
  py::register_exception<fdq::InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<fdq::StructureError>(m, "StructureError", PyExc_ValueError);
  m.def("run_cli", &run_cli, py::arg("args"), "Run the command line tool; returns (exit code, stdout, stderr).");
  m.def("semisimple_evaluation", &semisimple_evaluation, py::arg("group"), py::arg("remove"), py::arg("j"),
        py::arg("coroot"), "Exponent e with coroot(s_lambda) = q^e, as a string.");
  m.def("structure_constants", &structure_constants, py::arg("group"), py::arg("remove"),
        "(chi, <chi, alpha^vee>, m) for a builtin group and removed simple root.");
}
