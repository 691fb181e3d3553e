// Python bindings. Structured results cross the boundary as JSON text and
// are decoded on the Python side, so exact rationals stay exact strings.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "braidcable/acceptance.hpp"
#include "braidcable/json_io.hpp"

namespace py = pybind11;
using namespace braidcable;

namespace {

BraidWord word(int n, const std::vector<int>& letters) { return BraidWord(n, letters); }

std::string eval_json(const std::string& rep, int n, const std::vector<int>& letters, int series_order) {
  const LaurentMatrix m = eval_word(parse_rep_descriptor(rep, n), word(n, letters));
  if (series_order > 0) return to_json(to_series(m, static_cast<std::size_t>(series_order))).dump();
  return to_json(m).dump();
}

std::string decompose_json(int n, int r, bool infinitesimal, bool emit_intertwiner) {
  const DecompositionReport rep =
      infinitesimal ? verify_infinitesimal_decomposition(n, r) : verify_global_decomposition(n, r);
  return to_json(rep, emit_intertwiner).dump();
}

std::string acceptance_json() {
  json out = json::array();
  for (const auto& r : run_acceptance()) {
    out.push_back({{"id", r.id}, {"name", r.name}, {"passed", r.passed}, {"seconds", r.seconds},
                   {"budget_seconds", r.budget_seconds}, {"detail", r.detail}});
  }
  return out.dump();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact Burau and cabling computations on braid groups";
  py::register_exception<SingularMatrix>(m, "SingularMatrix", PyExc_ArithmeticError);

  m.def("cable_word", [](int n, int r, const std::vector<int>& letters) {
    return cable_word(word(n, letters), r).letters();
  }, py::arg("n"), py::arg("r"), py::arg("letters"));
  m.def("bigelow_element", [] { return bigelow_element().letters(); });
  m.def("underlying_permutation", [](int n, const std::vector<int>& letters) {
    return underlying_permutation(word(n, letters));
  }, py::arg("n"), py::arg("letters"));
  m.def("linking_numbers", [](int n, const std::vector<int>& letters) {
    return linking_numbers(word(n, letters));
  }, py::arg("n"), py::arg("letters"));
  m.def("artin_action_is_trivial", [](int n, const std::vector<int>& letters) {
    return artin_action_is_trivial(word(n, letters));
  }, py::arg("n"), py::arg("letters"));

  m.def("eval_json", &eval_json, py::arg("rep"), py::arg("n"), py::arg("letters"), py::arg("series_order") = 0);
  m.def("decompose_json", &decompose_json, py::arg("n"), py::arg("r"), py::arg("infinitesimal") = false,
        py::arg("emit_intertwiner") = false);
  m.def("kernel_json", [](int n, int r, const std::vector<int>& letters) {
    return to_json(kernel_equivalence_check(word(n, letters), r)).dump();
  }, py::arg("n"), py::arg("r"), py::arg("letters"));
  m.def("determinant_consistency", &determinant_consistency, py::arg("n"), py::arg("r"));
  m.def("commutant_dimension", [](const std::string& rep, int n) {
    return commutant_dimension(parse_rep_descriptor(rep, n));
  }, py::arg("rep"), py::arg("n"));
  m.def("framing_criterion_holds", &framing_criterion_holds, py::arg("n"), py::arg("r"));
  m.def("acceptance_json", &acceptance_json);
}
