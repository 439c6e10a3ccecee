#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "flowcat/control.hpp"
#include "flowcat/json_io.hpp"
#include "flowcat/opsem.hpp"
#include "flowcat/semantics.hpp"

namespace py = pybind11;
using namespace flowcat;

namespace {

// Values cross the boundary as exact strings ("3/2") or Python ints.
Scalar to_scalar(const py::handle& h, Field field) {
  if (py::isinstance<py::int_>(h)) return field.parse_scalar(py::str(h).cast<std::string>());
  return field.parse_scalar(h.cast<std::string>());
}

std::vector<std::optional<Scalar>> to_tick(const py::handle& side, Field field) {
  std::vector<std::optional<Scalar>> values;
  if (side.is_none()) return values;
  for (const py::handle& x : side) {
    if (x.is_none()) {
      values.emplace_back();
    } else {
      values.emplace_back(to_scalar(x, field));
    }
  }
  return values;
}

std::string simulate_json(const std::string& term, const std::string& field_name, const py::list& init,
                          const py::list& u, const py::list& v, std::size_t steps, bool backward) {
  const Field field = Field::parse(field_name);
  TypedTerm t = typecheck(parse_term(term));
  FieldVector registers;
  for (const py::handle& x : init) registers.push_back(to_scalar(x, field));
  std::vector<TickInput> inputs(std::max(u.size(), v.size()));
  for (std::size_t k = 0; k < u.size(); ++k) inputs[k].u = to_tick(u[k], field);
  for (std::size_t k = 0; k < v.size(); ++k) inputs[k].v = to_tick(v[k], field);
  if (steps == 0) steps = inputs.size();
  std::optional<TraceWindow> w =
      simulate(t, field, registers, inputs, steps, backward ? Direction::backward : Direction::forward);
  return w ? trace_to_json(*w).dump() : std::string("null");
}

}  // namespace

PYBIND11_MODULE(_flowcat, m) {
  m.doc() = "Exact LTI semantics of signal flow terms";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<TypeError>(m, "TermTypeError", PyExc_ValueError);

  m.def(
      "normalize_json",
      [](const std::string& term, const std::string& field) {
        return corelation_to_json(normalize(term, Field::parse(field))).dump();
      },
      py::arg("term"), py::arg("field") = "q");

  m.def(
      "equiv",
      [](const std::string& a, const std::string& b, const std::string& field) {
        const Field f = Field::parse(field);
        Corelation x = normalize(a, f), y = normalize(b, f);
        if (x.m() != y.m() || x.n() != y.n()) throw std::invalid_argument("boundary types differ");
        return behavior_equal(x, y);
      },
      py::arg("lhs"), py::arg("rhs"), py::arg("field") = "q");

  m.def(
      "controllable_json",
      [](const std::string& term, const std::string& field) {
        return report_to_json(is_controllable(normalize(term, Field::parse(field)))).dump();
      },
      py::arg("term"), py::arg("field") = "q");

  m.def("simulate_json", &simulate_json, py::arg("term"), py::arg("field"), py::arg("init"), py::arg("u"),
        py::arg("v"), py::arg("steps"), py::arg("backward"));

  m.def(
      "window_dims",
      [](const std::string& term, std::size_t length, const std::string& field) {
        const Field f = Field::parse(field);
        TypedTerm t = typecheck(parse_term(term));
        Subspace operational = opsem_window_set(t, f, length);
        Subspace denotational = window_behavior(normalize(t.term, f).kernel_rep(), length);
        return py::make_tuple(operational.dim(), denotational.dim(), operational == denotational);
      },
      py::arg("term"), py::arg("length"), py::arg("field") = "q");

  m.def(
      "axioms",
      [](const std::string& field) {
        py::list out;
        for (const AxiomResult& r : axiom_soundness_suite(Field::parse(field))) {
          out.append(py::make_tuple(r.axiom.name, r.axiom.lhs, r.axiom.rhs, r.passed));
        }
        return out;
      },
      py::arg("field") = "q");
}
