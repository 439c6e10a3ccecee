#include "flowcat/json_io.hpp"

#include <stdexcept>

namespace flowcat {
namespace {

Scalar scalar_from_json(const json& j, Field field) {
  if (j.is_string()) return field.parse_scalar(j.get<std::string>());
  if (j.is_number_integer()) return field.from_int(j.get<long>());
  throw std::invalid_argument("expected a scalar (string or integer), got " + j.dump());
}

json vectors_to_json(const std::vector<FieldVector>& rows) {
  json out = json::array();
  for (const FieldVector& r : rows) {
    json row = json::array();
    for (const Scalar& x : r) row.push_back(x.to_string());
    out.push_back(std::move(row));
  }
  return out;
}

std::vector<FieldVector> vectors_from_json(const json& j, Field field) {
  if (!j.is_array()) throw std::invalid_argument("expected an array of arrays");
  std::vector<FieldVector> out;
  for (const json& row : j) {
    if (!row.is_array()) throw std::invalid_argument("expected an array of scalars");
    FieldVector v;
    for (const json& x : row) v.push_back(scalar_from_json(x, field));
    out.push_back(std::move(v));
  }
  return out;
}

std::size_t size_field(const json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_number_unsigned()) {
    throw std::invalid_argument(std::string("missing or invalid \"") + key + "\"");
  }
  return j.at(key).get<std::size_t>();
}

}  // namespace

json poly_to_json(const LaurentPoly& p) {
  json out = json::array();
  for (int e = p.low_exponent(); !p.is_zero() && e <= p.high_exponent(); ++e) {
    const Scalar c = p.coeff(e);
    if (!c.is_zero()) out.push_back(json::array({e, c.to_string()}));
  }
  return out;
}

LaurentPoly poly_from_json(const json& j, Field field) {
  if (j.is_string()) return LaurentPoly::parse(j.get<std::string>(), field);
  if (!j.is_array()) throw std::invalid_argument("polynomial must be a string or an array of pairs");
  LaurentPoly p(field);
  bool first = true;
  int last = 0;
  for (const json& term : j) {
    if (!term.is_array() || term.size() != 2 || !term[0].is_number_integer()) {
      throw std::invalid_argument("polynomial term must be [exponent, coefficient]");
    }
    const int e = term[0].get<int>();
    if (!first && e <= last) throw std::invalid_argument("polynomial exponents must strictly increase");
    first = false;
    last = e;
    p += LaurentPoly::monomial(scalar_from_json(term[1], field), e);
  }
  return p;
}

json matrix_to_json(const PolyMatrix& m) {
  json entries = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).to_string());
    entries.push_back(std::move(row));
  }
  return json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

PolyMatrix matrix_from_json(const json& j, Field field) {
  const std::size_t rows = size_field(j, "rows");
  const std::size_t cols = size_field(j, "cols");
  const json& entries = j.at("entries");
  if (!entries.is_array() || entries.size() != rows) throw std::invalid_argument("matrix: wrong number of rows");
  PolyMatrix m(field, rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (!entries[i].is_array() || entries[i].size() != cols) {
      throw std::invalid_argument("matrix: row " + std::to_string(i) + " has the wrong length");
    }
    for (std::size_t k = 0; k < cols; ++k) m(i, k) = poly_from_json(entries[i][k], field);
  }
  return m;
}

json corelation_to_json(const Corelation& c) {
  return json{{"m", c.m()}, {"n", c.n()}, {"kernel_rep", matrix_to_json(c.kernel_rep())}};
}

KernelRepJson corelation_from_json(const json& j, Field field) {
  KernelRepJson out{size_field(j, "m"), size_field(j, "n"), matrix_from_json(j.at("kernel_rep"), field)};
  if (out.kernel_rep.cols() != out.m + out.n) throw std::invalid_argument("kernel_rep must have m + n columns");
  return out;
}

json span_to_json(const Span& s) { return json{{"R", matrix_to_json(s.R())}, {"S", matrix_to_json(s.S())}}; }

json report_to_json(const ControllabilityReport& r) {
  return json{{"controllable", r.controllable},
              {"span", span_to_json(r.span)},
              {"controllable_part", corelation_to_json(r.controllable_part)},
              {"obstruction", matrix_to_json(r.obstruction)}};
}

json trace_to_json(const TraceWindow& w) {
  return json{{"t0", w.t0},
              {"t1", w.t1},
              {"u", vectors_to_json(w.u)},
              {"v", vectors_to_json(w.v)},
              {"registers", vectors_to_json(w.registers)}};
}

TraceWindow trace_from_json(const json& j, Field field) {
  TraceWindow w;
  w.u = vectors_from_json(j.at("u"), field);
  w.v = vectors_from_json(j.at("v"), field);
  if (j.contains("registers")) w.registers = vectors_from_json(j.at("registers"), field);
  w.t0 = j.value("t0", 0L);
  w.t1 = j.value("t1", w.t0 + static_cast<long>(w.u.size()) - 1);
  if (w.t1 - w.t0 + 1 != static_cast<long>(w.u.size())) {
    throw std::invalid_argument("trace: t0..t1 does not match the number of ticks");
  }
  return w;
}

}  // namespace flowcat
