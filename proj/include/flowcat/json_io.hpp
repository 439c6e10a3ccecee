#pragma once

#include <json.hpp>

#include "flowcat/control.hpp"
#include "flowcat/opsem.hpp"
#include "flowcat/semantics.hpp"

namespace flowcat {

using json = nlohmann::json;

/// Array of [exponent, "num/den"] pairs with increasing exponents.
json poly_to_json(const LaurentPoly& p);
/// Accepts the pair array or a string in the textual syntax.
LaurentPoly poly_from_json(const json& j, Field field);

/// {"rows": r, "cols": c, "entries": [[text, ...], ...]}.
json matrix_to_json(const PolyMatrix& m);
PolyMatrix matrix_from_json(const json& j, Field field);

/// {"m": m, "n": n, "kernel_rep": matrix}.
json corelation_to_json(const Corelation& c);

struct KernelRepJson {
  std::size_t m = 0, n = 0;
  PolyMatrix kernel_rep;
};
KernelRepJson corelation_from_json(const json& j, Field field);

json span_to_json(const Span& s);
json report_to_json(const ControllabilityReport& r);

/// {"t0", "t1", "u", "v", "registers"}; values are strings.
json trace_to_json(const TraceWindow& w);
/// Values may be strings or integers.
TraceWindow trace_from_json(const json& j, Field field);

}  // namespace flowcat
