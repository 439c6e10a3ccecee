#include "flowcat/control.hpp"

#include <stdexcept>

namespace flowcat {

Span pullback_span(const Corelation& x) {
  PolyMatrix k = kernel_basis(hstack(x.A(), -x.B()));
  return Span(k.row_range(0, x.m()), k.row_range(x.m(), x.m() + x.n()));
}

Corelation controllable_part(const Corelation& x) { return corelation_of(span_pushout(pullback_span(x))); }

ControllabilityReport is_controllable(const Corelation& x) {
  Span span = pullback_span(x);
  Corelation part = corelation_of(span_pushout(span));
  // The controllable part is always a sub-behaviour, so this solve succeeds.
  std::optional<PolyMatrix> comparison = solve_left(part.kernel_rep(), x.kernel_rep());
  if (!comparison) throw std::logic_error("controllable part is not contained in the behaviour");
  const bool controllable = behavior_equal(part, x);
  return ControllabilityReport{controllable, std::move(span), std::move(part), std::move(*comparison)};
}

Sufficient invertible_leg_shortcut(const Cospan& c) {
  return is_invertible(c.A()) || is_invertible(c.B()) ? Sufficient::holds : Sufficient::unknown;
}

Sufficient composite_controllable_sufficient(const Span& b, const Span& c) {
  if (b.n() != c.m()) {
    throw std::invalid_argument("composite_controllable_sufficient: boundary mismatch (" +
                                std::to_string(b.n()) + " vs " + std::to_string(c.m()) + ")");
  }
  Corelation middle = corelation_of(Cospan(b.S(), c.R()));
  return is_controllable(middle).controllable ? Sufficient::holds : Sufficient::unknown;
}

bool siso_gcd_check(const PolyMatrix& kernel_row) {
  if (kernel_row.rows() != 1 || kernel_row.cols() != 2) {
    throw std::invalid_argument("siso_gcd_check expects a 1x2 matrix, got " +
                                std::to_string(kernel_row.rows()) + "x" + std::to_string(kernel_row.cols()));
  }
  const LaurentPoly& a = kernel_row(0, 0);
  const LaurentPoly& b = kernel_row(0, 1);
  // The zero row constrains nothing: the full behaviour is controllable.
  if (a.is_zero() && b.is_zero()) return true;
  return gcd_ext(a, b).gcd.is_unit();
}

PolyMatrix siso_interconnection_kernel(const LaurentPoly& b1, const LaurentPoly& b2,
                                       const LaurentPoly& c1, const LaurentPoly& c2) {
  const Field field = b1.field();
  if (b1.is_zero() && b2.is_zero()) throw ObservabilityError("B1 and B2 are both zero");
  if (c1.is_zero() && c2.is_zero()) throw ObservabilityError("C1 and C2 are both zero");
  if (!gcd_ext(b1, b2).gcd.is_unit()) throw ObservabilityError("gcd(B1, B2) is not a unit");
  if (!gcd_ext(c1, c2).gcd.is_unit()) throw ObservabilityError("gcd(C1, C2) is not a unit");

  // With B1 = C2 = 0 the interconnection is {(0, 0)}, which needs two rows.
  if (b1.is_zero() && c2.is_zero()) {
    throw std::invalid_argument("B1 = C2 = 0: the interconnection has no single-row kernel");
  }
  LaurentPoly g = gcd_ext(b1, c2).gcd;
  LaurentPoly b1_rest = *exact_divide(b1, g);
  LaurentPoly c2_rest = *exact_divide(c2, g);
  PolyMatrix row(field, 1, 2);
  row(0, 0) = c2_rest * b2;
  row(0, 1) = -(b1_rest * c1);
  return row;
}

}  // namespace flowcat
