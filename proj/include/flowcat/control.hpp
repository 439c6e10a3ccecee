#pragma once

#include "flowcat/semantics.hpp"

namespace flowcat {

struct ControllabilityReport {
  bool controllable = false;
  /// Pullback of the corelation's legs; its behaviour is the controllable part.
  Span span;
  Corelation controllable_part;
  /// X with X * kernel_rep(controllable_part) = kernel_rep(input): the map from
  /// the pushout of the pullback back to the original system. Invertible
  /// exactly when the system is controllable.
  PolyMatrix obstruction;
};

/// [R; S] is a kernel basis of [A | -B], split into its m- and n-blocks.
Span pullback_span(const Corelation& x);

/// The maximal controllable sub-behaviour: pushout of the pullback span, normalized.
Corelation controllable_part(const Corelation& x);

/// Primary decision procedure: controllable iff the pullback/pushout round
/// trip leaves the behaviour unchanged.
ControllabilityReport is_controllable(const Corelation& x);

enum class Sufficient { holds, unknown };

/// Holds if either leg of the cospan is invertible.
Sufficient invertible_leg_shortcut(const Cospan& c);

/// For spans b: m <- d -> n and c: n <- e -> l, holds if the middle cospan
/// d --b.S--> n <--c.R-- e is controllable, which implies the composite is.
/// Throws std::invalid_argument if b.n() != c.m().
Sufficient composite_controllable_sufficient(const Span& b, const Span& c);

/// Controllability of a single-row, two-column kernel representation: the
/// gcd of the entries is a unit. Throws std::invalid_argument on other shapes.
bool siso_gcd_check(const PolyMatrix& kernel_row);

/// Thrown when a SISO image representation is not observable.
class ObservabilityError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Eliminated kernel row [C2' B2, -B1' C1] of the interconnection of the SISO
/// spans (B1, B2) and (C1, C2), where G = gcd(B1, C2), B1 = G B1', C2 = G C2'.
/// Requires gcd(B1, B2) and gcd(C1, C2) to be units.
PolyMatrix siso_interconnection_kernel(const LaurentPoly& b1, const LaurentPoly& b2,
                                       const LaurentPoly& c1, const LaurentPoly& c2);

}  // namespace flowcat
