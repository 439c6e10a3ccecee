#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "flowcat/scalar.hpp"

namespace flowcat {

/// An element of k[s, s^-1].
///
/// Stored densely as a lowest exponent plus the coefficient run up to the
/// highest exponent. The first and last stored coefficients are nonzero; the
/// zero polynomial stores nothing. This is a canonical form, so structural
/// equality is ring equality.
class LaurentPoly {
 public:
  /// Zero over the rationals.
  LaurentPoly() = default;
  explicit LaurentPoly(Field field) : field_(field) {}
  /// The constant c.
  explicit LaurentPoly(const Scalar& c);

  static LaurentPoly zero(Field field) { return LaurentPoly(field); }
  static LaurentPoly one(Field field) { return LaurentPoly(field.one()); }
  static LaurentPoly constant(Field field, long c) { return LaurentPoly(field.from_int(c)); }
  /// c * s^exponent.
  static LaurentPoly monomial(const Scalar& c, int exponent);
  /// s^exponent.
  static LaurentPoly s_power(Field field, int exponent);
  /// coeffs[i] is the coefficient of s^(low + i).
  static LaurentPoly from_coeffs(Field field, int low, std::vector<Scalar> coeffs);
  /// Parses the textual syntax, e.g. "3/2*s^-1 + s^2 - 1".
  static LaurentPoly parse(std::string_view text, Field field);

  const Field& field() const { return field_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// Units of k[s, s^-1] are exactly the nonzero monomials a*s^k.
  bool is_unit() const { return coeffs_.size() == 1; }
  bool is_one() const { return is_unit() && low_ == 0 && coeffs_.front().is_one(); }

  /// Lowest/highest exponent with a nonzero coefficient. Undefined for zero.
  int low_exponent() const { return low_; }
  int high_exponent() const { return low_ + static_cast<int>(coeffs_.size()) - 1; }
  /// Euclidean norm: high - low exponent. Zero for units; 0 for the zero polynomial too.
  std::size_t span() const { return coeffs_.empty() ? 0 : coeffs_.size() - 1; }
  Scalar coeff(int exponent) const;
  /// Coefficient of the highest exponent.
  const Scalar& leading_coeff() const { return coeffs_.back(); }
  const Scalar& trailing_coeff() const { return coeffs_.front(); }
  const std::vector<Scalar>& coeffs() const { return coeffs_; }

  /// Multiplication by s^k.
  LaurentPoly shifted(int k) const;
  /// Inverse of a unit; throws std::domain_error otherwise.
  LaurentPoly unit_inverse() const;

  LaurentPoly operator+(const LaurentPoly& other) const;
  LaurentPoly operator-(const LaurentPoly& other) const;
  LaurentPoly operator*(const LaurentPoly& other) const;
  LaurentPoly operator*(const Scalar& c) const;
  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& other) { return *this = *this + other; }
  LaurentPoly& operator-=(const LaurentPoly& other) { return *this = *this - other; }
  LaurentPoly& operator*=(const LaurentPoly& other) { return *this = *this * other; }

  bool operator==(const LaurentPoly& other) const;

  /// Descending-exponent text, e.g. "s^2 - 1", "3/2*s^-1".
  std::string to_string() const;

 private:
  void trim();
  void require_same_field(const LaurentPoly& other) const;

  Field field_;
  int low_ = 0;
  std::vector<Scalar> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p);

struct DivRem {
  LaurentPoly quotient;
  LaurentPoly remainder;
};

/// a = q*b + r with r = 0 or span(r) < span(b). Throws std::domain_error if b = 0.
DivRem divrem(const LaurentPoly& a, const LaurentPoly& b);

/// The quotient a / b when b divides a, std::nullopt otherwise. b must be nonzero.
std::optional<LaurentPoly> exact_divide(const LaurentPoly& a, const LaurentPoly& b);

bool divides(const LaurentPoly& b, const LaurentPoly& a);

struct AssociateSplit {
  LaurentPoly unit;  ///< a*s^k
  LaurentPoly rep;   ///< monic ordinary polynomial with nonzero constant term
};

/// p = unit * rep with rep the canonical associate. Throws std::domain_error on zero.
AssociateSplit canonical_associate(const LaurentPoly& p);

/// Shorthand for canonical_associate(p).rep; zero maps to zero.
LaurentPoly normalize_associate(const LaurentPoly& p);

struct ExtendedGcd {
  LaurentPoly gcd;  ///< canonical associate
  LaurentPoly x;
  LaurentPoly y;    ///< x*a + y*b = gcd
};

/// Throws std::domain_error if both inputs are zero.
ExtendedGcd gcd_ext(const LaurentPoly& a, const LaurentPoly& b);

/// Canonical representative of a modulo the ideal (m), m nonzero: the unique
/// r with a - r in (m) whose exponents lie in [0, span(m)). Zero if m is a unit.
LaurentPoly reduce_mod(const LaurentPoly& a, const LaurentPoly& m);

}  // namespace flowcat
