#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>

namespace flowcat {

class Scalar;

/// The coefficient field k: either the rationals or Z/pZ for a prime p.
class Field {
 public:
  Field() = default;

  static Field rationals() { return Field{}; }
  /// Throws std::invalid_argument unless p is prime (and fits in 62 bits).
  static Field prime(std::uint64_t p);
  /// Accepts "q", "Q", "zp:<p>" or "Zp:<p>".
  static Field parse(std::string_view text);

  bool is_rational() const { return modulus_ == 0; }
  std::uint64_t characteristic() const { return modulus_; }

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(long value) const;
  Scalar from_rational(const mpq_class& value) const;
  /// Parses "int" or "int/int"; over Z/p the value is reduced.
  Scalar parse_scalar(std::string_view text) const;

  std::string to_string() const;

  bool operator==(const Field&) const = default;

 private:
  explicit Field(std::uint64_t modulus) : modulus_(modulus) {}
  std::uint64_t modulus_ = 0;
};

/// An element of a Field. Rationals are kept in lowest terms with positive
/// denominator (GMP canonical form); residues live in [0, p).
class Scalar {
 public:
  Scalar() : value_(mpq_class(0)) {}

  const Field& field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;

  Scalar operator+(const Scalar& other) const;
  Scalar operator-(const Scalar& other) const;
  Scalar operator*(const Scalar& other) const;
  Scalar operator/(const Scalar& other) const;
  Scalar operator-() const;
  Scalar& operator+=(const Scalar& other) { return *this = *this + other; }
  Scalar& operator-=(const Scalar& other) { return *this = *this - other; }
  Scalar& operator*=(const Scalar& other) { return *this = *this * other; }

  /// Throws std::domain_error on zero.
  Scalar inverse() const;

  bool operator==(const Scalar& other) const;

  /// True for rationals < 0; residues are never negative.
  bool is_negative() const;
  Scalar abs() const;

  /// Rational value; residues are returned as their representative in [0, p).
  mpq_class to_rational() const;
  std::string to_string() const;

 private:
  friend class Field;
  Scalar(Field field, std::uint64_t residue) : field_(field), value_(residue) {}
  Scalar(Field field, mpq_class value) : field_(field), value_(std::move(value)) {}

  void require_same_field(const Scalar& other) const;
  std::uint64_t residue() const { return std::get<std::uint64_t>(value_); }
  const mpq_class& rational() const { return std::get<mpq_class>(value_); }

  Field field_;
  std::variant<std::uint64_t, mpq_class> value_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);
std::ostream& operator<<(std::ostream& os, const Field& f);

/// Parses "int" or "int/int" (optional leading '-') as an exact rational.
/// Throws std::invalid_argument on malformed text or a zero denominator.
mpq_class parse_rational(std::string_view text);

}  // namespace flowcat
