#include "flowcat/scalar.hpp"

#include <charconv>
#include <ostream>
#include <stdexcept>

namespace flowcat {
namespace {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
  std::uint64_t result = 1 % p;
  base %= p;
  while (exp > 0) {
    if (exp & 1U) result = mul_mod(result, base, p);
    base = mul_mod(base, base, p);
    exp >>= 1U;
  }
  return result;
}

std::uint64_t reduce_mpz(const mpz_class& z, std::uint64_t p) {
  mpz_class r = z % mpz_class(std::to_string(p));
  if (r < 0) r += mpz_class(std::to_string(p));
  return std::stoull(r.get_str());
}

}  // namespace

Field Field::prime(std::uint64_t p) {
  if (p >= (std::uint64_t{1} << 62U) || !is_prime(p)) {
    throw std::invalid_argument("field modulus must be a prime below 2^62, got " +
                                std::to_string(p));
  }
  return Field{p};
}

Field Field::parse(std::string_view text) {
  if (text == "q" || text == "Q") return rationals();
  for (std::string_view prefix : {"zp:", "Zp:", "ZP:"}) {
    if (text.substr(0, prefix.size()) == prefix) {
      std::string_view digits = text.substr(prefix.size());
      std::uint64_t p = 0;
      auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
      if (ec != std::errc{} || ptr != digits.data() + digits.size()) {
        throw std::invalid_argument("malformed field modulus: " + std::string(text));
      }
      return prime(p);
    }
  }
  throw std::invalid_argument("unknown field '" + std::string(text) +
                              "' (expected q or zp:<prime>)");
}

Scalar Field::zero() const { return from_int(0); }
Scalar Field::one() const { return from_int(1); }

Scalar Field::from_int(long value) const {
  if (is_rational()) return Scalar(*this, mpq_class(value));
  auto p = static_cast<__int128>(modulus_);
  __int128 r = static_cast<__int128>(value) % p;
  if (r < 0) r += p;
  return Scalar(*this, static_cast<std::uint64_t>(r));
}

Scalar Field::from_rational(const mpq_class& value) const {
  if (is_rational()) return Scalar(*this, value);
  std::uint64_t num = reduce_mpz(value.get_num(), modulus_);
  std::uint64_t den = reduce_mpz(value.get_den(), modulus_);
  if (den == 0) {
    throw std::domain_error("denominator of " + value.get_str() + " vanishes modulo " +
                            std::to_string(modulus_));
  }
  return Scalar(*this, mul_mod(num, pow_mod(den, modulus_ - 2, modulus_), modulus_));
}

Scalar Field::parse_scalar(std::string_view text) const {
  return from_rational(parse_rational(text));
}

std::string Field::to_string() const {
  return is_rational() ? "q" : "zp:" + std::to_string(modulus_);
}

mpq_class parse_rational(std::string_view text) {
  auto valid_int = [](std::string_view s, bool allow_sign) {
    if (allow_sign && !s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s) {
      if (c < '0' || c > '9') return false;
    }
    return true;
  };
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? "1" : text.substr(slash + 1);
  if (!valid_int(num, true) || !valid_int(den, false)) {
    throw std::invalid_argument("malformed rational literal '" + std::string(text) + "'");
  }
  std::string num_str(num);
  if (!num_str.empty() && num_str.front() == '+') num_str.erase(0, 1);
  mpz_class n(num_str);
  mpz_class d{std::string(den)};
  if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  mpq_class q(n, d);
  q.canonicalize();
  return q;
}

void Scalar::require_same_field(const Scalar& other) const {
  if (field_ != other.field_) {
    throw std::invalid_argument("field mismatch: " + field_.to_string() + " vs " +
                                other.field_.to_string());
  }
}

bool Scalar::is_zero() const {
  return field_.is_rational() ? sgn(rational()) == 0 : residue() == 0;
}

bool Scalar::is_one() const {
  return field_.is_rational() ? rational() == 1 : residue() == 1;
}

Scalar Scalar::operator+(const Scalar& other) const {
  require_same_field(other);
  if (field_.is_rational()) return Scalar(field_, mpq_class(rational() + other.rational()));
  std::uint64_t p = field_.characteristic();
  std::uint64_t s = residue() + other.residue();
  return Scalar(field_, s >= p ? s - p : s);
}

Scalar Scalar::operator-(const Scalar& other) const {
  require_same_field(other);
  if (field_.is_rational()) return Scalar(field_, mpq_class(rational() - other.rational()));
  std::uint64_t p = field_.characteristic();
  return Scalar(field_, residue() >= other.residue() ? residue() - other.residue()
                                                     : residue() + p - other.residue());
}

Scalar Scalar::operator*(const Scalar& other) const {
  require_same_field(other);
  if (field_.is_rational()) return Scalar(field_, mpq_class(rational() * other.rational()));
  return Scalar(field_, mul_mod(residue(), other.residue(), field_.characteristic()));
}

Scalar Scalar::operator/(const Scalar& other) const { return *this * other.inverse(); }

Scalar Scalar::operator-() const {
  if (field_.is_rational()) return Scalar(field_, mpq_class(-rational()));
  return Scalar(field_, residue() == 0 ? 0 : field_.characteristic() - residue());
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero in field " + field_.to_string());
  if (field_.is_rational()) return Scalar(field_, mpq_class(1 / rational()));
  std::uint64_t p = field_.characteristic();
  return Scalar(field_, pow_mod(residue(), p - 2, p));
}

bool Scalar::operator==(const Scalar& other) const {
  return field_ == other.field_ && value_ == other.value_;
}

bool Scalar::is_negative() const { return field_.is_rational() && sgn(rational()) < 0; }

Scalar Scalar::abs() const { return is_negative() ? -*this : *this; }

mpq_class Scalar::to_rational() const {
  if (field_.is_rational()) return rational();
  return mpq_class(mpz_class(std::to_string(residue())));
}

std::string Scalar::to_string() const {
  return field_.is_rational() ? rational().get_str() : std::to_string(residue());
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }
std::ostream& operator<<(std::ostream& os, const Field& f) { return os << f.to_string(); }

}  // namespace flowcat
