#include "flowcat/laurent_poly.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace flowcat {
namespace {

// Ordinary polynomial division in k[s] on ascending coefficient vectors.
// divisor must have a nonzero last entry. Returns (quotient, remainder),
// remainder untrimmed of length < divisor.size().
std::pair<std::vector<Scalar>, std::vector<Scalar>> poly_divide(std::vector<Scalar> dividend,
                                                               const std::vector<Scalar>& divisor,
                                                               const Field& field) {
  const std::size_t n = divisor.size();
  if (dividend.size() < n) return {{}, std::move(dividend)};
  std::vector<Scalar> quotient(dividend.size() - n + 1, field.zero());
  Scalar lead_inv = divisor.back().inverse();
  for (std::size_t k = dividend.size(); k-- >= n;) {
    if (dividend[k].is_zero()) continue;
    Scalar c = dividend[k] * lead_inv;
    std::size_t shift = k - (n - 1);
    quotient[shift] = c;
    for (std::size_t i = 0; i < n; ++i) {
      if (!divisor[i].is_zero()) dividend[shift + i] -= c * divisor[i];
    }
  }
  dividend.resize(n - 1);
  return {std::move(quotient), std::move(dividend)};
}

class PolyParser {
 public:
  PolyParser(std::string_view text, Field field) : text_(text), field_(field) {}

  LaurentPoly parse() {
    LaurentPoly result(field_);
    skip_ws();
    if (at_end()) fail("empty polynomial");
    bool first = true;
    while (!at_end()) {
      bool negative = false;
      if (peek() == '+' || peek() == '-') {
        negative = peek() == '-';
        ++pos_;
        skip_ws();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      LaurentPoly term = parse_term();
      result += negative ? -term : term;
      first = false;
      skip_ws();
    }
    return result;
  }

 private:
  LaurentPoly parse_term() {
    Scalar coeff = field_.one();
    bool have_coeff = false;
    if (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      std::size_t start = pos_;
      while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      if (!at_end() && peek() == '/') {
        ++pos_;
        if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) fail("expected denominator");
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      }
      try {
        coeff = field_.parse_scalar(text_.substr(start, pos_ - start));
      } catch (const std::exception& e) {
        fail(e.what());
      }
      have_coeff = true;
      skip_ws();
      if (!at_end() && peek() == '*') {
        ++pos_;
        skip_ws();
        if (at_end() || peek() != 's') fail("expected 's' after '*'");
      }
    }
    if (at_end() || peek() != 's') {
      if (!have_coeff) fail("expected coefficient or 's'");
      return LaurentPoly(coeff);
    }
    ++pos_;
    int exponent = 1;
    skip_ws();
    if (!at_end() && peek() == '^') {
      ++pos_;
      skip_ws();
      bool paren = !at_end() && peek() == '(';
      if (paren) {
        ++pos_;
        skip_ws();
      }
      bool negative = false;
      if (!at_end() && (peek() == '-' || peek() == '+')) {
        negative = peek() == '-';
        ++pos_;
      }
      std::size_t start = pos_;
      while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      if (start == pos_) fail("expected exponent");
      long value = std::stol(std::string(text_.substr(start, pos_ - start)));
      if (value > 1000000) fail("exponent out of range");
      exponent = static_cast<int>(negative ? -value : value);
      if (paren) {
        skip_ws();
        if (at_end() || peek() != ')') fail("expected ')'");
        ++pos_;
      }
    }
    return LaurentPoly::monomial(coeff, exponent);
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("polynomial '" + std::string(text_) + "' at offset " +
                                std::to_string(pos_) + ": " + what);
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  std::string_view text_;
  Field field_;
  std::size_t pos_ = 0;
};

}  // namespace

LaurentPoly::LaurentPoly(const Scalar& c) : field_(c.field()) {
  if (!c.is_zero()) coeffs_.push_back(c);
}

LaurentPoly LaurentPoly::monomial(const Scalar& c, int exponent) {
  LaurentPoly p(c);
  if (!p.is_zero()) p.low_ = exponent;
  return p;
}

LaurentPoly LaurentPoly::s_power(Field field, int exponent) {
  return monomial(field.one(), exponent);
}

LaurentPoly LaurentPoly::from_coeffs(Field field, int low, std::vector<Scalar> coeffs) {
  LaurentPoly p(field);
  for (const auto& c : coeffs) {
    if (c.field() != field) throw std::invalid_argument("coefficient field mismatch");
  }
  p.low_ = low;
  p.coeffs_ = std::move(coeffs);
  p.trim();
  return p;
}

LaurentPoly LaurentPoly::parse(std::string_view text, Field field) {
  return PolyParser(text, field).parse();
}

void LaurentPoly::trim() {
  auto first = std::find_if(coeffs_.begin(), coeffs_.end(), [](const Scalar& c) { return !c.is_zero(); });
  if (first == coeffs_.end()) {
    coeffs_.clear();
    low_ = 0;
    return;
  }
  auto last = std::find_if(coeffs_.rbegin(), coeffs_.rend(), [](const Scalar& c) { return !c.is_zero(); });
  coeffs_.erase(last.base(), coeffs_.end());
  low_ += static_cast<int>(first - coeffs_.begin());
  coeffs_.erase(coeffs_.begin(), first);
}

void LaurentPoly::require_same_field(const LaurentPoly& other) const {
  if (field_ != other.field_) {
    throw std::invalid_argument("polynomial field mismatch: " + field_.to_string() + " vs " +
                                other.field_.to_string());
  }
}

Scalar LaurentPoly::coeff(int exponent) const {
  if (is_zero() || exponent < low_ || exponent > high_exponent()) return field_.zero();
  return coeffs_[static_cast<std::size_t>(exponent - low_)];
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly p = *this;
  if (!p.is_zero()) p.low_ += k;
  return p;
}

LaurentPoly LaurentPoly::unit_inverse() const {
  if (!is_unit()) throw std::domain_error("not a unit: " + to_string());
  return monomial(coeffs_.front().inverse(), -low_);
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& other) const {
  require_same_field(other);
  if (is_zero()) return other;
  if (other.is_zero()) return *this;
  int low = std::min(low_, other.low_);
  int high = std::max(high_exponent(), other.high_exponent());
  std::vector<Scalar> coeffs(static_cast<std::size_t>(high - low + 1), field_.zero());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs[static_cast<std::size_t>(low_ - low) + i] = coeffs_[i];
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) {
    coeffs[static_cast<std::size_t>(other.low_ - low) + i] += other.coeffs_[i];
  }
  LaurentPoly p(field_);
  p.low_ = low;
  p.coeffs_ = std::move(coeffs);
  p.trim();
  return p;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& other) const { return *this + (-other); }

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly p = *this;
  for (auto& c : p.coeffs_) c = -c;
  return p;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& other) const {
  require_same_field(other);
  if (is_zero() || other.is_zero()) return LaurentPoly(field_);
  std::vector<Scalar> coeffs(coeffs_.size() + other.coeffs_.size() - 1, field_.zero());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < other.coeffs_.size(); ++j) {
      if (!other.coeffs_[j].is_zero()) coeffs[i + j] += coeffs_[i] * other.coeffs_[j];
    }
  }
  LaurentPoly p(field_);
  p.low_ = low_ + other.low_;
  p.coeffs_ = std::move(coeffs);
  // Over a field the product of nonzero extreme coefficients is nonzero.
  return p;
}

LaurentPoly LaurentPoly::operator*(const Scalar& c) const {
  if (c.field() != field_) throw std::invalid_argument("scalar field mismatch");
  if (c.is_zero()) return LaurentPoly(field_);
  LaurentPoly p = *this;
  for (auto& x : p.coeffs_) x *= c;
  return p;
}

bool LaurentPoly::operator==(const LaurentPoly& other) const {
  if (is_zero() && other.is_zero()) return field_ == other.field_;
  return field_ == other.field_ && low_ == other.low_ && coeffs_ == other.coeffs_;
}

std::string LaurentPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int e = high_exponent(); e >= low_; --e) {
    const Scalar& c = coeffs_[static_cast<std::size_t>(e - low_)];
    if (c.is_zero()) continue;
    if (first) {
      if (c.is_negative()) os << '-';
    } else {
      os << (c.is_negative() ? " - " : " + ");
    }
    first = false;
    Scalar mag = c.abs();
    if (e == 0) {
      os << mag;
      continue;
    }
    if (!mag.is_one()) os << mag << '*';
    os << 's';
    if (e != 1) os << '^' << e;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << p.to_string(); }

AssociateSplit canonical_associate(const LaurentPoly& p) {
  if (p.is_zero()) throw std::domain_error("canonical associate of zero");
  LaurentPoly unit = LaurentPoly::monomial(p.leading_coeff(), p.low_exponent());
  Scalar inv = p.leading_coeff().inverse();
  std::vector<Scalar> coeffs = p.coeffs();
  for (auto& c : coeffs) c *= inv;
  return {std::move(unit), LaurentPoly::from_coeffs(p.field(), 0, std::move(coeffs))};
}

LaurentPoly normalize_associate(const LaurentPoly& p) {
  return p.is_zero() ? p : canonical_associate(p).rep;
}

DivRem divrem(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) throw std::domain_error("division by the zero polynomial");
  const Field& field = b.field();
  if (a.field() != field) throw std::invalid_argument("polynomial field mismatch");
  if (a.is_zero()) return {LaurentPoly(field), LaurentPoly(field)};
  if (b.is_unit()) return {a * b.unit_inverse(), LaurentPoly(field)};
  // Divide the ordinary polynomial s^-low(a) * a by the canonical associate of b.
  auto [unit, rep] = canonical_associate(b);
  auto [q, r] = poly_divide(a.coeffs(), rep.coeffs(), field);
  const int shift = a.low_exponent();
  LaurentPoly quotient = LaurentPoly::from_coeffs(field, shift, std::move(q)) * unit.unit_inverse();
  LaurentPoly remainder = LaurentPoly::from_coeffs(field, shift, std::move(r));
  return {std::move(quotient), std::move(remainder)};
}

std::optional<LaurentPoly> exact_divide(const LaurentPoly& a, const LaurentPoly& b) {
  auto [q, r] = divrem(a, b);
  if (!r.is_zero()) return std::nullopt;
  return q;
}

bool divides(const LaurentPoly& b, const LaurentPoly& a) {
  if (b.is_zero()) return a.is_zero();
  return divrem(a, b).remainder.is_zero();
}

ExtendedGcd gcd_ext(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() && b.is_zero()) throw std::domain_error("gcd of two zero polynomials");
  const Field field = a.is_zero() ? b.field() : a.field();
  LaurentPoly r0 = a, r1 = b;
  LaurentPoly x0 = LaurentPoly::one(field), x1(field);
  LaurentPoly y0(field), y1 = LaurentPoly::one(field);
  while (!r1.is_zero()) {
    auto [q, r] = divrem(r0, r1);
    LaurentPoly x2 = x0 - q * x1;
    LaurentPoly y2 = y0 - q * y1;
    r0 = std::move(r1);
    r1 = std::move(r);
    x0 = std::move(x1);
    x1 = std::move(x2);
    y0 = std::move(y1);
    y1 = std::move(y2);
  }
  auto [unit, rep] = canonical_associate(r0);
  LaurentPoly inv = unit.unit_inverse();
  return {std::move(rep), x0 * inv, y0 * inv};
}

LaurentPoly reduce_mod(const LaurentPoly& a, const LaurentPoly& m) {
  if (m.is_zero()) throw std::domain_error("reduction modulo the zero polynomial");
  const Field& field = m.field();
  if (a.is_zero() || m.is_unit()) return LaurentPoly(field);
  const std::vector<Scalar> modulus = canonical_associate(m).rep.coeffs();
  const auto n = static_cast<int>(modulus.size()) - 1;
  const int low = std::min(a.low_exponent(), 0);
  const int high = std::max(a.high_exponent(), n);
  std::vector<Scalar> work(static_cast<std::size_t>(high - low + 1), field.zero());
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
    work[static_cast<std::size_t>(a.low_exponent() - low) + i] = a.coeffs()[i];
  }
  // Clear negative exponents upward using the nonzero constant term of the
  // modulus, then clear exponents >= n downward using its monic leading term.
  const Scalar const_inv = modulus.front().inverse();
  for (int e = low; e < 0; ++e) {
    Scalar& c = work[static_cast<std::size_t>(e - low)];
    if (c.is_zero()) continue;
    Scalar factor = c * const_inv;
    for (int i = 0; i <= n; ++i) work[static_cast<std::size_t>(e + i - low)] -= factor * modulus[static_cast<std::size_t>(i)];
  }
  for (int e = high; e >= n; --e) {
    Scalar factor = work[static_cast<std::size_t>(e - low)];
    if (factor.is_zero()) continue;
    for (int i = 0; i <= n; ++i) {
      work[static_cast<std::size_t>(e - n + i - low)] -= factor * modulus[static_cast<std::size_t>(i)];
    }
  }
  std::vector<Scalar> residue(work.begin() + (0 - low), work.begin() + (n - low));
  return LaurentPoly::from_coeffs(field, 0, std::move(residue));
}

}  // namespace flowcat
