// Exact scalars of the form  sign * q * pi^(k/2)  and leading-term algebra.
#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace archfe {

using Integer = mpz_class;
using Rational = mpq_class;

/// Raised when an exponent or order leaves the int64 range.
class ExponentOverflow : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

/// Raised by ExactScalar::parse on malformed text.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

/// (-1)^e for any integer e.
constexpr int neg_one_pow(std::int64_t e) noexcept { return (e % 2 == 0) ? 1 : -1; }

/// A real number  sign * magnitude * pi^(half_pi_exp / 2)  or exactly zero.
///
/// The pi exponent is stored doubled so that Gamma at half integers, which
/// carries a single sqrt(pi), stays exact. Zero is a distinct state: its
/// sign, magnitude and exponent are fixed at (+1, 1, 0) and never consulted.
/// Every instance is canonical, so field-wise equality is value equality.
class ExactScalar {
 public:
  /// Zero.
  ExactScalar() = default;

  /// value * pi^(half_pi_exp/2). A zero value yields the zero scalar.
  explicit ExactScalar(const Rational& value, std::int64_t half_pi_exp = 0);
  explicit ExactScalar(long value) : ExactScalar(Rational(value)) {}

  static ExactScalar zero() { return {}; }
  static ExactScalar one() { return ExactScalar(Rational(1)); }
  /// pi^(half_pi_exp/2)
  static ExactScalar pi_power(std::int64_t half_pi_exp) { return ExactScalar(Rational(1), half_pi_exp); }
  /// (2 pi)^e
  static ExactScalar two_pi_power(std::int64_t e);

  bool is_zero() const noexcept { return zero_; }
  /// +1, -1, or 0 for zero.
  int sign() const noexcept { return zero_ ? 0 : sign_; }
  /// Positive reduced rational; 1 for zero.
  const Rational& magnitude() const noexcept { return magnitude_; }
  std::int64_t half_pi_exp() const noexcept { return half_pi_exp_; }

  /// The integral pi exponent when half_pi_exp is even.
  std::optional<std::int64_t> pi_exp() const noexcept;
  /// Checked downcast: throws std::domain_error when a stray sqrt(pi) is present.
  std::int64_t integral_pi_exp() const;

  /// sign * magnitude; throws std::domain_error unless the pi exponent is zero.
  Rational as_rational() const;

  ExactScalar abs() const;
  ExactScalar operator-() const;
  /// Multiplicative inverse; throws std::domain_error on zero.
  ExactScalar inverse() const;
  /// this^e for any integer e; 0^0 = 1, 0^negative throws std::domain_error.
  ExactScalar pow(std::int64_t e) const;

  friend ExactScalar operator*(const ExactScalar& a, const ExactScalar& b);
  friend ExactScalar operator/(const ExactScalar& a, const ExactScalar& b) { return a * b.inverse(); }
  ExactScalar& operator*=(const ExactScalar& b) { return *this = *this * b; }
  ExactScalar& operator/=(const ExactScalar& b) { return *this = *this / b; }

  friend bool operator==(const ExactScalar& a, const ExactScalar& b);

  /// Display grammar:  [-]p[/q][ * pi^E]  where E is an integer when the
  /// doubled exponent is even and "(k/2)" otherwise. Zero prints as "0".
  std::string to_string() const;
  /// Inverse of to_string. Also accepts a bare "pi^E" (coefficient 1).
  static ExactScalar parse(std::string_view text);

  /// Splits the signed rational part as 2^v * odd, for display of the
  /// powers of two carried by closed forms.
  std::string to_two_adic_string() const;

 private:
  bool zero_ = true;
  int sign_ = 1;
  Rational magnitude_{1};
  std::int64_t half_pi_exp_ = 0;
};

ExactScalar mul(const ExactScalar& a, const ExactScalar& b);

/// a == b or a == -b.
bool eq_up_to_sign(const ExactScalar& a, const ExactScalar& b);

std::ostream& operator<<(std::ostream& os, const ExactScalar& x);

/// Leading behaviour  f(s) = coeff * (s - n)^order * (1 + o(1))  at an integer n.
class LeadingTerm {
 public:
  /// Throws std::invalid_argument if coeff is zero.
  LeadingTerm(std::int64_t order, ExactScalar coeff);

  /// The constant function 1.
  static LeadingTerm unit() { return LeadingTerm(0, ExactScalar::one()); }

  std::int64_t order() const noexcept { return order_; }
  const ExactScalar& coeff() const noexcept { return coeff_; }

  friend bool operator==(const LeadingTerm&, const LeadingTerm&) = default;

  /// "order=<m> coeff=<c>"
  std::string to_string() const;

 private:
  std::int64_t order_;
  ExactScalar coeff_;
};

/// Leading term of f * g^exponent.
LeadingTerm lt_combine(const LeadingTerm& f, const LeadingTerm& g, std::int64_t exponent);

/// 2-adic valuation of a nonzero rational.
std::int64_t two_adic_valuation(const Rational& q);

Integer factorial(std::int64_t n);

}  // namespace archfe
