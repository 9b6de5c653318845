// High-precision numeric oracle: Gamma via a shifted Stirling series and
// numeric extraction of leading Laurent coefficients. Used only to falsify
// the exact engine, never as a source of truth for orders.
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <mpfr.h>

#include "archfe/exact.hpp"
#include "archfe/gamma.hpp"

namespace archfe::oracle {

inline constexpr mpfr_prec_t kDefaultPrecision = 256;
inline constexpr mpfr_prec_t kMinPrecision = 64;

/// RAII wrapper over mpfr_t. Results of binary operations carry the larger
/// of the two operand precisions; every operation rounds to nearest.
class BigFloat {
 public:
  explicit BigFloat(mpfr_prec_t precision = kDefaultPrecision);
  BigFloat(long value, mpfr_prec_t precision);
  BigFloat(const Rational& value, mpfr_prec_t precision);
  /// Decimal or "0x" hex text, as accepted by mpfr_set_str.
  static BigFloat from_string(const std::string& text, mpfr_prec_t precision);

  BigFloat(const BigFloat& other);
  BigFloat(BigFloat&& other) noexcept;
  BigFloat& operator=(const BigFloat& other);
  BigFloat& operator=(BigFloat&& other) noexcept;
  ~BigFloat();

  mpfr_prec_t precision() const noexcept { return mpfr_get_prec(value_); }
  /// Copy rounded to a new precision.
  BigFloat with_precision(mpfr_prec_t precision) const;

  mpfr_srcptr get() const noexcept { return value_; }
  mpfr_ptr get() noexcept { return value_; }

  double to_double() const noexcept { return mpfr_get_d(value_, MPFR_RNDN); }
  /// Scientific notation with `digits` significant decimal digits.
  std::string to_string(int digits = 20) const;
  bool is_zero() const noexcept { return mpfr_zero_p(value_) != 0; }
  int sign() const noexcept { return mpfr_sgn(value_); }

  BigFloat operator-() const;
  friend BigFloat operator+(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator-(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator*(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator/(const BigFloat& a, const BigFloat& b);
  friend bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_less_p(a.value_, b.value_) != 0; }
  friend bool operator>(const BigFloat& a, const BigFloat& b) { return b < a; }

  static BigFloat pi(mpfr_prec_t precision);
  /// 2^e exactly.
  static BigFloat two_pow(long e, mpfr_prec_t precision);

  friend BigFloat abs(const BigFloat& x);
  friend BigFloat sqrt(const BigFloat& x);
  friend BigFloat log(const BigFloat& x);
  friend BigFloat exp(const BigFloat& x);
  friend BigFloat sin(const BigFloat& x);
  /// x^e for an integer exponent.
  friend BigFloat pow(const BigFloat& x, long e);

 private:
  mpfr_t value_;
};

class OracleError : public std::runtime_error {
 public:
  enum class Code {
    PoleProximity,      // Gamma requested too close to a nonpositive integer
    OrderMismatch,      // two-point ratio disagrees with the supplied order
    CoefficientMismatch,
    BadPrecision,
  };
  OracleError(Code code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Code code() const noexcept { return code_; }

 private:
  Code code_;
};

/// Gamma(z) with relative error at most 2^-(precision-16). Throws
/// OracleError(PoleProximity) when z is within 2^-(precision/2) of a
/// nonpositive integer.
BigFloat gamma_numeric(const BigFloat& z, mpfr_prec_t precision = kDefaultPrecision);

/// Gamma_R(x) = pi^{-x/2} Gamma(x/2) and Gamma_C(x) = 2 (2 pi)^{-x} Gamma(x).
BigFloat gamma_r_numeric(const BigFloat& x, mpfr_prec_t precision = kDefaultPrecision);
BigFloat gamma_c_numeric(const BigFloat& x, mpfr_prec_t precision = kDefaultPrecision);

/// Value of a Gamma product at s.
BigFloat evaluate(const GammaProduct& product, const BigFloat& s, mpfr_prec_t precision = kDefaultPrecision);

/// Numeric value of sign * q * pi^(k/2).
BigFloat to_bigfloat(const ExactScalar& x, mpfr_prec_t precision = kDefaultPrecision);

struct LeadingCheck {
  /// |extrapolated coefficient - expected| / |expected|
  BigFloat relative_error;
  /// |f(n+eps/2) / f(n+eps) / 2^{-order} - 1|
  BigFloat order_deviation;
  /// The Richardson-extrapolated coefficient.
  BigFloat coefficient;
};

/// Falsification test for an exact leading term of `product` at s = n.
///
/// Samples at n+eps and n+eps/2 with eps = 2^{-precision/4}, strips
/// (s-n)^order and Richardson-extrapolates the pair. Throws
/// OracleError(OrderMismatch) when the sample ratio deviates from
/// 2^{-order} by more than 10%.
LeadingCheck leading_check(const GammaProduct& product, std::int64_t n, const LeadingTerm& expected,
                           mpfr_prec_t precision = kDefaultPrecision);

}  // namespace archfe::oracle
