#include "archfe/exact.hpp"

#include <cctype>
#include <limits>
#include <ostream>
#include <sstream>

namespace archfe {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw ExponentOverflow("int64 overflow in exponent addition");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw ExponentOverflow("int64 overflow in exponent multiplication");
  return r;
}

Integer factorial(std::int64_t n) {
  if (n < 0) throw std::domain_error("factorial of a negative integer");
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

std::int64_t two_adic_valuation(const Rational& q) {
  if (sgn(q) == 0) throw std::domain_error("2-adic valuation of zero");
  const auto num = mpz_scan1(q.get_num_mpz_t(), 0);
  const auto den = mpz_scan1(q.get_den_mpz_t(), 0);
  return static_cast<std::int64_t>(num) - static_cast<std::int64_t>(den);
}

// ---------------------------------------------------------------------------

ExactScalar::ExactScalar(const Rational& value, std::int64_t half_pi_exp) {
  Rational v(value);
  v.canonicalize();
  if (sgn(v) == 0) return;
  zero_ = false;
  sign_ = sgn(v) > 0 ? 1 : -1;
  magnitude_ = ::abs(v);
  half_pi_exp_ = half_pi_exp;
}

ExactScalar ExactScalar::two_pi_power(std::int64_t e) {
  Rational two_e(1);
  if (e >= 0) {
    mpz_mul_2exp(two_e.get_num_mpz_t(), two_e.get_num_mpz_t(), static_cast<mp_bitcnt_t>(e));
  } else {
    mpz_mul_2exp(two_e.get_den_mpz_t(), two_e.get_den_mpz_t(), static_cast<mp_bitcnt_t>(-e));
  }
  return ExactScalar(two_e, checked_mul(2, e));
}

std::optional<std::int64_t> ExactScalar::pi_exp() const noexcept {
  if (half_pi_exp_ % 2 != 0) return std::nullopt;
  return half_pi_exp_ / 2;
}

std::int64_t ExactScalar::integral_pi_exp() const {
  auto e = pi_exp();
  if (!e) throw std::domain_error("scalar carries a half-integral power of pi: " + to_string());
  return *e;
}

Rational ExactScalar::as_rational() const {
  if (zero_) return Rational(0);
  if (half_pi_exp_ != 0) throw std::domain_error("scalar is not rational: " + to_string());
  return sign_ > 0 ? magnitude_ : Rational(-magnitude_);
}

ExactScalar ExactScalar::abs() const {
  ExactScalar r = *this;
  r.sign_ = 1;
  return r;
}

ExactScalar ExactScalar::operator-() const {
  ExactScalar r = *this;
  if (!zero_) r.sign_ = -sign_;
  return r;
}

ExactScalar ExactScalar::inverse() const {
  if (zero_) throw std::domain_error("inverse of zero");
  ExactScalar r = *this;
  r.magnitude_ = 1 / magnitude_;
  r.half_pi_exp_ = checked_mul(-1, half_pi_exp_);
  return r;
}

ExactScalar ExactScalar::pow(std::int64_t e) const {
  if (e == 0) return one();
  if (zero_) {
    if (e < 0) throw std::domain_error("zero raised to a negative power");
    return zero();
  }
  const std::uint64_t n = e > 0 ? static_cast<std::uint64_t>(e) : static_cast<std::uint64_t>(-(e + 1)) + 1;
  if (n > std::numeric_limits<unsigned long>::max()) throw ExponentOverflow("power too large");
  ExactScalar r;
  r.zero_ = false;
  r.sign_ = (sign_ < 0 && (n % 2 == 1)) ? -1 : 1;
  mpz_pow_ui(r.magnitude_.get_num_mpz_t(), magnitude_.get_num_mpz_t(), static_cast<unsigned long>(n));
  mpz_pow_ui(r.magnitude_.get_den_mpz_t(), magnitude_.get_den_mpz_t(), static_cast<unsigned long>(n));
  if (e < 0) r.magnitude_ = 1 / r.magnitude_;
  r.half_pi_exp_ = checked_mul(half_pi_exp_, e);
  return r;
}

ExactScalar operator*(const ExactScalar& a, const ExactScalar& b) {
  if (a.zero_ || b.zero_) return ExactScalar::zero();
  ExactScalar r;
  r.zero_ = false;
  r.sign_ = a.sign_ * b.sign_;
  r.magnitude_ = a.magnitude_ * b.magnitude_;
  r.half_pi_exp_ = checked_add(a.half_pi_exp_, b.half_pi_exp_);
  return r;
}

bool operator==(const ExactScalar& a, const ExactScalar& b) {
  if (a.zero_ || b.zero_) return a.zero_ == b.zero_;
  return a.sign_ == b.sign_ && a.half_pi_exp_ == b.half_pi_exp_ && a.magnitude_ == b.magnitude_;
}

ExactScalar mul(const ExactScalar& a, const ExactScalar& b) { return a * b; }

bool eq_up_to_sign(const ExactScalar& a, const ExactScalar& b) { return a.abs() == b.abs(); }

namespace {

std::string pi_suffix(std::int64_t half_pi_exp) {
  if (half_pi_exp == 0) return {};
  if (half_pi_exp % 2 == 0) return " * pi^" + std::to_string(half_pi_exp / 2);
  return " * pi^(" + std::to_string(half_pi_exp) + "/2)";
}

class Cursor {
 public:
  explicit Cursor(std::string_view s) : s_(s) {}

  void skip_ws() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool done() {
    skip_ws();
    return i_ == s_.size();
  }
  bool accept(std::string_view tok) {
    skip_ws();
    if (s_.substr(i_, tok.size()) == tok) {
      i_ += tok.size();
      return true;
    }
    return false;
  }
  void expect(std::string_view tok) {
    if (!accept(tok)) fail("expected '" + std::string(tok) + "'");
  }
  bool at_digit() {
    skip_ws();
    return i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]));
  }
  std::string digits() {
    skip_ws();
    const auto start = i_;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
    if (start == i_) fail("expected digits");
    return std::string(s_.substr(start, i_ - start));
  }
  std::int64_t signed_int() {
    const bool neg = accept("-");
    const auto d = digits();
    Integer z(d);
    if (neg) z = -z;
    if (!z.fits_slong_p()) fail("exponent out of range");
    return z.get_si();
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("cannot parse scalar '" + std::string(s_) + "' at offset " + std::to_string(i_) + ": " + what);
  }

 private:
  std::string_view s_;
  std::size_t i_ = 0;
};

std::int64_t parse_pi_exponent(Cursor& c) {
  c.expect("pi^");
  if (c.accept("(")) {
    const auto k = c.signed_int();
    c.expect("/2");
    c.expect(")");
    return k;
  }
  return checked_mul(2, c.signed_int());
}

}  // namespace

std::string ExactScalar::to_string() const {
  if (zero_) return "0";
  std::string out = sign_ < 0 ? "-" : "";
  out += magnitude_.get_str();
  out += pi_suffix(half_pi_exp_);
  return out;
}

std::string ExactScalar::to_two_adic_string() const {
  if (zero_) return "0";
  const auto v = two_adic_valuation(magnitude_);
  Rational odd = magnitude_;
  if (v > 0) mpz_fdiv_q_2exp(odd.get_num_mpz_t(), odd.get_num_mpz_t(), static_cast<mp_bitcnt_t>(v));
  if (v < 0) mpz_fdiv_q_2exp(odd.get_den_mpz_t(), odd.get_den_mpz_t(), static_cast<mp_bitcnt_t>(-v));
  odd.canonicalize();
  std::string out = sign_ < 0 ? "-" : "";
  out += "2^" + std::to_string(v) + " * " + odd.get_str() + pi_suffix(half_pi_exp_);
  return out;
}

ExactScalar ExactScalar::parse(std::string_view text) {
  Cursor c(text);
  const bool neg = c.accept("-");
  Rational value(1);
  std::int64_t half = 0;
  if (c.at_digit()) {
    Integer num(c.digits());
    Integer den(1);
    if (c.accept("/")) {
      den = Integer(c.digits());
      if (den == 0) c.fail("zero denominator");
    }
    value = Rational(num, den);
    value.canonicalize();
    if (c.accept("*")) half = parse_pi_exponent(c);
  } else {
    half = parse_pi_exponent(c);
  }
  if (!c.done()) c.fail("trailing characters");
  if (neg) value = -value;
  if (sgn(value) == 0 && (neg || half != 0)) c.fail("zero must be written as 0");
  return ExactScalar(value, half);
}

std::ostream& operator<<(std::ostream& os, const ExactScalar& x) { return os << x.to_string(); }

// ---------------------------------------------------------------------------

LeadingTerm::LeadingTerm(std::int64_t order, ExactScalar coeff) : order_(order), coeff_(std::move(coeff)) {
  if (coeff_.is_zero()) throw std::invalid_argument("leading coefficient must be nonzero");
}

std::string LeadingTerm::to_string() const {
  return "order=" + std::to_string(order_) + " coeff=" + coeff_.to_string();
}

LeadingTerm lt_combine(const LeadingTerm& f, const LeadingTerm& g, std::int64_t exponent) {
  return LeadingTerm(checked_add(f.order(), checked_mul(exponent, g.order())), f.coeff() * g.coeff().pow(exponent));
}

}  // namespace archfe
