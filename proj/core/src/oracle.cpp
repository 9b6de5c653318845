#include "archfe/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <vector>

namespace archfe::oracle {

namespace {

void check_precision(mpfr_prec_t precision) {
  if (precision < kMinPrecision) {
    throw OracleError(OracleError::Code::BadPrecision,
                      "precision must be at least " + std::to_string(kMinPrecision) + " bits");
  }
}

mpfr_prec_t join(const BigFloat& a, const BigFloat& b) { return std::max(a.precision(), b.precision()); }

// Exact Bernoulli numbers B_0..B_{count-1}, grown on demand and shared
// between threads.
std::vector<Rational> bernoulli_prefix(std::size_t count) {
  static std::mutex mutex;
  static std::vector<Rational> table{Rational(1)};
  std::lock_guard lock(mutex);
  while (table.size() < count) {
    const auto m = table.size();
    Rational sum(0);
    Integer binom(1);  // C(m+1, j)
    for (std::size_t j = 0; j < m; ++j) {
      sum += binom * table[j];
      binom = binom * static_cast<unsigned long>(m + 1 - j) / static_cast<unsigned long>(j + 1);
    }
    Rational b = -sum / static_cast<unsigned long>(m + 1);
    b.canonicalize();
    table.push_back(b);
  }
  return {table.begin(), table.begin() + static_cast<std::ptrdiff_t>(count)};
}

// ln Gamma(z) for z >= shift_target by the Stirling series.
BigFloat log_gamma_stirling(const BigFloat& z, mpfr_prec_t wp) {
  const BigFloat half(Rational(1, 2), wp);
  const BigFloat two_pi = BigFloat(2L, wp) * BigFloat::pi(wp);
  BigFloat result = (z - half) * log(z) - z + half * log(two_pi);

  const BigFloat tolerance = BigFloat::two_pow(-static_cast<long>(wp), wp) * abs(result);
  const BigFloat z2 = z * z;
  BigFloat z_power = z;  // z^{2k-1}
  constexpr std::size_t kMaxTerms = 4000;
  std::size_t have = 0;
  std::vector<Rational> bern;
  for (std::size_t k = 1; k < kMaxTerms; ++k) {
    if (2 * k >= have) {
      have = std::max<std::size_t>(2 * have, 2 * k + 2);
      bern = bernoulli_prefix(have);
    }
    const Rational coeff = bern[2 * k] / Rational(static_cast<unsigned long>(2 * k * (2 * k - 1)));
    const BigFloat term = BigFloat(coeff, wp) / z_power;
    result = result + term;
    if (abs(term) < tolerance) break;
    z_power = z_power * z2;
  }
  return result;
}

}  // namespace

// ---------------------------------------------------------------------------

BigFloat::BigFloat(mpfr_prec_t precision) {
  mpfr_init2(value_, precision);
  mpfr_set_zero(value_, 1);
}

BigFloat::BigFloat(long value, mpfr_prec_t precision) {
  mpfr_init2(value_, precision);
  mpfr_set_si(value_, value, MPFR_RNDN);
}

BigFloat::BigFloat(const Rational& value, mpfr_prec_t precision) {
  mpfr_init2(value_, precision);
  mpfr_set_q(value_, value.get_mpq_t(), MPFR_RNDN);
}

BigFloat BigFloat::from_string(const std::string& text, mpfr_prec_t precision) {
  BigFloat r(precision);
  if (mpfr_set_str(r.value_, text.c_str(), 0, MPFR_RNDN) != 0) {
    throw std::invalid_argument("not a floating point literal: " + text);
  }
  return r;
}

BigFloat::BigFloat(const BigFloat& other) {
  mpfr_init2(value_, other.precision());
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& other) noexcept {
  mpfr_init2(value_, other.precision());
  mpfr_swap(value_, other.value_);
}

BigFloat& BigFloat::operator=(const BigFloat& other) {
  if (this != &other) {
    mpfr_set_prec(value_, other.precision());
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& other) noexcept {
  mpfr_swap(value_, other.value_);
  return *this;
}

BigFloat::~BigFloat() { mpfr_clear(value_); }

BigFloat BigFloat::with_precision(mpfr_prec_t precision) const {
  BigFloat r(precision);
  mpfr_set(r.value_, value_, MPFR_RNDN);
  return r;
}

std::string BigFloat::to_string(int digits) const {
  std::vector<char> buf(static_cast<std::size_t>(digits) + 32);
  mpfr_snprintf(buf.data(), buf.size(), "%.*Re", digits - 1, value_);
  return buf.data();
}

BigFloat BigFloat::operator-() const {
  BigFloat r(precision());
  mpfr_neg(r.value_, value_, MPFR_RNDN);
  return r;
}

BigFloat operator+(const BigFloat& a, const BigFloat& b) {
  BigFloat r(join(a, b));
  mpfr_add(r.value_, a.value_, b.value_, MPFR_RNDN);
  return r;
}

BigFloat operator-(const BigFloat& a, const BigFloat& b) {
  BigFloat r(join(a, b));
  mpfr_sub(r.value_, a.value_, b.value_, MPFR_RNDN);
  return r;
}

BigFloat operator*(const BigFloat& a, const BigFloat& b) {
  BigFloat r(join(a, b));
  mpfr_mul(r.value_, a.value_, b.value_, MPFR_RNDN);
  return r;
}

BigFloat operator/(const BigFloat& a, const BigFloat& b) {
  BigFloat r(join(a, b));
  mpfr_div(r.value_, a.value_, b.value_, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::pi(mpfr_prec_t precision) {
  BigFloat r(precision);
  mpfr_const_pi(r.value_, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::two_pow(long e, mpfr_prec_t precision) {
  BigFloat r(1L, precision);
  mpfr_mul_2si(r.value_, r.value_, e, MPFR_RNDN);
  return r;
}

BigFloat abs(const BigFloat& x) {
  BigFloat r(x.precision());
  mpfr_abs(r.value_, x.value_, MPFR_RNDN);
  return r;
}

BigFloat sqrt(const BigFloat& x) {
  BigFloat r(x.precision());
  mpfr_sqrt(r.value_, x.value_, MPFR_RNDN);
  return r;
}

BigFloat log(const BigFloat& x) {
  BigFloat r(x.precision());
  mpfr_log(r.value_, x.value_, MPFR_RNDN);
  return r;
}

BigFloat exp(const BigFloat& x) {
  BigFloat r(x.precision());
  mpfr_exp(r.value_, x.value_, MPFR_RNDN);
  return r;
}

BigFloat sin(const BigFloat& x) {
  BigFloat r(x.precision());
  mpfr_sin(r.value_, x.value_, MPFR_RNDN);
  return r;
}

BigFloat pow(const BigFloat& x, long e) {
  BigFloat r(x.precision());
  mpfr_pow_si(r.value_, x.value_, e, MPFR_RNDN);
  return r;
}

// ---------------------------------------------------------------------------

BigFloat gamma_numeric(const BigFloat& z, mpfr_prec_t precision) {
  check_precision(precision);

  BigFloat nearest(precision);
  mpfr_round(nearest.get(), z.get());
  if (nearest.sign() <= 0 && abs(z - nearest) < BigFloat::two_pow(-static_cast<long>(precision / 2), precision)) {
    throw OracleError(OracleError::Code::PoleProximity,
                      "Gamma evaluated within 2^-" + std::to_string(precision / 2) + " of the pole " +
                          nearest.to_string(6));
  }

  const mpfr_prec_t wp = precision + 32;
  const long target = static_cast<long>(wp / 4) + 8;

  // Shift upward: Gamma(z) = Gamma(z + m) / (z (z+1) ... (z+m-1)).
  BigFloat x = z.with_precision(wp);
  BigFloat denominator(1L, wp);
  const double approx = z.to_double();
  const long shift = approx < static_cast<double>(target) ? static_cast<long>(std::ceil(target - approx)) : 0;
  for (long i = 0; i < shift; ++i) {
    denominator = denominator * x;
    x = x + BigFloat(1L, wp);
  }

  const BigFloat value = exp(log_gamma_stirling(x, wp)) / denominator;
  return value.with_precision(precision);
}

BigFloat gamma_r_numeric(const BigFloat& x, mpfr_prec_t precision) {
  const mpfr_prec_t wp = precision + 16;
  const BigFloat half_x = x.with_precision(wp) / BigFloat(2L, wp);
  const BigFloat factor = exp(-(half_x * log(BigFloat::pi(wp))));
  return (factor * gamma_numeric(half_x, wp)).with_precision(precision);
}

BigFloat gamma_c_numeric(const BigFloat& x, mpfr_prec_t precision) {
  const mpfr_prec_t wp = precision + 16;
  const BigFloat xx = x.with_precision(wp);
  const BigFloat two_pi = BigFloat(2L, wp) * BigFloat::pi(wp);
  const BigFloat factor = BigFloat(2L, wp) * exp(-(xx * log(two_pi)));
  return (factor * gamma_numeric(xx, wp)).with_precision(precision);
}

BigFloat evaluate(const GammaProduct& product, const BigFloat& s, mpfr_prec_t precision) {
  check_precision(precision);
  BigFloat acc(1L, precision);
  for (const auto& f : product.factors()) {
    const BigFloat arg = s - BigFloat(static_cast<long>(f.shift), precision);
    const BigFloat g = f.flavor == GammaFlavor::R ? gamma_r_numeric(arg, precision) : gamma_c_numeric(arg, precision);
    acc = acc * pow(g, static_cast<long>(f.exponent));
  }
  return acc;
}

BigFloat to_bigfloat(const ExactScalar& x, mpfr_prec_t precision) {
  if (x.is_zero()) return BigFloat(precision);
  const mpfr_prec_t wp = precision + 16;
  BigFloat value(x.magnitude(), wp);
  if (x.half_pi_exp() != 0) {
    const BigFloat root_pi = sqrt(BigFloat::pi(wp));
    value = value * pow(root_pi, static_cast<long>(x.half_pi_exp()));
  }
  if (x.sign() < 0) value = -value;
  return value.with_precision(precision);
}

LeadingCheck leading_check(const GammaProduct& product, std::int64_t n, const LeadingTerm& expected,
                           mpfr_prec_t precision) {
  check_precision(precision);
  const mpfr_prec_t wp = precision + 64;
  const long order = static_cast<long>(expected.order());

  const BigFloat eps = BigFloat::two_pow(-static_cast<long>(precision / 4), wp);
  const BigFloat half_eps = eps / BigFloat(2L, wp);
  const BigFloat at(static_cast<long>(n), wp);

  const BigFloat f1 = evaluate(product, at + eps, wp);
  const BigFloat f2 = evaluate(product, at + half_eps, wp);

  const BigFloat one(1L, wp);
  const BigFloat deviation = abs(f2 / f1 / BigFloat::two_pow(-order, wp) - one);
  if (deviation > BigFloat(Rational(1, 10), wp)) {
    throw OracleError(OracleError::Code::OrderMismatch,
                      "sample ratio contradicts order " + std::to_string(order) + " (deviation " +
                          deviation.to_string(6) + ")");
  }

  const BigFloat g1 = f1 * pow(eps, -order);
  const BigFloat g2 = f2 * pow(half_eps, -order);
  const BigFloat extrapolated = BigFloat(2L, wp) * g2 - g1;

  const BigFloat target = to_bigfloat(expected.coeff(), wp);
  const BigFloat rel = abs(extrapolated - target) / abs(target);
  return {rel.with_precision(precision), deviation.with_precision(precision), extrapolated.with_precision(precision)};
}

}  // namespace archfe::oracle
