// The d = 1 specialization: integer polynomials, discriminants, signatures
// and the order formulas for HC, THH and TC+ of a ring of integers.
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "archfe/exact.hpp"
#include "archfe/scheme.hpp"

namespace archfe {

class PolynomialError : public std::invalid_argument {
 public:
  enum class Code { Parse, NotMonic, NotSquarefree, Degree };
  PolynomialError(Code code, const std::string& what) : std::invalid_argument(what), code_(code) {}
  Code code() const noexcept { return code_; }

 private:
  Code code_;
};

/// Dense polynomial over Z, coefficients from the constant term up. The
/// zero polynomial has no coefficients; otherwise the last one is nonzero.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<Integer> coefficients);

  /// Parses "x^3 - x - 1" style text with integer coefficients in the variable x.
  static IntPolynomial parse(std::string_view text);

  const std::vector<Integer>& coefficients() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  std::int64_t degree() const noexcept { return static_cast<std::int64_t>(coeffs_.size()) - 1; }
  const Integer& leading() const;
  bool is_monic() const { return !is_zero() && leading() == 1; }
  /// Coefficient of x^k (zero past the degree).
  Integer coeff(std::int64_t k) const;

  IntPolynomial derivative() const;
  Rational evaluate(const Rational& x) const;
  /// Sign of the polynomial at x.
  int sign_at(const Rational& x) const;
  /// gcd of the coefficients, nonnegative.
  Integer content() const;
  /// Divides by the content (leading coefficient kept positive).
  IntPolynomial primitive_part() const;

  IntPolynomial operator-() const;
  friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) { return a + (-b); }
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(const Integer& c, const IntPolynomial& a);
  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

  /// "x^3 - x - 1"; the zero polynomial prints as "0".
  std::string to_string() const;

 private:
  void trim();
  std::vector<Integer> coeffs_;
};

/// lc(b)^{deg a - deg b + 1} a = q b + r with deg r < deg b.
IntPolynomial pseudo_remainder(const IntPolynomial& a, const IntPolynomial& b);

/// Primitive gcd over Z[x] (positive leading coefficient).
IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b);

/// Resultant by the subresultant pseudo-remainder sequence.
Integer resultant(const IntPolynomial& a, const IntPolynomial& b);

/// disc(f) = (-1)^{m(m-1)/2} Res(f, f') for monic squarefree f, i.e. the
/// discriminant of the order Z[x]/(f). Throws PolynomialError.
Integer discriminant(const IntPolynomial& f);

/// Sturm sequence f, f', -prem(...), ... with positive rescalings only.
std::vector<IntPolynomial> sturm_sequence(const IntPolynomial& f);

/// Number of distinct real roots in (a, b] via sign variations.
std::int64_t count_real_roots(const std::vector<IntPolynomial>& sturm, const Rational& a, const Rational& b);

/// Cauchy bound 1 + max|a_i| / |lead|: every real root lies strictly inside (-B, B).
Rational root_bound(const IntPolynomial& f);

/// (r1, r2) of a monic squarefree f. Throws PolynomialError.
std::pair<std::int64_t, std::int64_t> signature(const IntPolynomial& f);

struct FieldData {
  std::int64_t degree = 1;
  std::int64_t r1 = 1;
  std::int64_t r2 = 0;
  Integer disc{1};

  friend bool operator==(const FieldData&, const FieldData&) = default;
};

/// Field data from a defining polynomial. The discriminant of Z[x]/(f) is
/// used unless `disc_override` supplies the field discriminant (they differ
/// by a square index when Z[x]/(f) is not maximal). Throws std::invalid_argument
/// when the invariants r1 + 2 r2 = m and sign(D) = (-1)^{r2} fail.
FieldData field_from_polynomial(const IntPolynomial& f, std::optional<Integer> disc_override = std::nullopt);

/// Throws std::invalid_argument unless r1 + 2 r2 = m, D != 0 and sign(D) = (-1)^{r2}.
void check_field(const FieldData& field);

/// d = 1; h^0 = (r1 + r2) M_{0,+} + r2 M_{0,-}; A = |D|; chi = r1.
SchemeHodgeData field_hodge_data(const FieldData& field, std::string name = "F");

struct OrdersReport {
  /// |HC_{2n-3}| [O_F : HC_{2n-2}] = |D|^{n-1}
  Integer hc_order;
  /// |TC+_{2n-3}| [O_F : TC+_{2n-2}] = (n-1)!^m |D|^{n-1}
  Integer tcplus_order;
  /// j -> |D_F^{-1} / j O_F| = |D| j^m, for 1 <= j <= n
  std::map<std::int64_t, Integer> thh_orders;
};

/// Throws std::invalid_argument for n <= 0.
OrdersReport orders_report(const FieldData& field, std::int64_t n);

}  // namespace archfe
