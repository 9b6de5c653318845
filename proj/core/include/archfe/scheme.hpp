// Scheme-level archimedean data: zeta(X_inf, s), the correction factor
// C(X, n), the closed-form ratios, x_inf(X, n)^2 and the identity audit.
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "archfe/exact.hpp"
#include "archfe/gamma.hpp"
#include "archfe/hodge.hpp"

namespace archfe {

/// Hodge-theoretic data of a regular proper flat arithmetic scheme X of
/// absolute dimension d: the R-Hodge structures h^i(X) on H^i(X(C), R),
/// and optionally the Bloch conductor A(X) and chi(X(R), F_2).
struct SchemeHodgeData {
  std::string name;
  std::int64_t d = 1;
  /// i -> h^i(X); absent degrees are zero.
  std::map<std::int64_t, RHodgeStructure> cohomology;
  std::optional<Integer> conductor_A;
  std::optional<std::int64_t> chi_real_f2;
  /// Free-form remark carried through catalogs (not used in computations).
  std::string remark;

  /// h^i(X), or the empty structure of weight i.
  RHodgeStructure h(std::int64_t i) const;
  /// Total Hodge number h^{p,q}(X), read from h^{p+q}(X).
  std::int64_t hodge_number(std::int64_t p, std::int64_t q) const;

  friend bool operator==(const SchemeHodgeData&, const SchemeHodgeData&) = default;
};

struct Finding {
  enum class Code {
    BadDimension,      // d < 1
    DegreeOutOfRange,  // h^i given for i outside [0, 2(d-1)]
    WeightMismatch,    // weight(h^i) != i
    HodgeRange,        // h^{p,q} != 0 with p outside [0, d-1]
    PoincareDuality,   // h^{2d-2-i} differs from h^i dual-twisted back
    BadConductor,      // A(X) <= 0
  };
  Code code;
  std::string message;

  friend bool operator==(const Finding&, const Finding&) = default;
};

std::string to_string(Finding::Code code);

/// Empty iff every hypothesis holds.
std::vector<Finding> validate(const SchemeHodgeData& x);

/// The structure h^{2d-2-i} demanded by Poincare duality: (h^i)^*(1) twisted by -d.
RHodgeStructure poincare_partner(const RHodgeStructure& hi, std::int64_t d);

struct SchemeInvariants {
  std::int64_t d_plus = 0;
  std::int64_t d_minus = 0;
  std::int64_t t_H = 0;
  /// (-1)^{d_minus + t_H}
  int sign_epsilon = 1;

  friend bool operator==(const SchemeInvariants&, const SchemeInvariants&) = default;
};

/// Alternating sums over i of the invariants of h^i(X)(n).
SchemeInvariants scheme_invariants(const SchemeHodgeData& x, std::int64_t n);

/// prod_i L_inf(h^i(X), s)^{(-1)^i} as one merged Gamma product.
GammaProduct zeta_infty_factors(const SchemeHodgeData& x);

/// Leading term of zeta(X_inf, s) at s = n.
LeadingTerm zeta_infty_leading(const SchemeHodgeData& x, std::int64_t n);

/// C(X, n) from the factorial formula
///   C(X,n)^{-1} = prod_{i <= n-1, j} (n-1-i)!^{(-1)^{i+j} h^{i,j}};
/// C(X, n) = 1 for n <= 0.
ExactScalar correction_factor(const SchemeHodgeData& x, std::int64_t n);

/// prod_{p,q} Gamma*(n-p)^{h^{p,q} (-1)^{p+q}}
ExactScalar gamma_star_product(const SchemeHodgeData& x, std::int64_t n);

/// zeta*(X_inf, n) / zeta*(X_inf, d-n) straight from the leading terms.
ExactScalar zeta_ratio_direct(const SchemeHodgeData& x, std::int64_t n);

/// Closed form of zeta*(X_inf,n)/zeta*(X_inf,d-n):
///   2^{d_+ - d_-} (2 pi)^{d_- + t_H} gamma_star_product(x, n), positive.
ExactScalar ratio_closed(const SchemeHodgeData& x, std::int64_t n);

/// Closed form of C(X,n)/C(X,d-n): gamma_star_product(x, n)^{-1}, positive.
ExactScalar c_ratio_closed(const SchemeHodgeData& x, std::int64_t n);

/// A positive real  rational * pi^(half_pi/2) * A^(half_A/2)  with the
/// conductor A kept symbolic.
class FactoredMagnitude {
 public:
  FactoredMagnitude() = default;
  /// Throws std::invalid_argument unless rational > 0.
  FactoredMagnitude(const Rational& rational, std::int64_t half_pi_exp, std::int64_t half_A_exp);
  /// |x| with A-exponent zero; throws std::domain_error on zero.
  static FactoredMagnitude from_scalar(const ExactScalar& x);
  /// A^(half_A_exp/2)
  static FactoredMagnitude conductor_power(std::int64_t half_A_exp) { return {Rational(1), 0, half_A_exp}; }

  const Rational& rational_part() const noexcept { return rational_; }
  std::int64_t half_pi_exp() const noexcept { return half_pi_; }
  std::int64_t half_A_exp() const noexcept { return half_A_; }

  FactoredMagnitude operator*(const FactoredMagnitude& other) const;
  FactoredMagnitude inverse() const;
  FactoredMagnitude pow(std::int64_t e) const;
  friend bool operator==(const FactoredMagnitude&, const FactoredMagnitude&) = default;

  /// Substitutes A when the remaining power of A is rational, i.e. when
  /// half_A_exp is even or A is a perfect square.
  std::optional<ExactScalar> fold(const Integer& A) const;

  /// "<r> * pi^E * A^F" using the ExactScalar exponent grammar for both.
  std::string to_string() const;

 private:
  Rational rational_{1};
  std::int64_t half_pi_ = 0;
  std::int64_t half_A_ = 0;
};

/// x_inf(X,n)^2 = A^{n-d/2} 2^{d_+ - d_-} (2 pi)^{d_- + t_H}, up to sign.
FactoredMagnitude x_infty_squared(const SchemeHodgeData& x, std::int64_t n);

// ---------------------------------------------------------------------------
// Audit

using CheckValue = std::variant<std::monostate, ExactScalar, FactoredMagnitude, std::int64_t>;

std::string to_string(const CheckValue& v);

enum class Verdict { Pass, Fail, Skipped };
std::string to_string(Verdict v);

/// How lhs and rhs are compared when a verdict is recomputed.
enum class Comparison { UpToSign, Exact, Recorded };

struct CheckRecord {
  std::string name;
  std::int64_t n = 0;
  CheckValue lhs;
  CheckValue rhs;
  Comparison comparison = Comparison::Exact;
  Verdict verdict = Verdict::Skipped;
  std::string note;
  /// Oracle relative error, when the check is numeric.
  std::optional<double> residual;
};

/// Recomputes a verdict from the stored values (Recorded checks keep theirs).
Verdict recompute_verdict(const CheckRecord& record);

struct AuditReport {
  std::string scheme;
  std::vector<CheckRecord> checks;

  bool passed() const;
  void append(const AuditReport& other);
};

struct AuditOptions {
  bool oracle = true;
  long precision_bits = 256;
  /// Oracle tolerance on the relative coefficient error.
  double oracle_tolerance = 1e-8;
  /// n-range for the real-points parity law.
  std::int64_t parity_lo = -4;
  std::int64_t parity_hi = 4;
  /// Include the n-independent real-points checks.
  bool real_points = true;
};

/// d_+(X,0) - d_-(X,0) = chi(X(R),F_2) and 2^{d_+(X,n) - d_-(X,n)} =
/// (2^chi)^{(-1)^n} for n in [lo, hi]. Skipped with a note without chi.
AuditReport real_points_consistency(const SchemeHodgeData& x, std::int64_t lo = -4, std::int64_t hi = 4);

/// Runs every identity check for (X, n). Failures are verdicts, not exceptions.
AuditReport audit(const SchemeHodgeData& x, std::int64_t n, const AuditOptions& options = {});

/// audit() for every n in [lo, hi], one task per n, assembled in n order.
/// The real-points checks are included once.
AuditReport audit_range(const SchemeHodgeData& x, std::int64_t lo, std::int64_t hi, const AuditOptions& options = {});

/// Default sweep range [-5, d+5].
std::pair<std::int64_t, std::int64_t> default_n_range(const SchemeHodgeData& x);

}  // namespace archfe
