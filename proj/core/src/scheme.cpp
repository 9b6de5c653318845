#include "archfe/scheme.hpp"

#include <future>
#include <sstream>

#include "archfe/oracle.hpp"

namespace archfe {

namespace {

using HodgeTable = std::map<std::pair<std::int64_t, std::int64_t>, std::int64_t>;

// Every nonzero h^{p,q}(X), both orders of off-diagonal pairs.
HodgeTable hodge_table(const SchemeHodgeData& x) {
  HodgeTable table;
  for (const auto& [i, m] : x.cohomology) {
    for (const auto& [piece, mult] : m.pieces()) {
      table[{piece.p(), piece.q()}] += mult;
      if (piece.is_pq()) table[{piece.q(), piece.p()}] += mult;
    }
  }
  return table;
}

ExactScalar two_power(std::int64_t e) { return ExactScalar(Rational(2)).pow(e); }

CheckRecord make_check(std::string name, std::int64_t n, CheckValue lhs, CheckValue rhs, Comparison comparison,
                       std::string note = {}) {
  CheckRecord r{std::move(name), n, std::move(lhs), std::move(rhs), comparison, Verdict::Skipped, std::move(note), {}};
  r.verdict = recompute_verdict(r);
  return r;
}

std::string pow_suffix(const char* base, std::int64_t half) {
  if (half == 0) return {};
  std::string out = std::string(" * ") + base + "^";
  if (half % 2 == 0) return out + std::to_string(half / 2);
  return out + "(" + std::to_string(half) + "/2)";
}

}  // namespace

RHodgeStructure SchemeHodgeData::h(std::int64_t i) const {
  auto it = cohomology.find(i);
  return it == cohomology.end() ? RHodgeStructure(i) : it->second;
}

std::int64_t SchemeHodgeData::hodge_number(std::int64_t p, std::int64_t q) const { return h(p + q).hodge_number(p, q); }

std::string to_string(Finding::Code code) {
  switch (code) {
    case Finding::Code::BadDimension: return "bad dimension";
    case Finding::Code::DegreeOutOfRange: return "degree out of range";
    case Finding::Code::WeightMismatch: return "weight mismatch";
    case Finding::Code::HodgeRange: return "Hodge numbers out of range";
    case Finding::Code::PoincareDuality: return "Poincare duality violated";
    case Finding::Code::BadConductor: return "bad conductor";
  }
  return "unknown";
}

RHodgeStructure poincare_partner(const RHodgeStructure& hi, std::int64_t d) { return twist(dual_twist(hi), -d); }

std::vector<Finding> validate(const SchemeHodgeData& x) {
  std::vector<Finding> out;
  auto add = [&](Finding::Code code, std::string msg) { out.push_back({code, std::move(msg)}); };

  if (x.d < 1) {
    add(Finding::Code::BadDimension, "d must be positive, got " + std::to_string(x.d));
    return out;
  }
  if (x.conductor_A && *x.conductor_A <= 0) add(Finding::Code::BadConductor, "conductor must be positive");

  const auto top = 2 * (x.d - 1);
  bool weights_ok = true;
  for (const auto& [i, m] : x.cohomology) {
    if (i < 0 || i > top) {
      add(Finding::Code::DegreeOutOfRange,
          "h^" + std::to_string(i) + " outside [0, " + std::to_string(top) + "]");
      weights_ok = false;
    }
    if (m.weight() != i) {
      add(Finding::Code::WeightMismatch,
          "weight mismatch: h^" + std::to_string(i) + " has weight " + std::to_string(m.weight()));
      weights_ok = false;
    }
    for (const auto& [piece, mult] : m.pieces()) {
      const bool in_range = piece.p() >= 0 && piece.q() <= x.d - 1;
      if (!in_range) {
        add(Finding::Code::HodgeRange, "h^" + std::to_string(i) + " contains " + piece.to_string() +
                                           " outside 0 <= p,q <= " + std::to_string(x.d - 1));
      }
    }
  }

  if (weights_ok) {
    for (std::int64_t i = 0; i <= x.d - 1; ++i) {
      const auto expected = poincare_partner(x.h(i), x.d);
      const auto actual = x.h(top - i);
      if (!(expected == actual)) {
        add(Finding::Code::PoincareDuality, "h^" + std::to_string(top - i) + " = " + actual.to_string() +
                                                " but duality with h^" + std::to_string(i) + " requires " +
                                                expected.to_string());
      }
    }
  }
  return out;
}

SchemeInvariants scheme_invariants(const SchemeHodgeData& x, std::int64_t n) {
  SchemeInvariants out;
  for (const auto& [i, m] : x.cohomology) {
    const auto inv = invariants(twist(m, n));
    const int s = neg_one_pow(i);
    out.d_plus += s * inv.d_plus;
    out.d_minus += s * inv.d_minus;
    out.t_H = checked_add(out.t_H, s * inv.t_H);
  }
  out.sign_epsilon = neg_one_pow(out.d_minus + out.t_H);
  return out;
}

GammaProduct zeta_infty_factors(const SchemeHodgeData& x) {
  GammaProduct product;
  for (const auto& [i, m] : x.cohomology) product.multiply(linfty_factors(m), neg_one_pow(i));
  return product;
}

LeadingTerm zeta_infty_leading(const SchemeHodgeData& x, std::int64_t n) {
  auto acc = LeadingTerm::unit();
  for (const auto& [i, m] : x.cohomology) acc = lt_combine(acc, product_leading(linfty_factors(m), n), neg_one_pow(i));
  return acc;
}

ExactScalar correction_factor(const SchemeHodgeData& x, std::int64_t n) {
  if (n <= 0) return ExactScalar::one();
  Rational inverse(1);
  for (const auto& [pq, h] : hodge_table(x)) {
    const auto [i, j] = pq;
    if (i > n - 1) continue;
    const Integer f = factorial(n - 1 - i);
    Integer f_pow;
    mpz_pow_ui(f_pow.get_mpz_t(), f.get_mpz_t(), static_cast<unsigned long>(h));
    if (neg_one_pow(i + j) > 0) {
      inverse *= f_pow;
    } else {
      inverse /= f_pow;
    }
  }
  return ExactScalar(1 / inverse);
}

ExactScalar gamma_star_product(const SchemeHodgeData& x, std::int64_t n) {
  auto value = ExactScalar::one();
  for (const auto& [pq, h] : hodge_table(x)) {
    const auto [p, q] = pq;
    value *= gamma_star(checked_add(n, -p)).pow(checked_mul(h, neg_one_pow(p + q)));
  }
  return value;
}

ExactScalar zeta_ratio_direct(const SchemeHodgeData& x, std::int64_t n) {
  return zeta_infty_leading(x, n).coeff() / zeta_infty_leading(x, x.d - n).coeff();
}

ExactScalar ratio_closed(const SchemeHodgeData& x, std::int64_t n) {
  const auto inv = scheme_invariants(x, n);
  return (two_power(inv.d_plus - inv.d_minus) * ExactScalar::two_pi_power(inv.d_minus + inv.t_H) *
          gamma_star_product(x, n))
      .abs();
}

ExactScalar c_ratio_closed(const SchemeHodgeData& x, std::int64_t n) { return gamma_star_product(x, n).inverse().abs(); }

// ---------------------------------------------------------------------------

FactoredMagnitude::FactoredMagnitude(const Rational& rational, std::int64_t half_pi_exp, std::int64_t half_A_exp)
    : rational_(rational), half_pi_(half_pi_exp), half_A_(half_A_exp) {
  rational_.canonicalize();
  if (sgn(rational_) <= 0) throw std::invalid_argument("FactoredMagnitude requires a positive rational part");
}

FactoredMagnitude FactoredMagnitude::from_scalar(const ExactScalar& x) {
  if (x.is_zero()) throw std::domain_error("zero has no factored magnitude");
  return {x.magnitude(), x.half_pi_exp(), 0};
}

FactoredMagnitude FactoredMagnitude::operator*(const FactoredMagnitude& other) const {
  return {rational_ * other.rational_, checked_add(half_pi_, other.half_pi_), checked_add(half_A_, other.half_A_)};
}

FactoredMagnitude FactoredMagnitude::inverse() const {
  return {1 / rational_, checked_mul(-1, half_pi_), checked_mul(-1, half_A_)};
}

FactoredMagnitude FactoredMagnitude::pow(std::int64_t e) const {
  const auto r = ExactScalar(rational_).pow(e);
  return {r.magnitude(), checked_mul(half_pi_, e), checked_mul(half_A_, e)};
}

std::optional<ExactScalar> FactoredMagnitude::fold(const Integer& A) const {
  if (A <= 0) return std::nullopt;
  Integer base = A;
  std::int64_t exponent = half_A_ / 2;
  if (half_A_ % 2 != 0) {
    if (mpz_perfect_square_p(A.get_mpz_t()) == 0) return std::nullopt;
    mpz_sqrt(base.get_mpz_t(), A.get_mpz_t());
    exponent = half_A_;
  }
  return ExactScalar(rational_, half_pi_) * ExactScalar(Rational(base)).pow(exponent);
}

std::string FactoredMagnitude::to_string() const {
  return rational_.get_str() + pow_suffix("pi", half_pi_) + pow_suffix("A", half_A_);
}

FactoredMagnitude x_infty_squared(const SchemeHodgeData& x, std::int64_t n) {
  const auto inv = scheme_invariants(x, n);
  const auto rest = two_power(inv.d_plus - inv.d_minus) * ExactScalar::two_pi_power(inv.d_minus + inv.t_H);
  return FactoredMagnitude::from_scalar(rest) *
         FactoredMagnitude::conductor_power(checked_add(checked_mul(2, n), -x.d));
}

// ---------------------------------------------------------------------------

std::string to_string(const CheckValue& v) {
  return std::visit(
      [](const auto& value) -> std::string {
        using T = std::decay_t<decltype(value)>;
        if constexpr (std::is_same_v<T, std::monostate>) {
          return "-";
        } else if constexpr (std::is_same_v<T, std::int64_t>) {
          return std::to_string(value);
        } else {
          return value.to_string();
        }
      },
      v);
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "FAIL";
    case Verdict::Skipped: return "skipped";
  }
  return "unknown";
}

Verdict recompute_verdict(const CheckRecord& record) {
  if (record.comparison == Comparison::Recorded) return record.verdict;
  if (std::holds_alternative<std::monostate>(record.lhs) || std::holds_alternative<std::monostate>(record.rhs)) {
    return Verdict::Skipped;
  }
  if (record.lhs.index() != record.rhs.index()) return Verdict::Fail;
  if (record.comparison == Comparison::UpToSign) {
    if (const auto* a = std::get_if<ExactScalar>(&record.lhs)) {
      return eq_up_to_sign(*a, std::get<ExactScalar>(record.rhs)) ? Verdict::Pass : Verdict::Fail;
    }
    if (const auto* a = std::get_if<std::int64_t>(&record.lhs)) {
      const auto b = std::get<std::int64_t>(record.rhs);
      return (*a == b || *a == -b) ? Verdict::Pass : Verdict::Fail;
    }
  }
  return record.lhs == record.rhs ? Verdict::Pass : Verdict::Fail;
}

bool AuditReport::passed() const {
  for (const auto& c : checks) {
    if (c.verdict == Verdict::Fail) return false;
  }
  return true;
}

void AuditReport::append(const AuditReport& other) { checks.insert(checks.end(), other.checks.begin(), other.checks.end()); }

std::pair<std::int64_t, std::int64_t> default_n_range(const SchemeHodgeData& x) { return {-5, x.d + 5}; }

AuditReport real_points_consistency(const SchemeHodgeData& x, std::int64_t lo, std::int64_t hi) {
  AuditReport report{x.name, {}};
  if (!x.chi_real_f2) {
    CheckRecord skipped{"real_points_euler", 0, {}, {}, Comparison::Exact, Verdict::Skipped,
                        "chi(X(R),F2) not supplied", {}};
    report.checks.push_back(std::move(skipped));
    return report;
  }
  const auto chi = *x.chi_real_f2;
  const auto at0 = scheme_invariants(x, 0);
  report.checks.push_back(
      make_check("real_points_euler", 0, at0.d_plus - at0.d_minus, chi, Comparison::Exact, "d+(X,0) - d-(X,0) = chi"));
  for (std::int64_t n = lo; n <= hi; ++n) {
    const auto inv = scheme_invariants(x, n);
    report.checks.push_back(make_check("real_points_parity", n, two_power(inv.d_plus - inv.d_minus),
                                       two_power(chi).pow(neg_one_pow(n)), Comparison::Exact,
                                       "2^{d+ - d-} = (2^chi)^{(-1)^n}"));
  }
  return report;
}

AuditReport audit(const SchemeHodgeData& x, std::int64_t n, const AuditOptions& options) {
  AuditReport report{x.name, {}};
  auto& checks = report.checks;
  const auto dual_n = x.d - n;

  {
    const auto findings = validate(x);
    std::string note;
    for (const auto& f : findings) note += (note.empty() ? "" : "; ") + f.message;
    CheckRecord rec{"validate", n, static_cast<std::int64_t>(findings.size()), std::int64_t{0}, Comparison::Exact,
                    Verdict::Skipped, note.empty() ? "all hypotheses hold" : note, {}};
    rec.verdict = recompute_verdict(rec);
    checks.push_back(std::move(rec));
  }

  const auto zeta_n = zeta_infty_leading(x, n);
  const auto zeta_dual = zeta_infty_leading(x, dual_n);
  const auto c_n = correction_factor(x, n);
  const auto c_dual = correction_factor(x, dual_n);

  // (a) archimedean ratio: direct quotient of leading coefficients vs closed form.
  const auto zeta_ratio = zeta_n.coeff() / zeta_dual.coeff();
  checks.push_back(make_check("zeta_ratio", n, zeta_ratio, ratio_closed(x, n), Comparison::UpToSign,
                              "zeta*(X_inf,n)/zeta*(X_inf,d-n) vs 2^{d+-d-}(2pi)^{d-+tH} prod Gamma*"));

  // (b) correction factor ratio.
  const auto c_ratio = c_n / c_dual;
  checks.push_back(make_check("c_ratio", n, c_ratio, c_ratio_closed(x, n), Comparison::UpToSign,
                              "C(X,n)/C(X,d-n) vs (prod Gamma*)^-1"));

  // (c) symmetry of x_inf^2.
  const auto x2 = x_infty_squared(x, n);
  const auto x2_dual = x_infty_squared(x, dual_n);
  checks.push_back(make_check("x_infty_sym", n, x2 * x2_dual, FactoredMagnitude(), Comparison::Exact,
                              "x_inf(X,n)^2 x_inf(X,d-n)^2 = 1"));

  // x_inf^2 against A^{n-d/2} times the two direct ratios.
  const auto direct_product = FactoredMagnitude::from_scalar(zeta_ratio * c_ratio) *
                              FactoredMagnitude::conductor_power(2 * n - x.d);
  checks.push_back(make_check("x_infty_formula", n, x2, direct_product, Comparison::Exact,
                              "x_inf^2 = A^{n-d/2} (zeta* ratio)(C ratio), magnitudes"));

  // (d) squared form of  A^{n/2} zeta*(n) x(n)^-1 C(n) = +- A^{(d-n)/2} zeta*(d-n) x(d-n)^-1 C(d-n).
  {
    auto side = [&](std::int64_t m, const LeadingTerm& z, const ExactScalar& c, const FactoredMagnitude& xsq) {
      return FactoredMagnitude::conductor_power(2 * m) * FactoredMagnitude::from_scalar(z.coeff()).pow(2) *
             xsq.inverse() * FactoredMagnitude::from_scalar(c).pow(2);
    };
    const auto lhs = side(n, zeta_n, c_n, x2);
    const auto rhs = side(dual_n, zeta_dual, c_dual, x2_dual);
    auto rec = make_check("fe_identity", n, lhs, rhs, Comparison::Exact, "squared, A symbolic");
    if (x.conductor_A) {
      const auto fl = lhs.fold(*x.conductor_A);
      const auto fr = rhs.fold(*x.conductor_A);
      if (fl && fr) rec.note += "; folded at A=" + x.conductor_A->get_str() + ": " + fl->to_string();
    } else {
      rec.note += "; A unknown";
    }
    checks.push_back(std::move(rec));
  }

  // Sign remark: eps_B eps_dR = (-1)^{d_-(X,n)+t_H(X,n)} = (-1)^{d_-(X,0) + (d-1)chi/2}.
  {
    const auto inv = scheme_invariants(x, n);
    const auto inv0 = scheme_invariants(x, 0);
    std::int64_t betti_chi = 0;
    for (const auto& [i, m] : x.cohomology) betti_chi += neg_one_pow(i) * m.dim();
    const auto twice = checked_mul(x.d - 1, betti_chi);
    if (twice % 2 != 0) {
      CheckRecord rec{"sign_epsilon", n, std::int64_t{inv.sign_epsilon}, {}, Comparison::Recorded, Verdict::Fail,
                      "(d-1)*chi is odd", {}};
      checks.push_back(std::move(rec));
    } else {
      checks.push_back(make_check("sign_epsilon", n, std::int64_t{inv.sign_epsilon},
                                  std::int64_t{neg_one_pow(inv0.d_minus + twice / 2)}, Comparison::Exact,
                                  "(-1)^{d-(X,n)+tH(X,n)} = (-1)^{d-(X,0)+(d-1)chi/2}"));
    }
    const bool even = n % 2 == 0;
    checks.push_back(make_check("d_plus_parity", n, inv.d_plus, even ? inv0.d_plus : inv0.d_minus, Comparison::Exact,
                                "d+(X,n) = d_{(-1)^n}(X,0)"));
    checks.push_back(make_check("d_minus_parity", n, inv.d_minus, even ? inv0.d_minus : inv0.d_plus, Comparison::Exact,
                                "d-(X,n) = d_{-(-1)^n}(X,0)"));
  }

  if (x.d == 1) {
    std::int64_t degree = x.h(0).dim();
    const auto expected = n >= 1 ? ExactScalar(Rational(factorial(n - 1))).pow(-degree) : ExactScalar::one();
    checks.push_back(make_check("field_correction_factor", n, c_n, expected, Comparison::Exact,
                                "C(Spec O_F,n) = (n-1)!^{-[F:Q]}"));
  }

  if (options.real_points) report.append(real_points_consistency(x, options.parity_lo, options.parity_hi));

  if (options.oracle) {
    const auto factors = zeta_infty_factors(x);
    for (const auto& [m, lt] : {std::pair{n, zeta_n}, std::pair{dual_n, zeta_dual}}) {
      CheckRecord rec{"oracle_zeta", m, lt.coeff(), {}, Comparison::Recorded, Verdict::Fail, {}, {}};
      try {
        const auto check = oracle::leading_check(factors, m, lt, options.precision_bits);
        const double rel = check.relative_error.to_double();
        rec.residual = rel;
        rec.verdict = rel < options.oracle_tolerance ? Verdict::Pass : Verdict::Fail;
        rec.note = "order " + std::to_string(lt.order()) + " confirmed; numeric coeff " + check.coefficient.to_string(12);
      } catch (const oracle::OracleError& e) {
        rec.note = e.what();
      }
      checks.push_back(std::move(rec));
    }
  }
  return report;
}

AuditReport audit_range(const SchemeHodgeData& x, std::int64_t lo, std::int64_t hi, const AuditOptions& options) {
  std::vector<std::future<AuditReport>> tasks;
  for (std::int64_t n = lo; n <= hi; ++n) {
    AuditOptions per_n = options;
    per_n.real_points = options.real_points && n == lo;
    tasks.push_back(std::async(std::launch::async, [&x, n, per_n] { return audit(x, n, per_n); }));
  }
  AuditReport report{x.name, {}};
  for (auto& t : tasks) report.append(t.get());
  return report;
}

}  // namespace archfe
