#include "archfe/numberfield.hpp"

#include <cctype>
#include <sstream>

namespace archfe {

namespace {

Integer ipow(const Integer& base, std::int64_t e) {
  if (e < 0) throw std::domain_error("negative integer power");
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(e));
  return r;
}

Integer exact_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

IntPolynomial exact_div(const IntPolynomial& p, const Integer& c) {
  std::vector<Integer> out;
  out.reserve(p.coefficients().size());
  for (const auto& a : p.coefficients()) out.push_back(exact_div(a, c));
  return IntPolynomial(std::move(out));
}

int sign_of(const Integer& z) { return sgn(z) > 0 ? 1 : (sgn(z) < 0 ? -1 : 0); }

std::int64_t sign_variations(const std::vector<IntPolynomial>& seq, const Rational& x) {
  std::int64_t changes = 0;
  int last = 0;
  for (const auto& p : seq) {
    const int s = p.sign_at(x);
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

class PolyCursor {
 public:
  explicit PolyCursor(std::string_view s) : s_(s) {}
  void ws() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool done() {
    ws();
    return i_ == s_.size();
  }
  bool accept(char c) {
    ws();
    if (i_ < s_.size() && s_[i_] == c) {
      ++i_;
      return true;
    }
    return false;
  }
  bool at_digit() {
    ws();
    return i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]));
  }
  Integer number() {
    ws();
    const auto start = i_;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
    if (start == i_) fail("expected digits");
    return Integer(std::string(s_.substr(start, i_ - start)));
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw PolynomialError(PolynomialError::Code::Parse,
                          "cannot parse polynomial '" + std::string(s_) + "' at offset " + std::to_string(i_) + ": " +
                              what);
  }

 private:
  std::string_view s_;
  std::size_t i_ = 0;
};

}  // namespace

// ---------------------------------------------------------------------------

IntPolynomial::IntPolynomial(std::vector<Integer> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPolynomial IntPolynomial::parse(std::string_view text) {
  PolyCursor c(text);
  std::vector<Integer> coeffs;
  bool first = true;
  if (c.done()) c.fail("empty input");
  while (!c.done()) {
    int sign = 1;
    if (c.accept('-')) {
      sign = -1;
    } else if (!c.accept('+') && !first) {
      c.fail("expected '+' or '-'");
    }
    first = false;

    Integer coeff(1);
    bool have_number = false;
    if (c.at_digit()) {
      coeff = c.number();
      have_number = true;
    }
    std::int64_t power = 0;
    if (have_number) c.accept('*');
    if (c.accept('x')) {
      power = 1;
      if (c.accept('^')) {
        const Integer e = c.number();
        if (!e.fits_slong_p() || e > 100000) c.fail("exponent too large");
        power = e.get_si();
      }
    } else if (!have_number) {
      c.fail("expected a coefficient or x");
    }
    if (coeffs.size() <= static_cast<std::size_t>(power)) coeffs.resize(static_cast<std::size_t>(power) + 1);
    coeffs[static_cast<std::size_t>(power)] += sign * coeff;
  }
  return IntPolynomial(std::move(coeffs));
}

const Integer& IntPolynomial::leading() const {
  if (coeffs_.empty()) throw std::domain_error("zero polynomial has no leading coefficient");
  return coeffs_.back();
}

Integer IntPolynomial::coeff(std::int64_t k) const {
  if (k < 0 || k > degree()) return Integer(0);
  return coeffs_[static_cast<std::size_t>(k)];
}

IntPolynomial IntPolynomial::derivative() const {
  std::vector<Integer> out;
  for (std::size_t k = 1; k < coeffs_.size(); ++k) out.push_back(coeffs_[k] * static_cast<unsigned long>(k));
  return IntPolynomial(std::move(out));
}

Rational IntPolynomial::evaluate(const Rational& x) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + Rational(*it);
  acc.canonicalize();
  return acc;
}

int IntPolynomial::sign_at(const Rational& x) const {
  // Clear the denominator: sign(f(p/q)) = sign(sum a_k p^k q^{m-k}) since q > 0.
  if (coeffs_.empty()) return 0;
  const Integer& p = x.get_num();
  const Integer& q = x.get_den();
  Integer acc(0);
  Integer q_pow(1);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * p + *it * q_pow;
    q_pow *= q;
  }
  return sign_of(acc);
}

Integer IntPolynomial::content() const {
  Integer g(0);
  for (const auto& a : coeffs_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), a.get_mpz_t());
  return g;
}

IntPolynomial IntPolynomial::primitive_part() const {
  if (coeffs_.empty()) return {};
  Integer c = content();
  if (leading() < 0) c = -c;
  return exact_div(*this, c);
}

IntPolynomial IntPolynomial::operator-() const {
  std::vector<Integer> out;
  for (const auto& a : coeffs_) out.push_back(-a);
  return IntPolynomial(std::move(out));
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<Integer> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t k = 0; k < a.coeffs_.size(); ++k) out[k] += a.coeffs_[k];
  for (std::size_t k = 0; k < b.coeffs_.size(); ++k) out[k] += b.coeffs_[k];
  return IntPolynomial(std::move(out));
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Integer> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return IntPolynomial(std::move(out));
}

IntPolynomial operator*(const Integer& c, const IntPolynomial& a) {
  std::vector<Integer> out;
  for (const auto& x : a.coeffs_) out.push_back(c * x);
  return IntPolynomial(std::move(out));
}

std::string IntPolynomial::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::int64_t k = degree(); k >= 0; --k) {
    const Integer& a = coeffs_[static_cast<std::size_t>(k)];
    if (a == 0) continue;
    const Integer mag = abs(a);
    if (first) {
      if (a < 0) os << "-";
    } else {
      os << (a < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str() << "*";
    os << "x";
    if (k > 1) os << "^" << k;
  }
  return os.str();
}

// ---------------------------------------------------------------------------

IntPolynomial pseudo_remainder(const IntPolynomial& a, const IntPolynomial& b) {
  if (b.is_zero()) throw std::domain_error("pseudo-division by zero polynomial");
  const auto db = b.degree();
  if (a.degree() < db) return a;
  const Integer& lb = b.leading();
  std::vector<Integer> r = a.coefficients();
  auto dr = a.degree();
  std::int64_t steps = a.degree() - db + 1;
  while (dr >= db && dr >= 0) {
    const Integer lr = r[static_cast<std::size_t>(dr)];
    for (auto& x : r) x *= lb;
    for (std::int64_t k = 0; k <= db; ++k) {
      r[static_cast<std::size_t>(dr - db + k)] -= lr * b.coefficients()[static_cast<std::size_t>(k)];
    }
    --steps;
    while (dr >= 0 && r[static_cast<std::size_t>(dr)] == 0) --dr;
  }
  // Normalize to exactly lc(b)^{deg a - deg b + 1}.
  const Integer extra = ipow(lb, steps);
  for (auto& x : r) x *= extra;
  return IntPolynomial(std::move(r));
}

IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b) {
  IntPolynomial x = a.primitive_part();
  IntPolynomial y = b.primitive_part();
  if (x.is_zero()) return y;
  if (y.is_zero()) return x;
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.is_zero()) {
    IntPolynomial r = pseudo_remainder(x, y).primitive_part();
    x = std::move(y);
    y = std::move(r);
  }
  return x;
}

Integer resultant(const IntPolynomial& a_in, const IntPolynomial& b_in) {
  if (a_in.is_zero() || b_in.is_zero()) return Integer(0);
  IntPolynomial a = a_in;
  IntPolynomial b = b_in;
  int s = 1;
  if (a.degree() < b.degree()) {
    std::swap(a, b);
    if (a.degree() % 2 == 1 && b.degree() % 2 == 1) s = -s;
  }
  if (b.degree() == 0) return s * ipow(b.leading(), a.degree());

  const Integer ca = a.content();
  const Integer cb = b.content();
  const Integer t = ipow(ca, b.degree()) * ipow(cb, a.degree());
  a = exact_div(a, ca);
  b = exact_div(b, cb);

  Integer g(1);
  Integer h(1);
  while (true) {
    const auto delta = a.degree() - b.degree();
    if (a.degree() % 2 == 1 && b.degree() % 2 == 1) s = -s;
    const IntPolynomial r = pseudo_remainder(a, b);
    a = b;
    b = exact_div(r, g * ipow(h, delta));
    g = a.leading();
    h = delta == 0 ? h : exact_div(ipow(g, delta), ipow(h, delta - 1));
    if (b.is_zero()) return Integer(0);
    if (b.degree() == 0) break;
  }
  const auto da = a.degree();
  const Integer last = da == 0 ? h : exact_div(ipow(b.leading(), da), ipow(h, da - 1));
  return s * t * last;
}

Integer discriminant(const IntPolynomial& f) {
  if (f.degree() < 1) throw PolynomialError(PolynomialError::Code::Degree, "discriminant needs degree >= 1");
  if (!f.is_monic()) throw PolynomialError(PolynomialError::Code::NotMonic, f.to_string() + " is not monic");
  const auto fp = f.derivative();
  if (gcd(f, fp).degree() > 0) {
    throw PolynomialError(PolynomialError::Code::NotSquarefree, f.to_string() + " is not squarefree");
  }
  const auto m = f.degree();
  const Integer res = resultant(f, fp);
  return ((m * (m - 1) / 2) % 2 == 0) ? res : Integer(-res);
}

std::vector<IntPolynomial> sturm_sequence(const IntPolynomial& f) {
  std::vector<IntPolynomial> seq{f, f.derivative()};
  while (!seq.back().is_zero() && seq.back().degree() > 0) {
    const auto& a = seq[seq.size() - 2];
    const auto& b = seq.back();
    IntPolynomial r = pseudo_remainder(a, b);
    if (r.is_zero()) break;
    // prem = lc(b)^{k} rem; flip so the result is a positive multiple of -rem.
    const auto k = a.degree() - b.degree() + 1;
    const bool positive_scale = sgn(b.leading()) > 0 || k % 2 == 0;
    r = positive_scale ? -r : r;
    Integer c = r.content();
    seq.push_back(exact_div(r, c));
  }
  if (seq.back().is_zero()) seq.pop_back();
  return seq;
}

std::int64_t count_real_roots(const std::vector<IntPolynomial>& sturm, const Rational& a, const Rational& b) {
  return sign_variations(sturm, a) - sign_variations(sturm, b);
}

Rational root_bound(const IntPolynomial& f) {
  Integer biggest(0);
  for (std::int64_t k = 0; k < f.degree(); ++k) {
    const Integer mag = abs(f.coeff(k));
    if (mag > biggest) biggest = mag;
  }
  Rational bound = 1 + Rational(biggest, abs(f.leading()));
  bound.canonicalize();
  return bound;
}

std::pair<std::int64_t, std::int64_t> signature(const IntPolynomial& f) {
  if (f.degree() < 1) throw PolynomialError(PolynomialError::Code::Degree, "signature needs degree >= 1");
  if (gcd(f, f.derivative()).degree() > 0) {
    throw PolynomialError(PolynomialError::Code::NotSquarefree, f.to_string() + " is not squarefree");
  }
  const auto bound = root_bound(f);
  const auto r1 = count_real_roots(sturm_sequence(f), -bound, bound);
  return {r1, (f.degree() - r1) / 2};
}

// ---------------------------------------------------------------------------

void check_field(const FieldData& field) {
  if (field.r1 < 0 || field.r2 < 0 || field.r1 + 2 * field.r2 != field.degree) {
    throw std::invalid_argument("signature (" + std::to_string(field.r1) + "," + std::to_string(field.r2) +
                                ") incompatible with degree " + std::to_string(field.degree));
  }
  if (field.disc == 0) throw std::invalid_argument("discriminant must be nonzero");
  if (sign_of(field.disc) != neg_one_pow(field.r2)) {
    throw std::invalid_argument("sign of discriminant " + field.disc.get_str() + " contradicts r2 = " +
                                std::to_string(field.r2));
  }
}

FieldData field_from_polynomial(const IntPolynomial& f, std::optional<Integer> disc_override) {
  const auto [r1, r2] = signature(f);
  FieldData field{f.degree(), r1, r2, disc_override ? *disc_override : discriminant(f)};
  if (disc_override && !f.is_monic()) {
    throw PolynomialError(PolynomialError::Code::NotMonic, f.to_string() + " is not monic");
  }
  check_field(field);
  return field;
}

SchemeHodgeData field_hodge_data(const FieldData& field, std::string name) {
  check_field(field);
  SchemeHodgeData x;
  x.name = std::move(name);
  x.d = 1;
  RHodgeStructure h0(0);
  h0.add(SimplePiece::mid(0, Eps::Plus), field.r1 + field.r2);
  h0.add(SimplePiece::mid(0, Eps::Minus), field.r2);
  x.cohomology.emplace(0, std::move(h0));
  x.conductor_A = abs(field.disc);
  x.chi_real_f2 = field.r1;
  return x;
}

OrdersReport orders_report(const FieldData& field, std::int64_t n) {
  if (n <= 0) throw std::invalid_argument("orders_report needs n >= 1");
  const Integer absd = abs(field.disc);
  OrdersReport r;
  r.hc_order = ipow(absd, n - 1);
  r.tcplus_order = ipow(factorial(n - 1), field.degree) * r.hc_order;
  for (std::int64_t j = 1; j <= n; ++j) r.thh_orders[j] = absd * ipow(Integer(j), field.degree);
  return r;
}

}  // namespace archfe
