#include "oracles.hpp"

#include <algorithm>
#include <stdexcept>

namespace archfe::testing {

Integer bareiss_determinant(Matrix m) {
  const std::size_t n = m.size();
  if (n == 0) return Integer(1);
  int sign = 1;
  Integer prev(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t r = k + 1;
      while (r < n && m[r][k] == 0) ++r;
      if (r == n) return Integer(0);
      std::swap(m[k], m[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        m[i][j] = t;
      }
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

Integer sylvester_resultant(const IntPolynomial& f, const IntPolynomial& g) {
  const auto m = static_cast<std::size_t>(f.degree());
  const auto n = static_cast<std::size_t>(g.degree());
  Matrix s(m + n, std::vector<Integer>(m + n, Integer(0)));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t k = 0; k <= m; ++k) s[r][r + k] = f.coeff(static_cast<std::int64_t>(m - k));
  }
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t k = 0; k <= n; ++k) s[n + r][r + k] = g.coeff(static_cast<std::int64_t>(n - k));
  }
  return bareiss_determinant(std::move(s));
}

Integer sylvester_discriminant(const IntPolynomial& f) {
  const auto m = f.degree();
  if (m == 1) return Integer(1);
  Integer res = sylvester_resultant(f, f.derivative());
  mpz_divexact(res.get_mpz_t(), res.get_mpz_t(), f.leading().get_mpz_t());
  return ((m * (m - 1) / 2) % 2 == 0) ? res : Integer(-res);
}

std::vector<Integer> newton_power_sums(const IntPolynomial& f, std::size_t count) {
  const auto m = f.degree();
  // f = x^m + c_{m-1} x^{m-1} + ... + c_0, e_k = (-1)^k c_{m-k}.
  std::vector<Integer> p(count, Integer(0));
  if (count == 0) return p;
  p[0] = m;
  for (std::size_t k = 1; k < count; ++k) {
    Integer acc(0);
    const auto kk = static_cast<std::int64_t>(k);
    for (std::int64_t i = 1; i <= std::min<std::int64_t>(kk - 1, m); ++i) acc += f.coeff(m - i) * p[k - i];
    if (kk <= m) acc += kk * f.coeff(m - kk);
    p[k] = -acc;
  }
  return p;
}

Matrix trace_matrix(const IntPolynomial& f) {
  const auto m = static_cast<std::size_t>(f.degree());
  const auto p = newton_power_sums(f, 2 * m);
  Matrix t(m, std::vector<Integer>(m));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) t[i][j] = p[i + j];
  }
  return t;
}

Integer thh_lattice_index(const IntPolynomial& f, std::int64_t j) {
  auto t = trace_matrix(f);
  for (auto& row : t) {
    for (auto& x : row) x *= j;
  }
  return abs(bareiss_determinant(std::move(t)));
}

namespace {

int variations(const std::vector<Integer>& a) {
  int v = 0;
  int last = 0;
  for (const auto& x : a) {
    const int s = sgn(x);
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

// Coefficients low to high; number of roots in (0, 1) of a squarefree polynomial.
std::int64_t roots_in_unit_interval(const std::vector<Integer>& g) {
  const std::size_t m = g.size() - 1;
  // (x+1)^m g(1/(x+1)): reverse, then Taylor shift by one.
  std::vector<Integer> t(g.rbegin(), g.rend());
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = m - 1; j + 1 > i; --j) t[j] += t[j + 1];
  }
  const int v = variations(t);
  if (v <= 1) return v;

  // Left half: 2^m g(x/2); right half: left shifted by one.
  std::vector<Integer> left(m + 1);
  for (std::size_t k = 0; k <= m; ++k) {
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 2, static_cast<unsigned long>(m - k));
    left[k] = g[k] * scale;
  }
  std::vector<Integer> right = left;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = m - 1; j + 1 > i; --j) right[j] += right[j + 1];
  }
  // right(0) = left(1) = 2^m g(1/2).
  const std::int64_t mid = right[0] == 0 ? 1 : 0;
  return roots_in_unit_interval(left) + roots_in_unit_interval(right) + mid;
}

std::vector<Integer> scaled_to_unit(const IntPolynomial& f, const Integer& b, int sign) {
  // f(sign * b * x)
  std::vector<Integer> out;
  Integer power(1);
  for (std::int64_t k = 0; k <= f.degree(); ++k) {
    out.push_back(f.coeff(k) * power);
    power *= sign * b;
  }
  return out;
}

}  // namespace

std::int64_t bisection_real_roots(const IntPolynomial& f) {
  Integer b(1);
  for (std::int64_t k = 0; k < f.degree(); ++k) b = std::max(b, Integer(abs(f.coeff(k))));
  b += 1;
  std::int64_t count = f.coeff(0) == 0 ? 1 : 0;
  count += roots_in_unit_interval(scaled_to_unit(f, b, 1));
  count += roots_in_unit_interval(scaled_to_unit(f, b, -1));
  return count;
}

ExactScalar gamma_star_reference(std::int64_t j) {
  if (j >= 1) {
    Integer f(1);
    for (std::int64_t k = 2; k < j; ++k) f *= k;
    return ExactScalar(Rational(f));
  }
  // Residue of Gamma at -k is (-1)^k / k!.
  const auto k = -j;
  Integer f(1);
  for (std::int64_t i = 2; i <= k; ++i) f *= i;
  return ExactScalar(Rational(k % 2 == 0 ? 1 : -1, 1) / Rational(f));
}

ExactScalar proof_table_row(const SimplePiece& piece) {
  const auto p = piece.p();
  const ExactScalar half_pi(Rational(1, 2), 2);
  if (piece.is_pq()) {
    return ExactScalar::two_pi_power(p + piece.q() + 1) * gamma_star_reference(-p) *
           gamma_star_reference(-piece.q());
  }
  ExactScalar row = ExactScalar(2L) * ExactScalar::two_pi_power(p) * gamma_star_reference(-p);
  const bool p_odd = p % 2 != 0;
  const bool extra = piece.eps() == Eps::Plus ? p_odd : !p_odd;
  if (extra) row *= half_pi;
  return row.abs();
}

ExactScalar closed_form_from_invariants(const HodgeInvariants& inv) {
  const auto e2 = inv.d_plus - inv.d_minus;
  ExactScalar out = ExactScalar(Rational(2)).pow(e2) * ExactScalar::two_pi_power(inv.d_minus + inv.t_H);
  for (const auto& [j, hj] : inv.h) out *= gamma_star_reference(-j).pow(hj);
  return out.abs();
}

std::vector<SimplePiece> simple_pieces(std::int64_t lo, std::int64_t hi) {
  std::vector<SimplePiece> out;
  for (auto p = lo; p <= hi; ++p) {
    for (auto q = p + 1; q <= hi; ++q) out.push_back(SimplePiece::pq(p, q));
    out.push_back(SimplePiece::mid(p, Eps::Plus));
    out.push_back(SimplePiece::mid(p, Eps::Minus));
  }
  return out;
}

Multiset random_multiset(std::mt19937_64& rng, int max_distinct, std::int64_t lo, std::int64_t hi,
                         std::int64_t max_mult) {
  const auto all = simple_pieces(lo, hi);
  std::uniform_int_distribution<int> how_many(1, max_distinct);
  std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
  std::uniform_int_distribution<std::int64_t> mult(1, max_mult);
  std::map<SimplePiece, std::int64_t> chosen;
  const int k = how_many(rng);
  for (int i = 0; i < k; ++i) chosen[all[pick(rng)]] += mult(rng);
  return {chosen.begin(), chosen.end()};
}

RHodgeStructure random_structure(std::mt19937_64& rng, std::int64_t w, std::int64_t lo, std::int64_t hi,
                                 int max_distinct) {
  std::vector<SimplePiece> candidates;
  for (const auto& piece : simple_pieces(lo, hi)) {
    if (piece.weight() == w) candidates.push_back(piece);
  }
  RHodgeStructure m(w);
  if (candidates.empty()) return m;
  std::uniform_int_distribution<int> how_many(0, max_distinct);
  std::uniform_int_distribution<std::size_t> pick(0, candidates.size() - 1);
  std::uniform_int_distribution<std::int64_t> mult(1, 3);
  const int k = how_many(rng);
  for (int i = 0; i < k; ++i) m.add(candidates[pick(rng)], mult(rng));
  return m;
}

oracle::BigFloat mpfr_gamma_reference(const oracle::BigFloat& z) {
  oracle::BigFloat r(z.precision());
  mpfr_gamma(r.get(), z.get(), MPFR_RNDN);
  return r;
}

}  // namespace archfe::testing
