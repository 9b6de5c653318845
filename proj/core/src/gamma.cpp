#include "archfe/gamma.hpp"

#include <sstream>

namespace archfe {

ExactScalar gamma_star(std::int64_t j) {
  if (j >= 1) return ExactScalar(Rational(factorial(j - 1)));
  return ExactScalar(Rational(neg_one_pow(j), factorial(-j)));
}

LeadingTerm gamma_leading_half(std::int64_t doubled_z) {
  if (doubled_z % 2 == 0) {
    const auto k = doubled_z / 2;
    return LeadingTerm(k >= 1 ? 0 : -1, gamma_star(k));
  }
  // z = k + 1/2; walk Gamma(z+1) = z Gamma(z) away from Gamma(1/2) = sqrt(pi).
  const auto k = (doubled_z - 1) / 2;
  Rational r(1);
  if (k >= 0) {
    for (std::int64_t i = 0; i < k; ++i) r *= Rational(2 * i + 1, 2);
  } else {
    for (std::int64_t i = k; i < 0; ++i) r /= Rational(2 * i + 1, 2);
  }
  r.canonicalize();
  return LeadingTerm(0, ExactScalar(r, 1));
}

LeadingTerm gamma_r_leading(std::int64_t n) {
  // Gamma(s/2) in the variable u = (s-n)/2; rescaling u^m to (s-n)^m costs 2^{-m}.
  const auto inner = gamma_leading_half(n);
  const auto rescale = ExactScalar(Rational(2)).pow(-inner.order());
  return LeadingTerm(inner.order(), inner.coeff() * rescale * ExactScalar::pi_power(-n));
}

LeadingTerm gamma_c_leading(std::int64_t n) {
  const auto inner = gamma_leading_half(checked_mul(2, n));
  return LeadingTerm(inner.order(), ExactScalar(2L) * ExactScalar::two_pi_power(-n) * inner.coeff());
}

// ---------------------------------------------------------------------------

GammaProduct& GammaProduct::multiply(GammaFlavor flavor, std::int64_t shift, std::int64_t exponent) {
  if (exponent == 0) return *this;
  const Key key{flavor, shift};
  const auto e = checked_add(exponents_[key], exponent);
  if (e == 0) {
    exponents_.erase(key);
  } else {
    exponents_[key] = e;
  }
  return *this;
}

GammaProduct& GammaProduct::multiply(const GammaProduct& other, std::int64_t exponent) {
  for (const auto& [key, e] : other.exponents_) multiply(key.first, key.second, checked_mul(e, exponent));
  return *this;
}

std::vector<GammaFactor> GammaProduct::factors() const {
  std::vector<GammaFactor> out;
  out.reserve(exponents_.size());
  for (const auto& [key, e] : exponents_) out.push_back({key.first, key.second, e});
  return out;
}

std::string GammaProduct::to_string() const {
  if (exponents_.empty()) return "1";
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, e] : exponents_) {
    if (!first) os << " * ";
    first = false;
    os << (key.first == GammaFlavor::R ? "Gamma_R(s" : "Gamma_C(s");
    if (key.second > 0) os << "-" << key.second;
    if (key.second < 0) os << "+" << -key.second;
    os << ")";
    if (e != 1) os << "^" << e;
  }
  return os.str();
}

GammaProduct linfty_factors(const RHodgeStructure& m) {
  GammaProduct product;
  for (const auto& [piece, mult] : m.pieces()) {
    if (piece.is_pq()) {
      product.multiply(GammaFlavor::C, piece.p(), mult);
    } else if (piece.eps() == Eps::Plus) {
      product.multiply(GammaFlavor::R, piece.p(), mult);
    } else {
      product.multiply(GammaFlavor::R, piece.p() - 1, mult);
    }
  }
  return product;
}

LeadingTerm factor_leading(GammaFlavor flavor, std::int64_t shift, std::int64_t n) {
  const auto at = checked_add(n, -shift);
  return flavor == GammaFlavor::R ? gamma_r_leading(at) : gamma_c_leading(at);
}

LeadingTerm product_leading(const GammaProduct& product, std::int64_t n) {
  auto acc = LeadingTerm::unit();
  for (const auto& f : product.factors()) acc = lt_combine(acc, factor_leading(f.flavor, f.shift, n), f.exponent);
  return acc;
}

ExactScalar pr_ratio_direct(const RHodgeStructure& m) {
  const auto top = product_leading(linfty_factors(m), 0);
  const auto bottom = product_leading(linfty_factors(dual_twist(m)), 0);
  return top.coeff() / bottom.coeff();
}

ExactScalar pr_ratio_closed(const RHodgeStructure& m) {
  const auto inv = invariants(m);
  auto value = ExactScalar(Rational(2)).pow(inv.d_plus - inv.d_minus) *
               ExactScalar::two_pi_power(checked_add(inv.d_minus, inv.t_H));
  for (const auto& [j, hj] : inv.h) value *= gamma_star(-j).pow(hj);
  return value.abs();
}

}  // namespace archfe
