// Exact leading terms of Gamma, Gamma_R and Gamma_C at integer points, and the
// archimedean L-factor of a pure R-Hodge structure.
//
//   Gamma_R(s) = pi^{-s/2} Gamma(s/2)
//   Gamma_C(s) = 2 (2 pi)^{-s} Gamma(s)
#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "archfe/exact.hpp"
#include "archfe/hodge.hpp"

namespace archfe {

/// Leading coefficient of Gamma at an integer j: (j-1)! for j >= 1 and
/// (-1)^j / (-j)! at the pole j <= 0.
ExactScalar gamma_star(std::int64_t j);

/// Leading term of Gamma(z) at z = doubled_z / 2, in the local variable
/// (z - doubled_z/2). Half integers carry one sqrt(pi).
LeadingTerm gamma_leading_half(std::int64_t doubled_z);

/// Leading term of Gamma_R(s) at s = n, in the variable (s - n).
LeadingTerm gamma_r_leading(std::int64_t n);
/// Leading term of Gamma_C(s) at s = n, in the variable (s - n).
LeadingTerm gamma_c_leading(std::int64_t n);

enum class GammaFlavor : int { R = 0, C = 1 };

/// Gamma_flavor(s - shift)^exponent.
struct GammaFactor {
  GammaFlavor flavor;
  std::int64_t shift;
  std::int64_t exponent;

  friend bool operator==(const GammaFactor&, const GammaFactor&) = default;
};

/// A finite product of Gamma factors, merged on (flavor, shift) with no zero
/// exponents.
class GammaProduct {
 public:
  using Key = std::pair<GammaFlavor, std::int64_t>;

  GammaProduct() = default;

  GammaProduct& multiply(GammaFlavor flavor, std::int64_t shift, std::int64_t exponent);
  GammaProduct& multiply(const GammaProduct& other, std::int64_t exponent = 1);

  std::vector<GammaFactor> factors() const;
  bool empty() const noexcept { return exponents_.empty(); }

  friend bool operator==(const GammaProduct&, const GammaProduct&) = default;

  /// e.g. "Gamma_R(s)^2 * Gamma_C(s+1)^-1"; "1" when empty.
  std::string to_string() const;

 private:
  std::map<Key, std::int64_t> exponents_;
};

/// L_inf(M, s): M_{p,q} -> Gamma_C(s-p), M_{p,+} -> Gamma_R(s-p),
/// M_{p,-} -> Gamma_R(s-p+1), multiplicities as exponents.
GammaProduct linfty_factors(const RHodgeStructure& m);

/// Leading term of a single factor Gamma_flavor(s - shift) at s = n.
LeadingTerm factor_leading(GammaFlavor flavor, std::int64_t shift, std::int64_t n);

/// Leading term of the product at s = n.
LeadingTerm product_leading(const GammaProduct& product, std::int64_t n);

/// L*_inf(M,0) / L*_inf(M^*(1),0), computed from the two Gamma products.
ExactScalar pr_ratio_direct(const RHodgeStructure& m);

/// The closed form 2^{d_+ - d_-} (2 pi)^{d_- + t_H} prod_j Gamma*(-j)^{h_j},
/// positive representative.
ExactScalar pr_ratio_closed(const RHodgeStructure& m);

}  // namespace archfe
