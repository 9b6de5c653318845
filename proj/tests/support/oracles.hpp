// Independent reference computations used by the unit and acceptance tests.
// Nothing here calls the routine it is meant to check.
#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include <mpfr.h>

#include "archfe/exact.hpp"
#include "archfe/hodge.hpp"
#include "archfe/numberfield.hpp"
#include "archfe/oracle.hpp"

namespace archfe::testing {

using Matrix = std::vector<std::vector<Integer>>;

/// Fraction-free Gaussian elimination with row pivoting.
Integer bareiss_determinant(Matrix m);

/// det of the Sylvester matrix of f and g.
Integer sylvester_resultant(const IntPolynomial& f, const IntPolynomial& g);

/// (-1)^{m(m-1)/2} Res(f, f') / lc(f) with the resultant from the Sylvester matrix.
Integer sylvester_discriminant(const IntPolynomial& f);

/// Power sums p_0..p_{count-1} of the roots of a monic f (Newton's identities).
std::vector<Integer> newton_power_sums(const IntPolynomial& f, std::size_t count);

/// Trace form Tr(x^{i+j}) on Z[x]/(f), monic f.
Matrix trace_matrix(const IntPolynomial& f);

/// Index of j Z[x]/(f) inside its trace dual: |det(j T)|.
Integer thh_lattice_index(const IntPolynomial& f, std::int64_t j);

/// Real roots of a squarefree f by Descartes bisection on (-B, B).
std::int64_t bisection_real_roots(const IntPolynomial& f);

/// Gamma*(j) from the factorial / residue definition.
ExactScalar gamma_star_reference(std::int64_t j);

/// Last column of the table of simple-piece quotients L*(M,0)/L*(M*(1),0),
/// positive representative.
ExactScalar proof_table_row(const SimplePiece& piece);

/// 2^{d+ - d-} (2 pi)^{d- + t_H} prod Gamma*(-j)^{h_j} from the invariants.
ExactScalar closed_form_from_invariants(const HodgeInvariants& inv);

/// Simple pieces with indices in [lo, hi].
std::vector<SimplePiece> simple_pieces(std::int64_t lo, std::int64_t hi);

using Multiset = std::vector<std::pair<SimplePiece, std::int64_t>>;

/// 1..max_distinct distinct simple pieces with indices in [lo, hi] and
/// multiplicities in [1, max_mult]; weights are mixed.
Multiset random_multiset(std::mt19937_64& rng, int max_distinct, std::int64_t lo, std::int64_t hi,
                         std::int64_t max_mult);

/// A random R-Hodge structure of weight w whose indices lie in [lo, hi].
RHodgeStructure random_structure(std::mt19937_64& rng, std::int64_t w, std::int64_t lo, std::int64_t hi,
                                 int max_distinct);

/// Gamma(z) by MPFR's own implementation, for cross-checks of the oracle.
oracle::BigFloat mpfr_gamma_reference(const oracle::BigFloat& z);

}  // namespace archfe::testing
